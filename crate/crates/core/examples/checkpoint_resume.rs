//! Interrupts a checkpointed search and resumes it from disk.

use equicorr::search::{search, SearchOptions};

fn main() -> equicorr::Result<()> {
    let n = 21;
    let dir = std::env::temp_dir().join(format!("equicorr-demo-{}", std::process::id()));
    let partial = SearchOptions {
        checkpoint_dir: Some(dir.clone()),
        max_new_shards: Some(200),
        ..Default::default()
    };
    let first = search(n, &partial)?;
    println!("first pass: {}/{} shards", first.shards_done, first.shards);

    let resume = SearchOptions { max_new_shards: None, ..partial };
    let second = search(n, &resume)?;
    println!("resumed: {}/{} shards, {}", second.shards_done, second.shards, second.distribution());

    let fresh = search(n, &SearchOptions::default())?;
    assert_eq!(fresh.classes, second.classes);
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
