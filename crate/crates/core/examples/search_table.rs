//! Prints the volume distribution of nontrivial binary classes per length.
//!
//! cargo run --release --example search_table -- 1 21

use std::time::Instant;

use equicorr::search::{search, SearchOptions};

fn main() -> equicorr::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (lo, hi) = match args.as_slice() {
        [] => (1, 18),
        [n] => (*n, *n),
        [a, b, ..] => (*a, *b),
    };
    let opts = SearchOptions { force: true, ..Default::default() };
    for n in lo..=hi {
        let start = Instant::now();
        let out = search(n, &opts)?;
        println!(
            "{n:>3}  {:<24} canonical {:>10}  shards {:>5}  {:.2?}",
            out.distribution().to_string(),
            out.canonical,
            out.shards,
            start.elapsed()
        );
    }
    Ok(())
}
