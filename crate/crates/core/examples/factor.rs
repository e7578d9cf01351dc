//! Irreducible factorization over the integers.
//!
//! cargo run --example factor -- "1,0,0,0,0,0,-1"

use equicorr::{factor, parse_literal};

fn main() -> equicorr::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "++++++".to_string());
    let f = parse_literal(&text)?;
    let fact = factor(&f)?;
    println!("{}", f.render_poly());
    println!("  = {} * {} * z^{}", fact.sign, fact.content, fact.shift);
    for (g, e) in &fact.factors {
        println!("    * ({})^{e}", g.render_poly());
    }
    assert_eq!(fact.reconstruct(), f);
    Ok(())
}
