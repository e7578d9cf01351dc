//! Full equicorrelationality class of a sequence.
//!
//! cargo run --example classify -- "+---++-++"

use equicorr::class::{enumerate_class, palindromic_split};
use equicorr::{factor, format_literal, parse_literal};

fn main() -> equicorr::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "+---++-++".to_string());
    let f = parse_literal(&text)?;
    if f.is_zero() {
        println!("0 is equicorrelational only to itself");
        return Ok(());
    }
    let split = palindromic_split(&factor(&f)?);
    for p in &split.palindromic {
        println!("palindromic  ({})^{}", p.factor.render_poly(), p.exponent);
    }
    for p in &split.pairs {
        println!("pair         ({})  b={} c={}", p.g.render_poly(), p.b, p.c);
    }
    let report = enumerate_class(&split)?;
    println!("N = {}, nontrivial: {}", report.count, report.nontrivial);
    for rep in &report.associate_reps {
        println!("  b'={:?} c'={:?}  {}", rep.b, rep.c, format_literal(&rep.seq));
    }
    println!("binary members:");
    for m in &report.binary_members {
        println!("  {}", format_literal(m));
    }
    Ok(())
}
