//! Lifts an equivocal pair to multiples of its length, and compares the
//! closed-form triviality test with a direct check on the composites.

use equicorr::compose::{compose, lift_equivocal_pair, stacked_triviality, nontrivially_equicorrelational};
use equicorr::search::find_nontrivial_classes;

fn main() -> equicorr::Result<()> {
    let class = &find_nontrivial_classes(9)?[0];
    let (b, d) = (class.members[0].to_seq(), class.members[1].to_seq());
    println!("length 9: {} ~ {}", class.members[0], class.members[1]);

    for n in [18, 27, 36] {
        let (f, g) = lift_equivocal_pair(&b, &d, n)?;
        println!("length {n}: nontrivial {}", nontrivially_equicorrelational(&f, &g));
    }

    let a = equicorr::parse_literal("++-")?;
    for (c, dd) in [(&a, &b), (&a, &d)] {
        let verdict = stacked_triviality(&a, &b, c, dd, 9)?;
        let f = compose(&a, &b, 9)?;
        let g = compose(c, dd, 9)?;
        println!(
            "closed form trivial: {verdict}, direct trivial: {}",
            f.canonical_trivial() == g.canonical_trivial()
        );
    }
    Ok(())
}
