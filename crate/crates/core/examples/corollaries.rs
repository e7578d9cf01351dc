//! Palindromes against antipalindromes, and generalized palindromes inside
//! computed classes.

use equicorr::class::{check_palindrome_corollaries, CorollaryVerdict};
use equicorr::search::{contains_generalized_palindrome, enumerate_canonical, find_nontrivial_classes};

fn main() -> equicorr::Result<()> {
    let n = 10;
    let gp: Vec<_> = (0..1u64 << n)
        .map(|bits| equicorr::BinarySeq::new(bits, n).unwrap())
        .filter(|f| f.is_palindrome() || f.is_antipalindrome())
        .map(|f| f.to_seq())
        .collect();
    let mut tally = std::collections::BTreeMap::new();
    for f in &gp {
        for g in &gp {
            let key = match check_palindrome_corollaries(f, g) {
                CorollaryVerdict::Violation(msg) => panic!("{msg}"),
                v => format!("{v:?}"),
            };
            *tally.entry(key).or_insert(0) += 1;
        }
    }
    println!("{} generalized palindromes of length {n}: {tally:?}", gp.len());

    for n in 1..=20 {
        let classes = find_nontrivial_classes(n)?;
        let odd = classes.iter().filter(|c| c.volume() % 2 == 1).count();
        let pal = classes.iter().filter(|c| contains_generalized_palindrome(c)).count();
        let canon = enumerate_canonical(n)?.count();
        println!("{n:>3}: {canon:>7} canonical, {:>3} classes, odd {odd}, palindromic {pal}", classes.len());
    }
    Ok(())
}
