//! Factorization of integer Laurent polynomials into irreducibles over Q.
//!
//! The pipeline is the classical one: strip the unit and content, take a
//! squarefree decomposition, factor each squarefree part modulo a small
//! prime (distinct-degree then equal-degree splitting), Hensel-lift the
//! modular factors past a coefficient bound, and recombine subsets of lifted
//! factors into true factors, smallest subsets first.

pub mod dense;
mod hensel;
pub mod zp;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::seq::IntLaurentSeq;
use dense::Poly;
use zp::{Zp, ZpPoly};

/// Number of good primes tried before committing to the one with the
/// fewest modular factors.
const PRIME_CANDIDATES: usize = 5;

/// Fixed seed for equal-degree splitting.
const SPLIT_SEED: u64 = 0x5EED_0FC0_FFEE;

/// `sign * z^shift * content * prod(factor^multiplicity)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleFactorization {
    pub sign: i8,
    pub shift: i64,
    pub content: BigInt,
    /// Primitive irreducible factors with positive constant coefficient,
    /// pairwise non-associate, sorted by [`crate::seq::lex_cmp`].
    pub factors: Vec<(IntLaurentSeq, u32)>,
}

impl IrreducibleFactorization {
    pub fn reconstruct(&self) -> IntLaurentSeq {
        let unit = IntLaurentSeq::monomial(&self.content * BigInt::from(self.sign), self.shift);
        self.factors
            .iter()
            .fold(unit, |acc, (f, m)| &acc * &f.pow(*m))
    }

    /// Sum of `multiplicity * degree` over the factors.
    pub fn total_degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(f, m)| (f.len() - 1) * *m as usize)
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(f, m)| std::iter::repeat_n(f.len() - 1, *m as usize))
            .collect();
        d.sort_unstable();
        d
    }
}

/// Squarefree decomposition `sign * prod(part^multiplicity)` of a primitive
/// polynomial. Parts are pairwise coprime, squarefree, have positive leading
/// coefficient, and are listed by increasing multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub sign: i8,
    pub parts: Vec<(Poly, u32)>,
}

impl SquarefreeDecomposition {
    pub fn reconstruct(&self) -> Poly {
        let start = vec![BigInt::from(self.sign)];
        self.parts
            .iter()
            .fold(start, |acc, (p, m)| dense::mul(&acc, &dense::pow(p, *m)))
    }
}

fn positive_leading(p: Poly) -> Poly {
    if p.last().is_some_and(Signed::is_negative) {
        p.iter().map(|c| -c).collect()
    } else {
        p
    }
}

/// Yun's algorithm over Z, using primitive gcds and exact division.
pub fn squarefree_decompose(p: &[BigInt]) -> Result<SquarefreeDecomposition> {
    if p.is_empty() {
        return Err(Error::ZeroSequence);
    }
    let sign: i8 = if p.last().unwrap().is_negative() { -1 } else { 1 };
    let a = positive_leading(p.to_vec());
    if a.len() == 1 {
        return Ok(SquarefreeDecomposition { sign, parts: Vec::new() });
    }
    let da = dense::derivative(&a);
    let g = dense::gcd(&a, &da);
    let mut parts = Vec::new();
    if g.len() == 1 {
        parts.push((a, 1));
        return Ok(SquarefreeDecomposition { sign, parts });
    }
    let mut b = dense::exact_div(&a, &g).expect("gcd divides input");
    let c = dense::exact_div(&da, &g).expect("gcd divides derivative");
    let mut d = dense::sub(&c, &dense::derivative(&b));
    let mut i = 1;
    while b.len() > 1 {
        let gi = dense::gcd(&b, &d);
        let next_b = dense::exact_div(&b, &gi).expect("gcd divides b");
        let ci = dense::exact_div(&d, &gi).expect("gcd divides d");
        d = dense::sub(&ci, &dense::derivative(&next_b));
        if gi.len() > 1 {
            parts.push((positive_leading(gi), i));
        }
        b = next_b;
        i += 1;
    }
    // The primitive gcds may flip the overall sign; fix it against the input.
    let rebuilt = SquarefreeDecomposition { sign: 1, parts: parts.clone() }.reconstruct();
    let sign = if rebuilt == p { 1 } else { -1 };
    Ok(SquarefreeDecomposition { sign, parts })
}

/// Complete monic factorization of `p` modulo the odd prime `q`.
///
/// Fails with [`Error::BadPrime`] when `q` divides the leading coefficient or
/// `p` is not squarefree mod `q`. Output is sorted for reproducibility.
pub fn factor_mod_p(p: &[BigInt], q: u64) -> Result<Vec<ZpPoly>> {
    if !zp::is_odd_prime(q) || q >= 1 << 31 {
        return Err(Error::NotOddPrime(q));
    }
    let field = Zp::new(q);
    let reduced = field.reduce(p);
    if reduced.len() != p.len() || reduced.is_empty() {
        return Err(Error::BadPrime(q));
    }
    if !field.is_squarefree(&reduced) {
        return Err(Error::BadPrime(q));
    }
    let monic = field.monic(&reduced);
    if monic.len() == 2 {
        return Ok(vec![monic]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED ^ q);
    let mut out = Vec::new();
    for (prod, d) in field.distinct_degree(&monic) {
        out.extend(field.equal_degree(&prod, d, &mut rng));
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Irreducible factors of a primitive squarefree polynomial of positive
/// degree with nonzero constant term.
fn factor_squarefree(f: &[BigInt]) -> Vec<Poly> {
    if f.len() == 2 {
        return vec![f.to_vec()];
    }
    let mut best: Option<(u64, Vec<ZpPoly>)> = None;
    let mut good = 0;
    let mut q = 2;
    while good < PRIME_CANDIDATES {
        q = zp::next_odd_prime(q);
        let Ok(factors) = factor_mod_p(f, q) else { continue };
        good += 1;
        if factors.len() == 1 {
            return vec![f.to_vec()];
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((q, factors));
        }
    }
    let (q, modular) = best.expect("some prime is good for a squarefree polynomial");
    let (steps, modulus) = hensel::lifting_steps(f, q);
    let lifted = hensel::multifactor_lift(f, &modular, Zp::new(q), steps);
    hensel::recombine(f, lifted, &modulus)
}

fn positive_constant(p: Poly) -> Poly {
    if p[0].is_negative() {
        p.iter().map(|c| -c).collect()
    } else {
        p
    }
}

/// Factors a nonzero integer Laurent polynomial into sign, power of `z`,
/// content and primitive irreducibles with positive constant coefficient.
pub fn factor(f: &IntLaurentSeq) -> Result<IrreducibleFactorization> {
    if f.is_zero() {
        return Err(Error::ZeroSequence);
    }
    let content = f.content();
    let prim: Poly = f.coeffs().iter().map(|c| c / &content).collect();
    let sign: i8 = if prim[0].is_negative() { -1 } else { 1 };
    let mut factors: Vec<(IntLaurentSeq, u32)> = Vec::new();
    let sqf = squarefree_decompose(&prim)?;
    for (part, mult) in &sqf.parts {
        for g in factor_squarefree(part) {
            factors.push((IntLaurentSeq::from_poly(positive_constant(g)), *mult));
        }
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(IrreducibleFactorization {
        sign,
        shift: f.offset(),
        content,
        factors,
    })
}

/// True iff the primitive polynomial has no nontrivial factorization.
pub fn is_irreducible(f: &IntLaurentSeq) -> Result<bool> {
    let fact = factor(f)?;
    Ok(fact.factors.len() == 1 && fact.factors[0].1 == 1 && fact.content.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        dense::from_i64s(c)
    }

    fn seq(c: &[i64]) -> IntLaurentSeq {
        IntLaurentSeq::from_i64s(0, c)
    }

    #[test]
    fn squarefree_examples() {
        // (z-1)^2 (z+1) = z^3 - z^2 - z + 1
        let d = squarefree_decompose(&p(&[1, -1, -1, 1])).unwrap();
        assert_eq!(d.parts, vec![(p(&[1, 1]), 1), (p(&[-1, 1]), 2)]);
        assert_eq!(d.reconstruct(), p(&[1, -1, -1, 1]));
        let sq = p(&[3, 1, 1]);
        assert_eq!(squarefree_decompose(&sq).unwrap().parts, vec![(sq.clone(), 1)]);
        assert_eq!(squarefree_decompose(&[]), Err(Error::ZeroSequence));
        let neg = p(&[-1, 2, -1]); // -(z-1)^2
        let d = squarefree_decompose(&neg).unwrap();
        assert_eq!(d.reconstruct(), neg);
    }

    /// Monic (x - r) pairs over F_5 whose product is x^2 + 1.
    fn brute_force_roots_of_x2_plus_1(q: u64) -> Vec<ZpPoly> {
        let mut roots = Vec::new();
        for r in 0..q {
            if (r * r + 1) % q == 0 {
                roots.push(vec![(q - r) % q, 1]);
            }
        }
        roots.sort();
        roots
    }

    #[test]
    fn mod_p_examples() {
        let f = p(&[1, 0, 1]);
        let got = factor_mod_p(&f, 5).unwrap();
        assert_eq!(got, brute_force_roots_of_x2_plus_1(5));
        assert_eq!(got, vec![vec![2, 1], vec![3, 1]]);
        assert!(brute_force_roots_of_x2_plus_1(3).is_empty());
        assert_eq!(factor_mod_p(&f, 3).unwrap(), vec![vec![1, 0, 1]]);
        assert_eq!(factor_mod_p(&p(&[4, 2]), 7).unwrap(), vec![vec![2, 1]]);
    }

    #[test]
    fn mod_p_rejects_bad_primes() {
        // leading coefficient 3 vanishes mod 3
        assert_eq!(factor_mod_p(&p(&[1, 1, 3]), 3), Err(Error::BadPrime(3)));
        // (z+1)^2 is not squarefree anywhere
        assert_eq!(factor_mod_p(&p(&[1, 2, 1]), 5), Err(Error::BadPrime(5)));
        // x^2 + 1 = (x+2)^2 - 4x - 3 ... mod 2 excluded as even
        assert_eq!(factor_mod_p(&p(&[1, 0, 1]), 2), Err(Error::NotOddPrime(2)));
    }

    #[test]
    fn difference_of_squares() {
        let f = seq(&[-1, 0, 1]);
        let fact = factor(&f).unwrap();
        assert_eq!(fact.sign, -1);
        assert_eq!(fact.factors, vec![(seq(&[1, -1]), 1), (seq(&[1, 1]), 1)]);
        assert_eq!(fact.reconstruct(), f);
    }

    #[test]
    fn all_ones_length_six_is_cyclotomic() {
        let fact = factor(&seq(&[1; 6])).unwrap();
        let mut got: Vec<IntLaurentSeq> = fact.factors.iter().map(|(f, _)| f.clone()).collect();
        got.sort();
        let mut want = vec![seq(&[1, 1]), seq(&[1, 1, 1]), seq(&[1, -1, 1])];
        want.sort();
        assert_eq!(got, want);
        assert!(fact.factors.iter().all(|(_, m)| *m == 1));
    }

    #[test]
    fn units_and_content() {
        let f = IntLaurentSeq::from_i64s(-3, &[-6]);
        let fact = factor(&f).unwrap();
        assert!(fact.factors.is_empty());
        assert_eq!(fact.sign, -1);
        assert_eq!(fact.content, BigInt::from(6));
        assert_eq!(fact.reconstruct(), f);
        assert_eq!(factor(&IntLaurentSeq::zero()), Err(Error::ZeroSequence));
    }

    #[test]
    fn repeated_factors() {
        // 4 z^2 (z+1)^3 (2z+1)
        let f = &(&seq(&[1, 1]).pow(3) * &seq(&[1, 2])).scale(&BigInt::from(4)).shift(2);
        let fact = factor(f).unwrap();
        assert_eq!(fact.shift, 2);
        assert_eq!(fact.content, BigInt::from(4));
        assert_eq!(fact.factors, vec![(seq(&[1, 1]), 3), (seq(&[1, 2]), 1)]);
        assert_eq!(fact.reconstruct(), *f);
    }
}
