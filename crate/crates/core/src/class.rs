//! Full rational equicorrelationality classes.
//!
//! A nonzero `f` factors as
//! `u * prod f_i^a_i * prod g_j^b_j * conj(g_j)^c_j` where the `f_i` are
//! generalized palindromes and the `g_j` are not. Every sequence sharing the
//! autocorrelation of `f` (up to a positive scalar) is an associate of
//! `prod f_i^a_i * prod g_j^b'_j * conj(g_j)^c'_j` for some `b' + c' = b + c`,
//! which gives `N = prod (b_j + c_j + 1)` associate classes.

use std::cmp::Ordering;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::literal::format_literal;
use crate::poly::{dense, factor, IrreducibleFactorization};
use crate::seq::{equicorrelational, IntLaurentSeq, PalindromeKind};

/// Largest class enumerated before [`Error::ClassTooLarge`] is raised.
pub const CLASS_CAP: u128 = 1_000_000;

/// Canonical associate of a greatest common divisor in Q[z, 1/z];
/// `gcd(0, 0) = 0`.
pub fn gcd_seq(f: &IntLaurentSeq, g: &IntLaurentSeq) -> IntLaurentSeq {
    if f.is_zero() && g.is_zero() {
        return IntLaurentSeq::zero();
    }
    // Powers of z are units, so the offsets do not matter.
    IntLaurentSeq::from_poly(dense::gcd(f.coeffs(), g.coeffs())).canonical_associate()
}

/// Exact quotient `f / g` in Q[z, 1/z] as a canonical associate, when `g`
/// divides `f`.
pub fn divide_seq(f: &IntLaurentSeq, g: &IntLaurentSeq) -> Option<IntLaurentSeq> {
    let fp = f.canonical_associate();
    let gp = g.canonical_associate();
    dense::exact_div(fp.coeffs(), gp.coeffs()).map(|q| IntLaurentSeq::from_poly(q).canonical_associate())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Unit {
    pub sign: i8,
    pub shift: i64,
    #[serde(serialize_with = "ser_bigint")]
    pub content: BigInt,
}

fn ser_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PalindromicFactor {
    pub factor: IntLaurentSeq,
    pub kind: PalindromeKind,
    pub exponent: u32,
}

/// A non-palindromic irreducible `g` together with the canonical form of its
/// conjugate, and their exponents `b` and `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugatePair {
    pub g: IntLaurentSeq,
    pub conj_g: IntLaurentSeq,
    pub b: u32,
    pub c: u32,
}

impl ConjugatePair {
    pub fn total(&self) -> u32 {
        self.b + self.c
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PalindromicSplit {
    pub unit: Unit,
    pub palindromic: Vec<PalindromicFactor>,
    pub pairs: Vec<ConjugatePair>,
}

impl PalindromicSplit {
    pub fn reconstruct(&self) -> IntLaurentSeq {
        let unit = IntLaurentSeq::monomial(
            &self.unit.content * BigInt::from(self.unit.sign),
            self.unit.shift,
        );
        let with_pal = self
            .palindromic
            .iter()
            .fold(unit, |acc, p| &acc * &p.factor.pow(p.exponent));
        self.pairs.iter().fold(with_pal, |acc, pair| {
            &(&acc * &pair.g.pow(pair.b)) * &pair.conj_g.pow(pair.c)
        })
    }

    /// Same split with pair `j` written as `(conj g, g, c, b)`.
    pub fn with_pair_flipped(&self, j: usize) -> Self {
        let mut out = self.clone();
        let p = &mut out.pairs[j];
        std::mem::swap(&mut p.g, &mut p.conj_g);
        std::mem::swap(&mut p.b, &mut p.c);
        out
    }

    fn palindromic_part(&self) -> IntLaurentSeq {
        self.palindromic
            .iter()
            .fold(IntLaurentSeq::one(), |acc, p| &acc * &p.factor.pow(p.exponent))
    }
}

/// Sorts irreducible factors into generalized palindromes and conjugate
/// pairs. In each pair `g` is the smaller of the two canonical forms.
pub fn palindromic_split(fact: &IrreducibleFactorization) -> PalindromicSplit {
    let mut palindromic = Vec::new();
    let mut pairs: Vec<ConjugatePair> = Vec::new();
    for (f, mult) in &fact.factors {
        let conj = f.conjugate().canonical_associate();
        if &conj == f {
            palindromic.push(PalindromicFactor {
                factor: f.clone(),
                kind: f.palindrome_kind(),
                exponent: *mult,
            });
            continue;
        }
        let (g, conj_g, is_g) = match f.cmp(&conj) {
            Ordering::Less => (f.clone(), conj, true),
            _ => (conj, f.clone(), false),
        };
        let pair = match pairs.iter_mut().position(|p| p.g == g) {
            Some(idx) => &mut pairs[idx],
            None => {
                pairs.push(ConjugatePair { g, conj_g, b: 0, c: 0 });
                pairs.last_mut().unwrap()
            }
        };
        if is_g {
            pair.b += mult;
        } else {
            pair.c += mult;
        }
    }
    pairs.sort_by(|x, y| x.g.cmp(&y.g));
    PalindromicSplit {
        unit: Unit {
            sign: fact.sign,
            shift: fact.shift,
            content: fact.content.clone(),
        },
        palindromic,
        pairs,
    }
}

/// `N = prod (b_j + c_j + 1)`, saturating at `u128::MAX`.
pub fn class_count(split: &PalindromicSplit) -> u128 {
    split
        .pairs
        .iter()
        .try_fold(1u128, |acc, p| acc.checked_mul(p.total() as u128 + 1))
        .unwrap_or(u128::MAX)
}

/// One associate class of the enumeration, indexed by `(b', c')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociateRep {
    pub b: Vec<u32>,
    pub c: Vec<u32>,
    pub seq: IntLaurentSeq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquicorrClassReport {
    /// Canonical associate of the analysed sequence.
    pub input: IntLaurentSeq,
    pub count: u128,
    /// All `N` associate classes, in lexicographic order of `b'`.
    pub associate_reps: Vec<AssociateRep>,
    /// `ceil(N/2)` trivial classes in canonical trivial form, from `b' <= c'`.
    pub trivial_reps: Vec<IntLaurentSeq>,
    pub self_conjugate_rep: Option<IntLaurentSeq>,
    pub nontrivial: bool,
    /// One canonical binary sequence per trivial class that contains any.
    pub binary_members: Vec<IntLaurentSeq>,
}

impl EquicorrClassReport {
    /// Number of trivial binary classes inside the class.
    pub fn volume(&self) -> usize {
        self.binary_members.len()
    }

    /// True iff some other binary sequence is nontrivially equicorrelational.
    pub fn is_equivocal(&self) -> bool {
        self.volume() >= 2
    }

    /// The class of the zero sequence, which is `{0}`.
    pub fn zero() -> Self {
        Self {
            input: IntLaurentSeq::zero(),
            count: 1,
            associate_reps: vec![AssociateRep {
                b: Vec::new(),
                c: Vec::new(),
                seq: IntLaurentSeq::zero(),
            }],
            trivial_reps: vec![IntLaurentSeq::zero()],
            self_conjugate_rep: Some(IntLaurentSeq::zero()),
            nontrivial: false,
            binary_members: Vec::new(),
        }
    }
}

fn mixed_radix(mut index: u128, totals: &[u32]) -> Vec<u32> {
    let mut digits = vec![0u32; totals.len()];
    for (d, &t) in digits.iter_mut().zip(totals).rev() {
        let base = t as u128 + 1;
        *d = (index % base) as u32;
        index /= base;
    }
    digits
}

/// Enumerates every associate class of the rational equicorrelationality
/// class described by `split`.
pub fn enumerate_class(split: &PalindromicSplit) -> Result<EquicorrClassReport> {
    let count = class_count(split);
    if count > CLASS_CAP {
        return Err(Error::ClassTooLarge { count, cap: CLASS_CAP });
    }
    let base = split.palindromic_part();
    let totals: Vec<u32> = split.pairs.iter().map(ConjugatePair::total).collect();
    let powers: Vec<(Vec<IntLaurentSeq>, Vec<IntLaurentSeq>)> = split
        .pairs
        .iter()
        .map(|p| {
            let mut gp = vec![IntLaurentSeq::one()];
            let mut cp = vec![IntLaurentSeq::one()];
            for k in 1..=p.total() as usize {
                gp.push(&gp[k - 1] * &p.g);
                cp.push(&cp[k - 1] * &p.conj_g);
            }
            (gp, cp)
        })
        .collect();

    let associate_reps: Vec<AssociateRep> = (0..count)
        .into_par_iter()
        .map(|idx| {
            let b = mixed_radix(idx, &totals);
            let c: Vec<u32> = totals.iter().zip(&b).map(|(t, x)| t - x).collect();
            let seq = b
                .iter()
                .zip(&c)
                .zip(&powers)
                .fold(base.clone(), |acc, ((&bj, &cj), (gp, cp))| {
                    &(&acc * &gp[bj as usize]) * &cp[cj as usize]
                })
                .canonical_associate();
            AssociateRep { b, c, seq }
        })
        .collect();

    let trivial_reps: Vec<IntLaurentSeq> = associate_reps
        .iter()
        .filter(|r| r.b <= r.c)
        .map(|r| r.seq.canonical_trivial())
        .collect();
    let self_conjugate_rep = associate_reps
        .iter()
        .find(|r| r.b == r.c)
        .map(|r| r.seq.clone());

    let mut report = EquicorrClassReport {
        input: split.reconstruct().canonical_associate(),
        count,
        associate_reps,
        trivial_reps,
        self_conjugate_rep,
        nontrivial: count >= 3,
        binary_members: Vec::new(),
    };
    report.binary_members = binary_members(&report);
    Ok(report)
}

/// Canonical binary representatives of the trivial classes of a report,
/// sorted. Only content-1 sequences with all terms `+1`/`-1` and no gaps
/// qualify; a rational rescaling cannot make anything else binary.
pub fn binary_members(report: &EquicorrClassReport) -> Vec<IntLaurentSeq> {
    let mut out: Vec<IntLaurentSeq> = report
        .trivial_reps
        .iter()
        .filter(|s| s.content() == BigInt::from(1) && s.is_binary())
        .cloned()
        .collect();
    out.sort();
    out
}

/// Runs factor, split and enumeration on one sequence.
pub fn classify(f: &IntLaurentSeq) -> Result<EquicorrClassReport> {
    if f.is_zero() {
        return Ok(EquicorrClassReport::zero());
    }
    let fact = factor(f)?;
    enumerate_class(&palindromic_split(&fact))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorollaryVerdict {
    /// Both sequences are zero.
    Exempt,
    /// At least one input is not a generalized palindrome.
    NotApplicable,
    NotEquicorrelational,
    /// Equicorrelational generalized palindromes that are associates.
    Associates,
    Violation(String),
}

/// Checks that equicorrelational generalized palindromes are associates and
/// that a palindrome is never equicorrelational to an antipalindrome.
pub fn check_palindrome_corollaries(f: &IntLaurentSeq, g: &IntLaurentSeq) -> CorollaryVerdict {
    if f.is_zero() && g.is_zero() {
        return CorollaryVerdict::Exempt;
    }
    let (kf, kg) = (f.palindrome_kind(), g.palindrome_kind());
    if !kf.is_generalized_palindrome() || !kg.is_generalized_palindrome() {
        return CorollaryVerdict::NotApplicable;
    }
    let equi = equicorrelational(f, g);
    if !equi {
        return CorollaryVerdict::NotEquicorrelational;
    }
    let mixed = matches!(
        (kf, kg),
        (PalindromeKind::Palindrome, PalindromeKind::Antipalindrome)
            | (PalindromeKind::Antipalindrome, PalindromeKind::Palindrome)
    );
    if mixed {
        return CorollaryVerdict::Violation(format!(
            "palindrome/antipalindrome pair {} and {} share an autocorrelation",
            format_literal(f),
            format_literal(g)
        ));
    }
    if f.is_associate_of(g) {
        CorollaryVerdict::Associates
    } else {
        CorollaryVerdict::Violation(format!(
            "equicorrelational generalized palindromes {} and {} are not associates",
            format_literal(f),
            format_literal(g)
        ))
    }
}
