//! Products of substituted sequences, `a(z^m) b(z^n)`, and when two such
//! products are trivially equicorrelational.

use serde::Serialize;

use crate::class::{divide_seq, gcd_seq};
use crate::error::{Error, Result};
use crate::seq::{equicorrelational, IntLaurentSeq};

/// `a(z^m) b(z)`. With `a`, `b` binary and `m = len(b)` the result is binary
/// of length `len(a) * len(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionSpec {
    pub a: IntLaurentSeq,
    pub b: IntLaurentSeq,
    pub m: usize,
}

impl CompositionSpec {
    /// The concatenation-style spec, `m = len(b)`.
    pub fn stacked(a: IntLaurentSeq, b: IntLaurentSeq) -> Self {
        let m = b.len();
        Self { a, b, m }
    }

    pub fn composite(&self) -> Result<IntLaurentSeq> {
        compose(&self.a, &self.b, self.m)
    }

    /// Whether the composite is guaranteed to keep the alphabet of `a`, `b`.
    pub fn keeps_alphabet(&self) -> bool {
        !self.b.is_zero() && self.m == self.b.len()
    }
}

pub fn compose(a: &IntLaurentSeq, b: &IntLaurentSeq, m: usize) -> Result<IntLaurentSeq> {
    if m == 0 {
        return Err(Error::ZeroSubstitution);
    }
    Ok(&a.substitute(m as i64)? * b)
}

/// `a(z^m) b(z^n)` for nonzero `m`, `n`.
pub fn compose_general(a: &IntLaurentSeq, m: i64, b: &IntLaurentSeq, n: i64) -> Result<IntLaurentSeq> {
    Ok(&a.substitute(m)? * &b.substitute(n)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "detail", rename_all = "snake_case")]
pub enum EquicorrVerdict {
    Equicorrelational,
    /// The composites differ in autocorrelation; impossible when the
    /// preconditions hold.
    Violation,
    Precondition(String),
}

/// Checks that `a(z^m) b(z^n)` and `c(z^m) d(z^n)` are equicorrelational
/// given `a ~ c` and `b ~ d`.
pub fn compose_preserves_equicorr(
    a: &IntLaurentSeq,
    b: &IntLaurentSeq,
    c: &IntLaurentSeq,
    d: &IntLaurentSeq,
    m: i64,
    n: i64,
) -> Result<EquicorrVerdict> {
    if !equicorrelational(a, c) {
        return Ok(EquicorrVerdict::Precondition("a is not equicorrelational to c".into()));
    }
    if !equicorrelational(b, d) {
        return Ok(EquicorrVerdict::Precondition("b is not equicorrelational to d".into()));
    }
    let f = compose_general(a, m, b, n)?;
    let g = compose_general(c, m, d, n)?;
    Ok(if equicorrelational(&f, &g) {
        EquicorrVerdict::Equicorrelational
    } else {
        EquicorrVerdict::Violation
    })
}

fn cofactors(x: &IntLaurentSeq, y: &IntLaurentSeq) -> (IntLaurentSeq, IntLaurentSeq) {
    let s = gcd_seq(x, y);
    let xs = divide_seq(x, &s).expect("gcd divides its arguments");
    let ys = divide_seq(y, &s).expect("gcd divides its arguments");
    (xs, ys)
}

/// Whether `a(z^m) b(z^n)` and `c(z^m) d(z^n)` are associates, decided from
/// the cofactors of `gcd(a, c)` and `gcd(b, d)` without forming the
/// products.
pub fn associate_by_cofactors(
    a: &IntLaurentSeq,
    b: &IntLaurentSeq,
    c: &IntLaurentSeq,
    d: &IntLaurentSeq,
    m: i64,
    n: i64,
) -> Result<bool> {
    if m == 0 || n == 0 {
        return Err(Error::ZeroSubstitution);
    }
    let f_zero = a.is_zero() || b.is_zero();
    let g_zero = c.is_zero() || d.is_zero();
    if f_zero || g_zero {
        return Ok(f_zero && g_zero);
    }
    let (alpha, gamma) = cofactors(a, c);
    let (beta, delta) = cofactors(b, d);
    Ok(alpha.substitute(m)?.is_associate_of(&delta.substitute(n)?)
        && beta.substitute(n)?.is_associate_of(&gamma.substitute(m)?))
}

/// Whether `a(z^m) b(z^n)` and `c(z^m) d(z^n)` are trivially
/// equicorrelational: associates directly, or after conjugating `c` and `d`.
pub fn trivial_by_cofactors(
    a: &IntLaurentSeq,
    b: &IntLaurentSeq,
    c: &IntLaurentSeq,
    d: &IntLaurentSeq,
    m: i64,
    n: i64,
) -> Result<bool> {
    Ok(associate_by_cofactors(a, b, c, d, m, n)?
        || associate_by_cofactors(a, b, &c.conjugate(), &d.conjugate(), m, n)?)
}

/// For equicorrelational `k`-ary pairs `a ~ c` of length `l` and `b ~ d` of
/// length `m`, decides whether `a(z^m) b(z)` and `c(z^m) d(z)` are
/// trivially equicorrelational.
pub fn stacked_triviality(
    a: &IntLaurentSeq,
    b: &IntLaurentSeq,
    c: &IntLaurentSeq,
    d: &IntLaurentSeq,
    m: usize,
) -> Result<bool> {
    if a.is_zero() || b.is_zero() || c.is_zero() || d.is_zero() {
        return Err(Error::Precondition("inputs must be nonzero".into()));
    }
    if a.len() != c.len() {
        return Err(Error::Precondition(format!(
            "a and c have lengths {} and {}",
            a.len(),
            c.len()
        )));
    }
    if b.len() != m || d.len() != m {
        return Err(Error::Precondition(format!(
            "b and d must have length m = {m}, found {} and {}",
            b.len(),
            d.len()
        )));
    }
    if ![a, b, c, d].iter().all(|x| x.is_binary()) {
        return Err(Error::Precondition("inputs must all be binary".into()));
    }
    if !equicorrelational(a, c) || !equicorrelational(b, d) {
        return Err(Error::Precondition("pairs must be equicorrelational".into()));
    }
    let direct = a.is_associate_of(c) && b.is_associate_of(d);
    let conjugate = a.is_associate_of(&c.conjugate()) && b.is_associate_of(&d.conjugate());
    Ok(direct || conjugate)
}

/// Whether two sequences are nontrivially equicorrelational.
pub fn nontrivially_equicorrelational(f: &IntLaurentSeq, g: &IntLaurentSeq) -> bool {
    equicorrelational(f, g) && f.canonical_trivial() != g.canonical_trivial()
}

/// Stacks `n / m` copies of each member of a nontrivially equicorrelational
/// binary pair of length `m`; the copies are again nontrivially
/// equicorrelational.
pub fn lift_equivocal_pair(
    b: &IntLaurentSeq,
    d: &IntLaurentSeq,
    n: usize,
) -> Result<(IntLaurentSeq, IntLaurentSeq)> {
    if !b.is_binary() || !d.is_binary() || b.len() != d.len() {
        return Err(Error::Precondition("expected two binary sequences of one length".into()));
    }
    let m = b.len();
    if n == 0 || !n.is_multiple_of(m) {
        return Err(Error::NotMultiple { len: m, target: n });
    }
    if !nontrivially_equicorrelational(b, d) {
        return Err(Error::NotNontrivial);
    }
    let ones = IntLaurentSeq::all_ones(n / m);
    let f = compose(&ones, &b.shift(-b.offset()), m)?;
    let g = compose(&ones, &d.shift(-d.offset()), m)?;
    if !nontrivially_equicorrelational(&f, &g) {
        return Err(Error::Precondition("lifted pair is not nontrivially equicorrelational".into()));
    }
    Ok((f, g))
}
