//! Integer-coefficient Laurent polynomials viewed as finitely supported
//! doubly infinite sequences.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::dense;

/// A finitely supported integer sequence `sum_j f_j z^j`.
///
/// `coeffs[0]` is the coefficient of `z^offset`. Both ends of `coeffs` are
/// nonzero; the zero sequence has no coefficients and offset 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntLaurentSeq {
    offset: i64,
    coeffs: Vec<BigInt>,
}

/// Coarse classification of a sequence's alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeqKind {
    Zero,
    /// Every term is +1 or -1 and the support is a segment.
    Binary,
    /// Support is a segment but some term is outside {+1, -1}.
    ContiguousInteger,
    /// Support has gaps.
    GeneralInteger,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PalindromeKind {
    Palindrome,
    Antipalindrome,
    /// Generalized palindrome with a unit that is neither `z^j` nor `-z^j`.
    /// Unreachable for integer coefficients; kept so the classification is
    /// total over the complex case.
    GeneralizedOther,
    None,
}

impl PalindromeKind {
    pub fn is_generalized_palindrome(self) -> bool {
        !matches!(self, PalindromeKind::None)
    }
}

impl IntLaurentSeq {
    pub fn new(offset: i64, coeffs: Vec<BigInt>) -> Self {
        let mut coeffs = coeffs;
        dense::trim(&mut coeffs);
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        Self {
            offset: offset + lead_zeros as i64,
            coeffs,
        }
    }

    pub fn from_i64s(offset: i64, coeffs: &[i64]) -> Self {
        Self::new(offset, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds an ordinary polynomial (offset 0) from coefficients lowest first.
    pub fn from_poly(coeffs: Vec<BigInt>) -> Self {
        Self::new(0, coeffs)
    }

    pub fn zero() -> Self {
        Self {
            offset: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, exponent: i64) -> Self {
        Self::new(exponent, vec![c])
    }

    /// The all-ones sequence `1 + z + ... + z^(len-1)`.
    pub fn all_ones(len: usize) -> Self {
        Self::new(0, vec![BigInt::one(); len])
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Size of the smallest segment containing the support.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Coefficient of `z^exponent`.
    pub fn coeff(&self, exponent: i64) -> BigInt {
        let idx = exponent - self.offset;
        if idx < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_default()
    }

    /// Highest exponent with a nonzero coefficient (offset for zero).
    pub fn top_exponent(&self) -> i64 {
        self.offset + self.coeffs.len().max(1) as i64 - 1
    }

    pub fn kind(&self) -> SeqKind {
        if self.is_zero() {
            SeqKind::Zero
        } else if self.coeffs.iter().any(Zero::is_zero) {
            SeqKind::GeneralInteger
        } else if self.coeffs.iter().all(|c| c.abs().is_one()) {
            SeqKind::Binary
        } else {
            SeqKind::ContiguousInteger
        }
    }

    pub fn is_binary(&self) -> bool {
        self.kind() == SeqKind::Binary
    }

    /// `f(z) -> f(z^-1)` with conjugated terms; for integers, reversal.
    pub fn conjugate(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self {
            offset: -self.top_exponent(),
            coeffs,
        }
    }

    pub fn shift(&self, by: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            offset: self.offset + by,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.offset, dense::scale(&self.coeffs, c))
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::new(self.offset * e as i64, dense::pow(&self.coeffs, e))
    }

    /// Returns `f(z^m)`.
    pub fn substitute(&self, m: i64) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroSubstitution);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let step = m.unsigned_abs() as usize;
        let mut coeffs = vec![BigInt::zero(); (self.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * step] = c.clone();
        }
        let spread = Self {
            offset: self.offset * m.abs(),
            coeffs,
        };
        Ok(if m < 0 { spread.conjugate() } else { spread })
    }

    /// The autocorrelation function `f * conj(f)`.
    pub fn autocorrelation(&self) -> AutocorrFunction {
        AutocorrFunction(self * &self.conjugate())
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        dense::content(&self.coeffs)
    }

    /// Canonical member of the rational associate class among primitive
    /// integer sequences: offset 0, content 1, positive constant coefficient.
    pub fn canonical_associate(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = dense::primitive_part(&self.coeffs);
        if coeffs[0].is_negative() {
            for c in coeffs.iter_mut() {
                *c = -&*c;
            }
        }
        Self { offset: 0, coeffs }
    }

    /// Canonical member of the trivial equicorrelationality class: the
    /// smaller of the canonical associates of `f` and `conj(f)`.
    pub fn canonical_trivial(&self) -> Self {
        let a = self.canonical_associate();
        let b = self.conjugate().canonical_associate();
        if lex_cmp(&a, &b) == Ordering::Greater {
            b
        } else {
            a
        }
    }

    pub fn is_associate_of(&self, other: &Self) -> bool {
        self.canonical_associate() == other.canonical_associate()
    }

    pub fn palindrome_kind(&self) -> PalindromeKind {
        if self.is_zero() {
            // 0 is both; report the first.
            return PalindromeKind::Palindrome;
        }
        let n = self.len();
        let pal = (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i]);
        if pal {
            return PalindromeKind::Palindrome;
        }
        let anti = (0..n.div_ceil(2)).all(|i| self.coeffs[i] == -&self.coeffs[n - 1 - i]);
        if anti {
            PalindromeKind::Antipalindrome
        } else {
            PalindromeKind::None
        }
    }

    /// True iff the autocorrelation functions agree up to a positive scalar.
    pub fn equicorrelational(&self, other: &Self) -> bool {
        equicorrelational(self, other)
    }

    /// Renders as an ordinary polynomial times a power of z.
    pub fn render_poly(&self) -> String {
        let body = dense::render(&self.coeffs);
        if self.offset == 0 || self.is_zero() {
            body
        } else {
            format!("z^{} ({body})", self.offset)
        }
    }
}

/// Lexicographic order on coefficient lists, shorter first on prefix ties.
/// Offsets are compared last so the order stays total.
pub fn lex_cmp(a: &IntLaurentSeq, b: &IntLaurentSeq) -> Ordering {
    a.coeffs
        .cmp(&b.coeffs)
        .then_with(|| a.offset.cmp(&b.offset))
}

impl Ord for IntLaurentSeq {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_cmp(self, other)
    }
}

impl PartialOrd for IntLaurentSeq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for &IntLaurentSeq {
    type Output = IntLaurentSeq;

    fn mul(self, rhs: &IntLaurentSeq) -> IntLaurentSeq {
        if self.is_zero() || rhs.is_zero() {
            return IntLaurentSeq::zero();
        }
        IntLaurentSeq::new(
            self.offset + rhs.offset,
            dense::mul(&self.coeffs, &rhs.coeffs),
        )
    }
}

impl Mul for IntLaurentSeq {
    type Output = IntLaurentSeq;

    fn mul(self, rhs: IntLaurentSeq) -> IntLaurentSeq {
        &self * &rhs
    }
}

impl Neg for &IntLaurentSeq {
    type Output = IntLaurentSeq;

    fn neg(self) -> IntLaurentSeq {
        IntLaurentSeq {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntLaurentSeq {
    type Output = IntLaurentSeq;

    fn neg(self) -> IntLaurentSeq {
        -&self
    }
}

impl fmt::Debug for IntLaurentSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::literal::format_literal(self))
    }
}

impl fmt::Display for IntLaurentSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::literal::format_literal(self))
    }
}

/// The autocorrelation function `f * conj(f)` of some sequence. The
/// coefficient of `z^s` is the aperiodic autocorrelation at shift `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AutocorrFunction(IntLaurentSeq);

impl AutocorrFunction {
    pub fn as_seq(&self) -> &IntLaurentSeq {
        &self.0
    }

    pub fn into_seq(self) -> IntLaurentSeq {
        self.0
    }

    /// Autocorrelation at shift `s`.
    pub fn at(&self, s: i64) -> BigInt {
        self.0.coeff(s)
    }

    /// `C(0)`, the squared Euclidean norm.
    pub fn peak(&self) -> BigInt {
        self.at(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

/// True iff `f conj(f) = c g conj(g)` for a positive rational `c`.
pub fn equicorrelational(f: &IntLaurentSeq, g: &IntLaurentSeq) -> bool {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return true,
        (true, false) | (false, true) => return false,
        _ => {}
    }
    if f.len() != g.len() {
        return false;
    }
    let af = f.autocorrelation();
    let ag = g.autocorrelation();
    // c is forced to C_f(0) / C_g(0).
    af.as_seq().scale(&ag.peak()) == ag.as_seq().scale(&af.peak())
}
