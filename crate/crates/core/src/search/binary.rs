//! Binary sequences of length at most 64 packed into one machine word.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::seq::IntLaurentSeq;

/// Term `j` is `-1` when bit `j` is set, `+1` otherwise.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BinarySeq {
    bits: u64,
    len: u8,
}

#[inline]
pub(crate) fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl BinarySeq {
    pub fn new(bits: u64, len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptyLength);
        }
        if len > 64 {
            return Err(Error::TooLong(len));
        }
        Ok(Self::from_raw(bits & low_mask(len), len))
    }

    #[inline]
    pub(crate) fn from_raw(bits: u64, len: usize) -> Self {
        Self { bits, len: len as u8 }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn term(&self, j: usize) -> i32 {
        if self.bits >> j & 1 == 1 {
            -1
        } else {
            1
        }
    }

    pub fn negated(&self) -> Self {
        Self::from_raw(!self.bits & low_mask(self.len()), self.len())
    }

    pub fn reversed(&self) -> Self {
        let n = self.len();
        Self::from_raw(self.bits.reverse_bits() >> (64 - n), n)
    }

    /// Negated if needed so the first term is `+1`.
    pub fn normalized(&self) -> Self {
        if self.bits & 1 == 1 {
            self.negated()
        } else {
            *self
        }
    }

    /// Lexicographic comparison of the terms with `-1 < +1`, matching
    /// [`crate::seq::lex_cmp`] on the integer forms.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| lex_cmp_bits(self.bits, other.bits))
    }

    /// Representative of the class `{±f, ±reverse(f)}`; agrees with
    /// [`IntLaurentSeq::canonical_trivial`].
    pub fn canonical(&self) -> Self {
        let a = self.normalized();
        let b = self.reversed().normalized();
        if lex_cmp_bits(b.bits, a.bits) == Ordering::Less {
            b
        } else {
            a
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.bits & 1 == 0 && is_canonical_bits(self.bits, self.len())
    }

    /// Aperiodic autocorrelation at shift `s`, `0 <= s < len`.
    #[inline]
    pub fn autocorrelation(&self, s: usize) -> i32 {
        autocorr_bits(self.bits, self.len(), s)
    }

    /// `C(1), ..., C(len - 1)`.
    pub fn autocorrelations(&self) -> Vec<i32> {
        (1..self.len()).map(|s| self.autocorrelation(s)).collect()
    }

    pub fn is_palindrome(&self) -> bool {
        self.reversed() == *self
    }

    pub fn is_antipalindrome(&self) -> bool {
        self.reversed() == self.negated()
    }

    pub fn to_seq(&self) -> IntLaurentSeq {
        IntLaurentSeq::new(
            0,
            (0..self.len()).map(|j| BigInt::from(self.term(j))).collect(),
        )
    }

    /// Packs a binary integer sequence; the offset is ignored.
    pub fn from_seq(f: &IntLaurentSeq) -> Option<Self> {
        if !f.is_binary() || f.len() > 64 {
            return None;
        }
        let bits = f
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_negative())
            .fold(0u64, |acc, (j, _)| acc | 1 << j);
        debug_assert!(f.coeffs().iter().all(|c| c.abs().is_one()));
        Some(Self::from_raw(bits, f.len()))
    }

    pub fn to_literal(&self) -> String {
        (0..self.len())
            .map(|j| if self.term(j) == 1 { '+' } else { '-' })
            .collect()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let f = crate::literal::parse_literal(text)?;
        Self::from_seq(&f).ok_or_else(|| Error::Parse {
            literal: text.to_string(),
            reason: "not a binary sequence of length at most 64".into(),
        })
    }
}

impl Ord for BinarySeq {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_cmp(other)
    }
}

impl PartialOrd for BinarySeq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BinarySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

impl fmt::Display for BinarySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

/// Lexicographic order of two equal-length words: the first differing term
/// decides, and a set bit (`-1`) is the smaller term.
#[inline]
pub(crate) fn lex_cmp_bits(x: u64, y: u64) -> Ordering {
    let d = x ^ y;
    if d == 0 {
        Ordering::Equal
    } else if x & d & d.wrapping_neg() != 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// `bits` has first term `+1`; canonical iff not larger than its
/// normalized reversal.
#[inline]
pub(crate) fn is_canonical_bits(bits: u64, len: usize) -> bool {
    let rev = bits.reverse_bits() >> (64 - len);
    let rev = if rev & 1 == 1 { !rev & low_mask(len) } else { rev };
    lex_cmp_bits(bits, rev) != Ordering::Greater
}

#[inline]
pub(crate) fn autocorr_bits(bits: u64, len: usize, s: usize) -> i32 {
    let overlap = len - s;
    let disagree = ((bits ^ (bits >> s)) & low_mask(overlap)).count_ones() as i32;
    overlap as i32 - 2 * disagree
}

/// Number of trivial binary classes of length `n`:
/// `2^(n-2) + 2^(floor(n/2)-1)` for `n >= 2`.
pub fn canonical_count(n: usize) -> u64 {
    match n {
        0 => 0,
        1 => 1,
        _ => (1u64 << (n - 2)) + (1u64 << (n / 2 - 1)),
    }
}

/// Streams one representative per trivial binary class of length `n`, in
/// increasing order of the packed word.
pub fn enumerate_canonical(n: usize) -> Result<impl Iterator<Item = BinarySeq>> {
    if n == 0 {
        return Err(Error::EmptyLength);
    }
    if n > 63 {
        return Err(Error::TooLong(n));
    }
    let half = 1u64 << (n - 1);
    Ok((0..half)
        .map(move |k| k << 1)
        .filter(move |&bits| is_canonical_bits(bits, n))
        .map(move |bits| BinarySeq::from_raw(bits, n)))
}
