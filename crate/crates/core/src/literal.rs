//! Sequence literals.
//!
//! Two body forms are accepted: a compact binary string over `+`/`-`
//! (`"++-+-"`), or comma-separated integers (`"1,1,-1,2"`). An optional
//! `@k` suffix sets the offset, e.g. `"+-@3"` is `z^3 - z^4`.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::seq::IntLaurentSeq;

fn parse_err(literal: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        literal: literal.to_string(),
        reason: reason.into(),
    }
}

pub fn parse_literal(literal: &str) -> Result<IntLaurentSeq> {
    let text = literal.trim();
    let (body, offset) = match text.rsplit_once('@') {
        Some((body, off)) => {
            let off = off
                .trim()
                .parse::<i64>()
                .map_err(|e| parse_err(literal, format!("bad offset: {e}")))?;
            (body.trim(), off)
        }
        None => (text, 0),
    };
    if body.is_empty() {
        return Err(parse_err(literal, "empty body"));
    }
    let is_binary_form = body
        .chars()
        .all(|c| matches!(c, '+' | '-' | '\u{2212}'));
    let coeffs: Vec<BigInt> = if is_binary_form {
        body.chars()
            .map(|c| match c {
                '+' => BigInt::one(),
                _ => -BigInt::one(),
            })
            .collect()
    } else {
        body.split(',')
            .map(|tok| {
                let tok = tok.trim().replace('\u{2212}', "-");
                tok.parse::<BigInt>()
                    .map_err(|_| parse_err(literal, format!("bad coefficient {tok:?}")))
            })
            .collect::<Result<_>>()?
    };
    let seq = IntLaurentSeq::new(offset, coeffs);
    if seq.is_zero() && offset != 0 {
        return Err(parse_err(literal, "zero sequence cannot carry an offset"));
    }
    Ok(seq)
}

/// Binary sequences use the `+`/`-` form, all others the comma form. The
/// `@k` suffix is written only for nonzero offsets.
pub fn format_literal(seq: &IntLaurentSeq) -> String {
    if seq.is_zero() {
        return "0".to_string();
    }
    let body = if seq.is_binary() {
        seq.coeffs()
            .iter()
            .map(|c| if c.is_positive() { '+' } else { '-' })
            .collect::<String>()
    } else {
        seq.coeffs()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    };
    if seq.offset() == 0 {
        body
    } else {
        format!("{body}@{}", seq.offset())
    }
}
