//! Dense integer polynomial helpers. Coefficients are stored lowest degree
//! first; the zero polynomial is the empty vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Poly = Vec<BigInt>;

pub fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub fn degree(p: &[BigInt]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn from_i64s(c: &[i64]) -> Poly {
    let mut p: Poly = c.iter().map(|&x| BigInt::from(x)).collect();
    trim(&mut p);
    p
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> Poly {
    let n = a.len().max(b.len());
    let mut out: Poly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

pub fn scale(a: &[BigInt], c: &BigInt) -> Poly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

pub fn pow(a: &[BigInt], mut e: u32) -> Poly {
    let mut base = a.to_vec();
    let mut acc = vec![BigInt::one()];
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base);
        }
    }
    acc
}

/// Nonnegative gcd of the coefficients; zero for the zero polynomial.
pub fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

pub fn primitive_part(a: &[BigInt]) -> Poly {
    let c = content(a);
    if c.is_zero() || c.is_one() {
        return a.to_vec();
    }
    a.iter().map(|x| x / &c).collect()
}

pub fn derivative(a: &[BigInt]) -> Poly {
    let mut out: Poly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    trim(&mut out);
    out
}

/// Exact division over the integers; `None` if `b` does not divide `a` in Z[x].
pub fn exact_div(a: &[BigInt], b: &[BigInt]) -> Option<Poly> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.to_vec();
    let lead = b.last().unwrap();
    let mut quot = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..quot.len()).rev() {
        let top = &rem[k + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &q * bj;
        }
        quot[k] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut quot);
    Some(quot)
}

/// Pseudo-remainder of `a` by `b`: lc(b)^(deg a - deg b + 1) * a mod b.
pub fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Poly {
    assert!(!b.is_empty());
    let mut rem = a.to_vec();
    let lead = b.last().unwrap().clone();
    while rem.len() >= b.len() {
        let top = rem.last().unwrap().clone();
        let shift = rem.len() - b.len();
        for c in rem.iter_mut() {
            *c *= &lead;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[shift + j] -= &top * bj;
        }
        trim(&mut rem);
    }
    rem
}

/// Primitive gcd by the primitive pseudo-remainder sequence, normalized to a
/// positive leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> Poly {
    if a.is_empty() {
        return normalize_leading(primitive_part(b));
    }
    if b.is_empty() {
        return normalize_leading(primitive_part(a));
    }
    let mut x = primitive_part(a);
    let mut y = primitive_part(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive_part(&r);
    }
    normalize_leading(x)
}

fn normalize_leading(mut p: Poly) -> Poly {
    if p.last().is_some_and(Signed::is_negative) {
        for c in p.iter_mut() {
            *c = -&*c;
        }
    }
    p
}

/// Renders `c0 + c1 z + ... + ck z^k`, skipping zero terms.
pub fn render(p: &[BigInt]) -> String {
    if p.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        match i {
            0 => out.push_str(&mag.to_string()),
            _ => {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push(' ');
                }
                out.push('z');
                if i > 1 {
                    out.push('^');
                    out.push_str(&i.to_string());
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        from_i64s(c)
    }

    #[test]
    fn product_and_exact_division() {
        let a = p(&[1, 1]);
        let b = p(&[1, -1]);
        assert_eq!(mul(&a, &b), p(&[1, 0, -1]));
        assert_eq!(exact_div(&p(&[1, 0, -1]), &a), Some(b));
        assert_eq!(exact_div(&p(&[1, 0, 1]), &a), None);
        assert_eq!(exact_div(&p(&[2, 2]), &p(&[4])), None);
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (z-1)(z+1) and (z-1)^2
        let g = gcd(&p(&[-1, 0, 1]), &p(&[1, -2, 1]));
        assert_eq!(g, p(&[-1, 1]));
        assert_eq!(gcd(&p(&[]), &p(&[])), p(&[]));
        assert_eq!(gcd(&p(&[2, 4]), &p(&[])), p(&[1, 2]));
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        assert_eq!(gcd(&p(&[1, 1, 1]), &p(&[1, -1, 1])), p(&[1]));
    }

    #[test]
    fn content_and_primitive() {
        assert_eq!(content(&p(&[-6, 9, 3])), BigInt::from(3));
        assert_eq!(primitive_part(&p(&[-6, 9, 3])), p(&[-2, 3, 1]));
    }

    #[test]
    fn rendering() {
        assert_eq!(render(&p(&[1, -1, 0, 2])), "1 - z + 2 z^3");
        assert_eq!(render(&p(&[0, -3])), "-3 z");
        assert_eq!(render(&[]), "0");
    }

    #[test]
    fn powers() {
        assert_eq!(pow(&p(&[1, 1]), 3), p(&[1, 3, 3, 1]));
        assert_eq!(pow(&p(&[1, 1]), 0), p(&[1]));
    }
}
