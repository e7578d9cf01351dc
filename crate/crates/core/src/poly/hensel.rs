//! Quadratic Hensel lifting of a modular factorization and subset
//! recombination into true integer factors.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::dense::{self, Poly};
use super::zp::{Zp, ZpPoly};

/// Arithmetic in (Z/mZ)[x] with representatives in `[0, m)`.
struct ModRing {
    m: BigInt,
}

impl ModRing {
    fn reduce(&self, a: &[BigInt]) -> Poly {
        let mut out: Poly = a.iter().map(|c| c.mod_floor(&self.m)).collect();
        dense::trim(&mut out);
        out
    }

    fn mul(&self, a: &[BigInt], b: &[BigInt]) -> Poly {
        self.reduce(&dense::mul(a, b))
    }

    fn add(&self, a: &[BigInt], b: &[BigInt]) -> Poly {
        let n = a.len().max(b.len());
        let sum: Poly = (0..n)
            .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
            .collect();
        self.reduce(&sum)
    }

    fn sub(&self, a: &[BigInt], b: &[BigInt]) -> Poly {
        self.reduce(&dense::sub(a, b))
    }

    fn inv(&self, a: &BigInt) -> BigInt {
        let e = a.extended_gcd(&self.m);
        debug_assert!(e.gcd.is_one());
        e.x.mod_floor(&self.m)
    }

    /// Division by a monic divisor.
    fn divrem_monic(&self, a: &[BigInt], b: &[BigInt]) -> (Poly, Poly) {
        debug_assert!(b.last().is_some_and(One::is_one));
        if a.len() < b.len() {
            return (Vec::new(), self.reduce(a));
        }
        let mut rem = a.to_vec();
        let mut quot = vec![BigInt::zero(); a.len() - b.len() + 1];
        for k in (0..quot.len()).rev() {
            let q = rem[k + b.len() - 1].mod_floor(&self.m);
            if q.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                rem[k + j] -= &q * bj;
            }
            quot[k] = q;
        }
        (self.reduce(&quot), self.reduce(&rem))
    }

    fn monic(&self, a: &[BigInt]) -> Poly {
        let inv = self.inv(a.last().unwrap());
        self.reduce(&dense::scale(a, &inv))
    }
}

fn lift_zp(a: &[u64]) -> Poly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// One quadratic step: from `f = g h`, `s g + t h = 1` mod `m` to the same
/// relations mod `m^2`. `h` is monic.
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    ring: &ModRing,
) -> (Poly, Poly, Poly, Poly) {
    let e = ring.sub(f, &ring.mul(g, h));
    let (q, r) = ring.divrem_monic(&ring.mul(s, &e), h);
    let g_new = ring.add(&ring.add(g, &ring.mul(t, &e)), &ring.mul(&q, g));
    let h_new = ring.add(h, &r);
    let b = ring.sub(&ring.add(&ring.mul(s, &g_new), &ring.mul(t, &h_new)), &[BigInt::one()]);
    let (c, d) = ring.divrem_monic(&ring.mul(s, &b), &h_new);
    let s_new = ring.sub(s, &d);
    let t_new = ring.sub(&ring.sub(t, &ring.mul(t, &b)), &ring.mul(&c, &g_new));
    (g_new, h_new, s_new, t_new)
}

/// Lifts monic factors of `f mod p` to monic factors mod `p^(2^steps)`
/// with `f = lc(f) * prod(lifted)` modulo that power.
pub fn multifactor_lift(f: &[BigInt], factors: &[ZpPoly], zp: Zp, steps: u32) -> Vec<Poly> {
    let p = BigInt::from(zp.modulus());
    let target = ModRing {
        m: p.pow(1u32 << steps),
    };
    lift_node(&target.reduce(f), factors, zp, steps, &target)
}

fn lift_node(f: &[BigInt], factors: &[ZpPoly], zp: Zp, steps: u32, target: &ModRing) -> Vec<Poly> {
    if factors.len() == 1 {
        return vec![target.monic(f)];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let lc_mod_p = zp.reduce(&[f.last().unwrap().clone()]);
    let left_prod = left.iter().fold(lc_mod_p, |acc, u| zp.mul(&acc, u));
    let right_prod = right.iter().fold(vec![1u64], |acc, u| zp.mul(&acc, u));
    let (one, s0, t0) = zp.ext_gcd(&left_prod, &right_prod);
    debug_assert_eq!(one, vec![1]);

    let p = BigInt::from(zp.modulus());
    let (mut g, mut h, mut s, mut t) = (
        lift_zp(&left_prod),
        lift_zp(&right_prod),
        lift_zp(&s0),
        lift_zp(&t0),
    );
    let mut m = p;
    for _ in 0..steps {
        m = &m * &m;
        let ring = ModRing { m: m.clone() };
        (g, h, s, t) = hensel_step(&ring.reduce(f), &g, &h, &s, &t, &ring);
    }
    let mut out = lift_node(&target.reduce(&g), left, zp, steps, target);
    out.extend(lift_node(&target.reduce(&h), right, zp, steps, target));
    out
}

fn symmetric(a: &[BigInt], m: &BigInt) -> Poly {
    let half = m >> 1;
    let mut out: Poly = a
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    dense::trim(&mut out);
    out
}

/// Groups lifted monic factors into the irreducible integer factors of the
/// primitive squarefree `f`, trying subsets smallest first. `modulus` must
/// exceed twice `|lc(f)|` times a coefficient bound for factors of `f`.
pub fn recombine(f: &[BigInt], lifted: Vec<Poly>, modulus: &BigInt) -> Vec<Poly> {
    let mut f = f.to_vec();
    let mut remaining = lifted;
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let lc = f.last().unwrap().clone();
        let target_const = &lc * &f[0];
        let mut hit = None;
        for subset in (0..remaining.len()).combinations(size) {
            let c0 = subset
                .iter()
                .fold(lc.clone(), |acc, &i| (acc * &remaining[i][0]).mod_floor(modulus));
            let c0 = symmetric(&[c0], modulus);
            let Some(c0) = c0.first() else { continue };
            if !(&target_const % c0).is_zero() {
                continue;
            }
            let prod = subset.iter().fold(vec![lc.clone()], |acc, &i| {
                symmetric(&dense::mul(&acc, &remaining[i]), modulus)
            });
            let candidate = dense::primitive_part(&symmetric(&prod, modulus));
            if let Some(q) = dense::exact_div(&f, &candidate) {
                hit = Some((subset, candidate, q));
                break;
            }
        }
        match hit {
            Some((subset, candidate, q)) => {
                found.push(candidate);
                f = q;
                for &i in subset.iter().rev() {
                    remaining.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if f.len() > 1 {
        found.push(f);
    }
    found
}

/// Coefficient bound for any integer factor of `f`: `2^deg(f) * ceil(||f||_2)`.
pub fn factor_coefficient_bound(f: &[BigInt]) -> BigInt {
    let norm_sq: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + BigInt::one();
    norm << (f.len().saturating_sub(1))
}

/// Smallest `steps` with `p^(2^steps) > 2 |lc(f)| bound`.
pub fn lifting_steps(f: &[BigInt], p: u64) -> (u32, BigInt) {
    let need = factor_coefficient_bound(f) * f.last().unwrap().abs() * 2;
    let mut m = BigInt::from(p);
    let mut steps = 0;
    while m <= need {
        m = &m * &m;
        steps += 1;
    }
    (steps, m)
}
