//! Polynomials over the prime field Z/pZ for odd primes below 2^31.
//! Coefficients are lowest degree first, trimmed; zero is the empty vector.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rand::Rng;

pub type ZpPoly = Vec<u64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Zp {
    p: u64,
}

impl Zp {
    pub fn new(p: u64) -> Self {
        debug_assert!(p > 2 && p < (1 << 31));
        Self { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn mulm(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }

    fn addm(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn subm(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow_scalar(a, self.p - 2)
    }

    fn pow_scalar(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mulm(acc, a);
            }
            a = self.mulm(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn reduce(&self, f: &[BigInt]) -> ZpPoly {
        let m = BigInt::from(self.p);
        let mut out: ZpPoly = f
            .iter()
            .map(|c| c.mod_floor(&m).to_u64().unwrap())
            .collect();
        trim(&mut out);
        out
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> ZpPoly {
        let n = a.len().max(b.len());
        let mut out: ZpPoly = (0..n)
            .map(|i| self.addm(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        trim(&mut out);
        out
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> ZpPoly {
        let n = a.len().max(b.len());
        let mut out: ZpPoly = (0..n)
            .map(|i| self.subm(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        trim(&mut out);
        out
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> ZpPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut acc = vec![0u128; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                acc[i + j] += (x * y) as u128;
            }
        }
        let p = self.p as u128;
        let mut out: ZpPoly = acc.into_iter().map(|c| (c % p) as u64).collect();
        trim(&mut out);
        out
    }

    pub fn scale(&self, a: &[u64], c: u64) -> ZpPoly {
        let mut out: ZpPoly = a.iter().map(|&x| self.mulm(x, c)).collect();
        trim(&mut out);
        out
    }

    pub fn monic(&self, a: &[u64]) -> ZpPoly {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => self.scale(a, self.inv(lc)),
        }
    }

    pub fn divrem(&self, a: &[u64], b: &[u64]) -> (ZpPoly, ZpPoly) {
        assert!(!b.is_empty(), "division by zero polynomial mod {}", self.p);
        if a.len() < b.len() {
            return (Vec::new(), a.to_vec());
        }
        let mut rem = a.to_vec();
        let inv_lead = self.inv(*b.last().unwrap());
        let mut quot = vec![0u64; a.len() - b.len() + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + b.len() - 1];
            if top == 0 {
                continue;
            }
            let q = self.mulm(top, inv_lead);
            for (j, &bj) in b.iter().enumerate() {
                rem[k + j] = self.subm(rem[k + j], self.mulm(q, bj));
            }
            quot[k] = q;
        }
        trim(&mut rem);
        trim(&mut quot);
        (quot, rem)
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> ZpPoly {
        self.divrem(a, b).1
    }

    /// Monic gcd; zero only if both inputs are zero.
    pub fn gcd(&self, a: &[u64], b: &[u64]) -> ZpPoly {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        while !y.is_empty() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    /// Returns `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn ext_gcd(&self, a: &[u64], b: &[u64]) -> (ZpPoly, ZpPoly, ZpPoly) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1): (ZpPoly, ZpPoly) = (vec![1], Vec::new());
        let (mut t0, mut t1): (ZpPoly, ZpPoly) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.last() {
            None => (r0, s0, t0),
            Some(&lc) => {
                let inv = self.inv(lc);
                (self.scale(&r0, inv), self.scale(&s0, inv), self.scale(&t0, inv))
            }
        }
    }

    pub fn derivative(&self, a: &[u64]) -> ZpPoly {
        let mut out: ZpPoly = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mulm(c, i as u64 % self.p))
            .collect();
        trim(&mut out);
        out
    }

    pub fn is_squarefree(&self, a: &[u64]) -> bool {
        let d = self.derivative(a);
        if d.is_empty() {
            return a.len() <= 1;
        }
        self.gcd(a, &d).len() == 1
    }

    /// `base^e mod m`.
    pub fn powmod(&self, base: &[u64], e: &BigUint, m: &[u64]) -> ZpPoly {
        let mut acc: ZpPoly = vec![1];
        acc = self.rem(&acc, m);
        let b = self.rem(base, m);
        for i in (0..e.bits()).rev() {
            acc = self.rem(&self.mul(&acc, &acc), m);
            if e.bit(i) {
                acc = self.rem(&self.mul(&acc, &b), m);
            }
        }
        acc
    }

    /// Distinct-degree factorization of a monic squarefree polynomial.
    /// Returns `(product of all irreducible factors of degree d, d)` pairs.
    pub fn distinct_degree(&self, f: &[u64]) -> Vec<(ZpPoly, usize)> {
        let mut out = Vec::new();
        let mut rest = f.to_vec();
        let x: ZpPoly = vec![0, 1];
        let p = BigUint::from(self.p);
        let mut h = self.rem(&x, &rest);
        let mut d = 0;
        while rest.len() > 1 {
            d += 1;
            if 2 * d > rest.len() - 1 {
                let deg = rest.len() - 1;
                out.push((rest, deg));
                return out;
            }
            h = self.powmod(&h, &p, &rest);
            let g = self.gcd(&rest, &self.sub(&h, &x));
            if g.len() > 1 {
                rest = self.divrem(&rest, &g).0;
                h = self.rem(&h, &rest);
                out.push((g, d));
            }
        }
        out
    }

    /// Splits a monic squarefree product of irreducibles of degree `d`
    /// (Cantor-Zassenhaus).
    pub fn equal_degree<R: Rng>(&self, f: &[u64], d: usize, rng: &mut R) -> Vec<ZpPoly> {
        let n = f.len() - 1;
        if n == d {
            return vec![f.to_vec()];
        }
        let exp = (BigUint::from(self.p).pow(d as u32) - BigUint::one()) >> 1;
        loop {
            let a: ZpPoly = {
                let mut a: ZpPoly = (0..n).map(|_| rng.gen_range(0..self.p)).collect();
                trim(&mut a);
                a
            };
            if a.len() <= 1 {
                continue;
            }
            let g = self.gcd(&a, f);
            let split = if g.len() > 1 {
                g
            } else {
                let b = self.powmod(&a, &exp, f);
                self.gcd(&self.sub(&b, &[1]), f)
            };
            if split.len() > 1 && split.len() < f.len() {
                let other = self.divrem(f, &split).0;
                let mut out = self.equal_degree(&split, d, rng);
                out.extend(self.equal_degree(&self.monic(&other), d, rng));
                return out;
            }
        }
    }
}

pub fn trim(p: &mut ZpPoly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// Lifts a residue polynomial to integers with symmetric representatives.
pub fn to_bigint_symmetric(a: &[u64], p: u64) -> Vec<BigInt> {
    a.iter()
        .map(|&c| {
            if c > p / 2 {
                BigInt::from(c) - BigInt::from(p)
            } else {
                BigInt::from(c)
            }
        })
        .collect()
}

pub fn is_odd_prime(q: u64) -> bool {
    if q < 3 || q.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn next_odd_prime(after: u64) -> u64 {
    let mut q = (after + 1).max(3);
    while !is_odd_prime(q) {
        q += 1;
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn ext_gcd_identity() {
        let f = Zp::new(7);
        let a = vec![1, 2, 3, 1];
        let b = vec![5, 0, 1];
        let (g, s, t) = f.ext_gcd(&a, &b);
        assert_eq!(g, vec![1]);
        let lhs = f.add(&f.mul(&s, &a), &f.mul(&t, &b));
        assert_eq!(lhs, vec![1]);
    }

    #[test]
    fn ddf_and_edf_split_completely() {
        let f = Zp::new(13);
        // (x-1)(x-2)(x^2+2) mod 13; x^2+2 irreducible since -2 is a non-residue mod 13
        let prod = f.mul(&f.mul(&[12, 1], &[11, 1]), &[2, 0, 1]);
        let ddf = f.distinct_degree(&prod);
        let degs: Vec<usize> = ddf.iter().map(|(_, d)| *d).collect();
        assert_eq!(degs, vec![1, 2]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let lin = f.equal_degree(&ddf[0].0, 1, &mut rng);
        assert_eq!(lin.len(), 2);
    }

    #[test]
    fn primes() {
        assert!(is_odd_prime(3));
        assert!(!is_odd_prime(9));
        assert!(!is_odd_prime(2));
        assert_eq!(next_odd_prime(3), 5);
        assert_eq!(next_odd_prime(0), 3);
        assert_eq!(next_odd_prime(13), 17);
    }
}
