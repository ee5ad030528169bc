//! Polynomials over `F_p` for word-sized primes, with distinct-degree and
//! equal-degree (Cantor-Zassenhaus) factorization.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::UniPoly;
use crate::arith::{inv_mod, mul_mod, rational_mod, PrimeModulus};

#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct FpPoly {
    p: u64,
    c: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for a in c.iter_mut() {
            *a %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        FpPoly { p, c }
    }

    /// Reduction of a rational polynomial; `None` if `p` divides a
    /// denominator.
    pub fn from_rational(f: &UniPoly, p: PrimeModulus) -> Option<Self> {
        let p = p.get();
        let c: Option<Vec<u64>> = f.coeffs().iter().map(|q| rational_mod(q, p)).collect();
        Some(Self::new(p, c?))
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, c: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.lc(), self.p).unwrap();
        self.scale(inv)
    }

    pub fn scale(&self, k: u64) -> Self {
        Self::new(self.p, self.c.iter().map(|&a| mul_mod(a, k, self.p)).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| {
                let a = self.c.get(i).copied().unwrap_or(0);
                let b = o.c.get(i).copied().unwrap_or(0);
                (a + b) % self.p
            })
            .collect();
        Self::new(self.p, v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| {
                let a = self.c.get(i).copied().unwrap_or(0);
                let b = o.c.get(i).copied().unwrap_or(0);
                (a + self.p - b) % self.p
            })
            .collect();
        Self::new(self.p, v)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p as u128;
        let mut acc = vec![0u128; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in o.c.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u128 * b as u128) % p;
            }
        }
        Self::new(self.p, acc.into_iter().map(|x| x as u64).collect())
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = inv_mod(d.lc(), self.p).unwrap();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Self::zero(self.p), self.clone());
        }
        let mut q = vec![0u64; r.len() - dd];
        for k in (0..r.len() - dd).rev() {
            let c = mul_mod(r[k + dd], inv, self.p);
            if c == 0 {
                continue;
            }
            for (i, &di) in d.c.iter().enumerate() {
                r[k + i] = (r[k + i] + self.p - mul_mod(c, di, self.p)) % self.p;
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(self.p, q), Self::new(self.p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = core::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = core::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = core::mem::replace(&mut t1, t);
        }
        let inv = inv_mod(r0.lc(), p).unwrap_or(1);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| mul_mod(a, i as u64 % self.p, self.p))
            .collect();
        Self::new(self.p, v)
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.c
            .iter()
            .rev()
            .fold(0, |acc, &a| (mul_mod(acc, x, self.p) + a) % self.p)
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).deg() == 0
    }

    /// `self^e mod m` for an exponent given as little-endian bits.
    fn pow_mod_bits(&self, bits: impl DoubleEndedIterator<Item = bool>, m: &Self) -> Self {
        let mut acc = Self::one(self.p).rem(m);
        let base = self.rem(m);
        for b in bits.rev() {
            acc = acc.mul(&acc).rem(m);
            if b {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    pub fn pow_mod(&self, e: u64, m: &Self) -> Self {
        let n = 64 - e.leading_zeros();
        self.pow_mod_bits((0..n).map(|i| (e >> i) & 1 == 1), m)
    }

    pub fn pow_mod_big(&self, e: &BigUint, m: &Self) -> Self {
        let n = e.bits();
        self.pow_mod_bits((0..n).map(|i| e.bit(i)), m)
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// pairs `(d, g)` where `g` is the product of all degree-`d` factors.
    pub fn distinct_degree(&self) -> Vec<(usize, Self)> {
        let p = self.p;
        let mut out = Vec::new();
        let mut f = self.monic();
        let x = Self::x(p);
        let mut h = x.rem(&f);
        let mut d = 0;
        while f.deg() >= 2 * (d + 1) {
            d += 1;
            h = h.pow_mod(p, &f);
            let g = h.sub(&x).gcd(&f);
            if g.deg() > 0 {
                f = f.div_rem(&g).0;
                h = h.rem(&f);
                out.push((d, g));
            }
        }
        if f.deg() > 0 {
            out.push((f.deg(), f));
        }
        out
    }

    /// Splits a monic squarefree product of degree-`d` irreducibles.
    pub fn equal_degree(&self, d: usize, rng: &mut ChaCha8Rng) -> Vec<Self> {
        let n = self.deg();
        if n == d {
            return vec![self.monic()];
        }
        let p = self.p;
        let exp = if p == 2 {
            None
        } else {
            Some((BigUint::from(p).pow(d as u32) - 1u32) >> 1)
        };
        loop {
            let a = Self::new(p, (0..n).map(|_| rng.next_u64() % p).collect());
            if a.deg() == 0 {
                continue;
            }
            let b = match &exp {
                Some(e) => a.pow_mod_big(e, self).sub(&Self::one(p)),
                None => {
                    // trace map a + a^2 + ... + a^(2^(d-1))
                    let mut t = a.rem(self);
                    let mut acc = t.clone();
                    for _ in 1..d {
                        t = t.mul(&t).rem(self);
                        acc = acc.add(&t);
                    }
                    acc
                }
            };
            let g = b.gcd(self);
            if g.deg() > 0 && g.deg() < n {
                let mut out = g.equal_degree(d, rng);
                out.extend(self.div_rem(&g).0.equal_degree(d, rng));
                return out;
            }
        }
    }

    /// `(unit, [(monic irreducible, multiplicity)])` with the factors
    /// sorted.
    pub fn factor(&self) -> (u64, Vec<(Self, usize)>) {
        assert!(!self.is_zero(), "factoring zero polynomial");
        let unit = self.lc();
        let mut rng = ChaCha8Rng::seed_from_u64(self.p ^ ((self.deg() as u64) << 40));
        let mut out = Vec::new();
        for (sq, mult) in self.monic().squarefree_factors() {
            for (d, g) in sq.distinct_degree() {
                for f in g.equal_degree(d, &mut rng) {
                    out.push((f, mult));
                }
            }
        }
        out.sort();
        (unit, out)
    }

    /// Monic irreducible factors of a squarefree polynomial.
    pub fn factor_squarefree(&self) -> Vec<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.p ^ ((self.deg() as u64) << 40));
        let mut out = Vec::new();
        for (d, g) in self.monic().distinct_degree() {
            out.extend(g.equal_degree(d, &mut rng));
        }
        out.sort();
        out
    }

    /// Roots in `F_p` of a squarefree polynomial, ascending.
    pub fn roots_squarefree(&self) -> Vec<u64> {
        let f = self.monic();
        if f.deg() == 0 {
            return Vec::new();
        }
        let x = Self::x(self.p);
        let lin = x.pow_mod(self.p, &f).sub(&x).gcd(&f);
        if lin.deg() == 0 {
            return Vec::new();
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.p);
        let mut r: Vec<u64> = lin
            .equal_degree(1, &mut rng)
            .into_iter()
            .map(|l| (self.p - l.c[0]) % self.p)
            .collect();
        r.sort_unstable();
        r
    }

    /// Squarefree factorization over `F_p` (handles `p`-th powers).
    pub fn squarefree_factors(&self) -> Vec<(Self, usize)> {
        let p = self.p;
        let f = self.monic();
        let mut out = Vec::new();
        if f.deg() == 0 {
            return out;
        }
        let df = f.derivative();
        if df.is_zero() {
            for (g, m) in f.pth_root().squarefree_factors() {
                out.push((g, m * p as usize));
            }
            return out;
        }
        let mut c = f.gcd(&df);
        let mut w = f.div_rem(&c).0;
        let mut i = 1;
        while w.deg() > 0 {
            let y = w.gcd(&c);
            let fac = w.div_rem(&y).0;
            if fac.deg() > 0 {
                out.push((fac, i));
            }
            i += 1;
            w = y;
            c = c.div_rem(&w).0;
        }
        if c.deg() > 0 {
            for (g, m) in c.pth_root().squarefree_factors() {
                out.push((g, m * p as usize));
            }
        }
        out
    }

    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        Self::new(self.p, self.c.iter().step_by(p).copied().collect())
    }

    /// Degrees of the irreducible factors of a squarefree polynomial,
    /// from distinct-degree factorization alone.
    pub fn factor_degrees(&self) -> Vec<usize> {
        let mut v = Vec::new();
        for (d, g) in self.monic().distinct_degree() {
            v.extend(core::iter::repeat_n(d, g.deg() / d));
        }
        v.sort_unstable();
        v
    }
}
