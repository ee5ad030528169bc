//! One-sided test for rational roots of the specializations `P(t, X)`.
//!
//! For `t = a/b`, `g(X) = L b^m P(a/b, X)` has integer coefficients. A
//! rational root `u/w` of `g` has `w | lc(g)`, so for a prime `p` not
//! dividing `lc(g)` it reduces to a root of `g mod p`. No root mod such a
//! `p` therefore rules out rational roots. Everything runs in `u64`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::arith::{mod_u64, Rational};
use crate::poly::BiPoly;

const SIEVE_PRIMES: [u64; 18] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61];

#[derive(Clone, Debug)]
pub struct RootSieve {
    t_degree: usize,
    x_degree: usize,
    /// Per prime, `coeff[j][i]` is the `T^i X^j` coefficient of `L P` mod p.
    residues: Vec<(u64, Vec<Vec<u64>>)>,
}

impl RootSieve {
    pub fn new(f: &BiPoly) -> Self {
        let t_degree = f.t_degree();
        let x_degree = f.x_degree().unwrap_or(0);
        let mut l = BigInt::one();
        for c in f.coeffs() {
            for q in c.coeffs() {
                l = l.lcm(q.denom());
            }
        }
        let lr = Rational::from_integer(l);
        let ints: Vec<Vec<BigInt>> = f
            .coeffs()
            .iter()
            .map(|c| (0..=t_degree).map(|i| (c.coeff(i) * &lr).to_integer()).collect())
            .collect();
        let residues = SIEVE_PRIMES
            .iter()
            .map(|&p| (p, ints.iter().map(|row| row.iter().map(|c| mod_u64(c, p)).collect()).collect()))
            .collect();
        RootSieve {
            t_degree,
            x_degree,
            residues,
        }
    }

    /// True only if `P(t, X)` certainly has no rational root.
    pub fn excludes(&self, t: &Rational) -> bool {
        if self.x_degree == 0 {
            return false;
        }
        let (num, den) = (t.numer(), t.denom());
        let mut g = alloc::vec![0u64; self.x_degree + 1];
        for (p, rows) in &self.residues {
            let p = *p;
            let (a, b) = (mod_u64(num, p), mod_u64(den, p));
            // a^i b^(m - i) mod p
            let mut ap = alloc::vec![1u64; self.t_degree + 1];
            let mut bp = alloc::vec![1u64; self.t_degree + 1];
            for i in 1..=self.t_degree {
                ap[i] = ap[i - 1] * a % p;
                bp[i] = bp[i - 1] * b % p;
            }
            for (j, row) in rows.iter().enumerate() {
                let mut s = 0u64;
                for (i, c) in row.iter().enumerate() {
                    s = (s + c * (ap[i] * bp[self.t_degree - i] % p)) % p;
                }
                g[j] = s;
            }
            if g[self.x_degree] == 0 {
                continue;
            }
            let has_root = (0..p).any(|r| g.iter().rev().fold(0u64, |acc, c| (acc * r + c) % p) == 0);
            if !has_root {
                return true;
            }
        }
        false
    }
}
