//! Hilbert symbols over `Q_p` and `R`, and solvability of the affine conic
//! `y^2 = a x^2 + b x + c`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::{int_valuation, mod_u64, pow_mod, prime_divisors, PrimeModulus, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Real,
    Finite(PrimeModulus),
}

impl Place {
    pub fn prime(p: u64) -> Result<Self> {
        Ok(Place::Finite(PrimeModulus::new(p)?))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => f.write_str("real"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}

/// Integer in the same square class as `q != 0`.
fn square_class_int(q: &Rational) -> BigInt {
    q.numer() * q.denom()
}

/// `n = p^k u` with `p` not dividing `u`.
fn split(n: &BigInt, p: u64) -> (u64, BigInt) {
    let k = int_valuation(n, p);
    (k, n / BigInt::from(p).pow(k as u32))
}

fn legendre(u: &BigInt, p: u64) -> i8 {
    match pow_mod(mod_u64(u, p), (p - 1) / 2, p) {
        1 => 1,
        _ => -1,
    }
}

/// `(u - 1)/2 mod 2` for odd `u`.
fn eps(u: &BigInt) -> u64 {
    (mod_u64(u, 4) - 1) / 2 % 2
}

/// `(u^2 - 1)/8 mod 2` for odd `u`.
fn omega(u: &BigInt) -> u64 {
    match mod_u64(u, 8) {
        1 | 7 => 0,
        _ => 1,
    }
}

/// `(a, b)_v`: `+1` iff `z^2 = a x^2 + b y^2` has a nonzero solution over
/// the completion at `v`.
pub fn hilbert_symbol(a: &Rational, b: &Rational, v: Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let p = match v {
        Place::Real => {
            return Ok(if a.is_negative() && b.is_negative() { -1 } else { 1 });
        }
        Place::Finite(p) => p.get(),
    };
    let (alpha, u) = split(&square_class_int(a), p);
    let (beta, w) = split(&square_class_int(b), p);
    if p == 2 {
        let e = eps(&u) * eps(&w) + alpha * omega(&w) + beta * omega(&u);
        return Ok(if e.is_multiple_of(2) { 1 } else { -1 });
    }
    let mut s: i8 = if (alpha * beta * ((p - 1) / 2)) % 2 == 0 { 1 } else { -1 };
    if beta % 2 == 1 {
        s *= legendre(&u, p);
    }
    if alpha % 2 == 1 {
        s *= legendre(&w, p);
    }
    Ok(s)
}

/// `y^2 = a x^2 + b x + c` rewritten as `y^2 = a X^2 + d` with
/// `X = x + b/(2a)`; returns `d = c - b^2/(4a)`.
pub fn completed_square_constant(a: &Rational, b: &Rational, c: &Rational) -> Result<Rational> {
    if a.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let four = Rational::from_integer(4.into());
    Ok(c - b * b / (four * a))
}

/// Whether `y^2 = a x^2 + b x + c` has a point over the completion at `v`.
/// A perfect-square right-hand side (`d = 0`) always has points.
pub fn conic_solvable_local(a: &Rational, b: &Rational, c: &Rational, v: Place) -> Result<bool> {
    let d = completed_square_constant(a, b, c)?;
    if d.is_zero() {
        return Ok(true);
    }
    Ok(hilbert_symbol(a, &d, v)? == 1)
}

/// The places where the local test can fail: the real place, 2, and the
/// primes dividing `a` or `d`.
pub fn conic_places(a: &Rational, b: &Rational, c: &Rational) -> Result<Vec<Place>> {
    let d = completed_square_constant(a, b, c)?;
    let mut primes: Vec<u64> = alloc::vec![2];
    for q in [a, &d] {
        if q.is_zero() {
            continue;
        }
        primes.extend(prime_divisors(q.numer())?);
        primes.extend(prime_divisors(q.denom())?);
    }
    primes.sort_unstable();
    primes.dedup();
    let mut out = alloc::vec![Place::Real];
    for p in primes {
        out.push(Place::prime(p)?);
    }
    Ok(out)
}

/// Solvability over `Q` by the local-global principle over
/// [`conic_places`].
pub fn conic_solvable_global(a: &Rational, b: &Rational, c: &Rational) -> Result<bool> {
    for v in conic_places(a, b, c)? {
        if !conic_solvable_local(a, b, c, v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A rational point on `y^2 = a x^2 + b x + c` with `x = m/n`, `|m|, n <=
/// bound`, if one exists; integer coefficients only.
pub fn conic_point_search(a: i64, b: i64, c: i64, bound: i64) -> Option<(Rational, Rational)> {
    for n in 1..=bound {
        for m in -bound..=bound {
            if m.gcd(&n) != 1 {
                continue;
            }
            let (m, nn) = (BigInt::from(m), BigInt::from(n));
            let val = BigInt::from(a) * &m * &m + BigInt::from(b) * &m * &nn + BigInt::from(c) * &nn * &nn;
            if val.is_negative() {
                continue;
            }
            let r = val.sqrt();
            if &r * &r == val {
                return Some((Rational::new(m, nn.clone()), Rational::new(r, nn)));
            }
        }
    }
    None
}
