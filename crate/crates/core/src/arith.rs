//! Exact integers and rationals, heights, p-adic valuations, and primality.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An element of `Q`, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Builds `num/den` in lowest terms.
pub fn normalize(num: BigInt, den: BigInt) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `max(|num|, den)` for `q` in lowest terms.
pub fn height(q: &Rational) -> BigInt {
    let a = q.numer().abs();
    let b = q.denom().clone();
    if a > b {
        a
    } else {
        b
    }
}

/// `height` as a machine integer, saturating.
pub fn height_u64(q: &Rational) -> u64 {
    height(q).to_u64().unwrap_or(u64::MAX)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("+inf"),
        }
    }
}

/// A prime below `2^64`, verified on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(PrimeModulus(p))
        } else {
            Err(Error::Domain(alloc::format!("{p} is not prime")))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Exponent of `p` in a nonzero integer.
pub fn int_valuation(n: &BigInt, p: u64) -> u64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

pub fn padic_valuation(q: &Rational, p: PrimeModulus) -> Valuation {
    if q.is_zero() {
        return Valuation::Infinite;
    }
    let up = int_valuation(q.numer(), p.get()) as i64;
    let down = int_valuation(q.denom(), p.get()) as i64;
    Valuation::Finite(up - down)
}

/// Residue of an integer in `[0, p)`.
pub fn mod_u64(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits")
}

/// Residue of `q` mod `p`, or `None` when `p` divides the denominator.
pub fn rational_mod(q: &Rational, p: u64) -> Option<u64> {
    let d = mod_u64(q.denom(), p);
    if d == 0 {
        return None;
    }
    let n = mod_u64(q.numer(), p);
    Some(mul_mod(n, inv_mod(d, p)?, p))
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Inverse mod a prime `p`, `None` for zero.
pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    (a != 0).then(|| pow_mod(a, p - 2, p))
}

/// Deterministic Miller-Rabin; these bases are exact for all `n < 2^64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn next_prime(n: u64) -> u64 {
    let mut k = n + 1;
    while !is_prime(k) {
        k += 1;
    }
    k
}

/// Primes `>= start` in increasing order.
pub fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    let first = if is_prime(start) { start } else { next_prime(start) };
    core::iter::successors(Some(first), |&p| Some(next_prime(p)))
}

fn pollard_rho(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn factor_u64(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

/// Distinct prime divisors of a nonzero integer, ascending.
///
/// Fails when a cofactor above `2^64` survives trial division.
pub fn prime_divisors(n: &BigInt) -> Result<Vec<u64>> {
    if n.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = 2u64;
    while p < 1 << 16 {
        let bp = BigInt::from(p);
        if (&n % &bp).is_zero() {
            out.push(p);
            while (&n % &bp).is_zero() {
                n /= &bp;
            }
        }
        if &bp * &bp > n {
            break;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !n.is_one() {
        let rest = n
            .to_u64()
            .ok_or_else(|| Error::Domain(alloc::format!("cannot factor {n}")))?;
        factor_u64(rest, &mut out);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Square root of a perfect square integer.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

pub fn is_square_int(n: &BigInt) -> bool {
    exact_sqrt(n).is_some()
}

/// Square root of a rational square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    let n = exact_sqrt(q.numer())?;
    let d = exact_sqrt(q.denom())?;
    Some(Rational::new(n, d))
}

/// All rationals of height at most `bound`, ordered by height, then
/// numerator, then denominator.
pub fn rationals_up_to_height(bound: u64) -> Vec<Rational> {
    let mut out = Vec::new();
    for h in 1..=bound {
        out.extend(rationals_of_height(h));
    }
    out
}

/// Rationals of height exactly `h`, ascending numerator then denominator.
pub fn rationals_of_height(h: u64) -> Vec<Rational> {
    let h = h as i64;
    let mut v: Vec<(i64, i64)> = Vec::new();
    if h == 1 {
        v.extend([(-1, 1), (0, 1), (1, 1)]);
    } else {
        for b in 1..=h {
            for a in -h..=h {
                if a.abs().max(b) == h && a.gcd(&b) == 1 {
                    v.push((a, b));
                }
            }
        }
    }
    v.sort_unstable();
    v.into_iter().map(|(a, b)| rat(a, b)).collect()
}

/// Canonical sweep key: `(height, numerator, denominator)`.
pub fn sweep_key(q: &Rational) -> (BigInt, BigInt, BigInt) {
    (height(q), q.numer().clone(), q.denom().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn normalize_reduces_and_fixes_sign() {
        assert_eq!(normalize(big(4), big(-6)).unwrap(), rat(-2, 3));
        let z = normalize(big(0), big(7)).unwrap();
        assert_eq!((z.numer().clone(), z.denom().clone()), (big(0), big(1)));
        assert_eq!(normalize(big(1), big(0)), Err(Error::ZeroDenominator));
    }

    #[test]
    fn normalize_matches_independent_gcd() {
        // 1036800 / 72900: gcd by repeated subtraction-free Euclid on i64.
        let (mut a, mut b) = (1_036_800i64, 72_900i64);
        while b != 0 {
            (a, b) = (b, a % b);
        }
        assert_eq!(a, 8100);
        let q = normalize(big(1_036_800), big(72_900)).unwrap();
        assert_eq!(q, rat(1_036_800 / 8100, 72_900 / 8100));
        assert_eq!(q, rat(128, 9));
        // 10368/729 reduces the same way.
        assert_eq!(normalize(big(10368), big(729)).unwrap(), rat(128, 9));
    }

    #[test]
    fn heights() {
        assert_eq!(height(&rat(10, 27)), big(27));
        assert_eq!(height(&int(0)), big(1));
        assert_eq!(height(&rat(-5, 3)), big(5));
    }

    #[test]
    fn valuations() {
        let two = PrimeModulus::new(2).unwrap();
        assert_eq!(padic_valuation(&int(12), two), Valuation::Finite(2));
        assert_eq!(padic_valuation(&rat(9, 8), two), Valuation::Finite(-3));
        assert_eq!(
            padic_valuation(&int(0), PrimeModulus::new(5).unwrap()),
            Valuation::Infinite
        );
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            small,
            [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2,3,5,7
        assert!(PrimeModulus::new(91).is_err());
    }

    #[test]
    fn prime_divisors_of_composites() {
        assert_eq!(prime_divisors(&big(-360)).unwrap(), [2, 3, 5]);
        let n = BigInt::from(1_000_000_007u64) * BigInt::from(998_244_353u64);
        assert_eq!(prime_divisors(&n).unwrap(), [998_244_353, 1_000_000_007]);
    }

    #[test]
    fn height_sweep_order() {
        let v = rationals_up_to_height(2);
        let want = [rat(-1, 1), rat(0, 1), rat(1, 1), rat(-2, 1), rat(-1, 2), rat(1, 2), rat(2, 1)];
        assert_eq!(v, want);
        // Height one is exactly {-1, 0, 1}.
        assert_eq!(rationals_of_height(1).len(), 3);
    }

    #[test]
    fn sweep_has_no_duplicates() {
        let v = rationals_up_to_height(30);
        let mut keys: Vec<_> = v.iter().map(sweep_key).collect();
        let n = keys.len();
        keys.dedup();
        assert_eq!(keys.len(), n);
        assert!(v.windows(2).all(|w| sweep_key(&w[0]) < sweep_key(&w[1])));
    }
}
