//! Factorization over `Q`, rational roots, and factorization types.

mod root_sieve;
mod zassenhaus;

pub use root_sieve::RootSieve;

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{mod_u64, primes_from, rational_sqrt, PrimeModulus, Rational};
use crate::error::{Error, Result};
use crate::perm::Partition;
use crate::poly::modp::FpPoly;
use crate::poly::{IntPoly, UniPoly};

/// Multiset of the degrees of the irreducible factors, with multiplicity.
pub type FactorizationType = Partition;

/// `unit * prod(factor^mult)` with monic irreducible factors, sorted by
/// degree and then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(UniPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.unit.clone()), |acc, (f, m)| {
                &acc * &f.pow(*m as u32)
            })
    }

    pub fn factorization_type(&self) -> FactorizationType {
        Partition::new(
            self.factors
                .iter()
                .flat_map(|(f, m)| core::iter::repeat_n(f.deg(), *m))
                .collect(),
        )
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit_shown = !self.unit.is_one() || self.factors.is_empty();
        if unit_shown {
            write!(f, "{}", self.unit)?;
        }
        for (k, (g, m)) in self.factors.iter().enumerate() {
            if k > 0 || unit_shown {
                f.write_str(" * ")?;
            }
            write!(f, "({g})")?;
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

fn monic_rational(f: &IntPoly) -> UniPoly {
    f.to_rational().monic()
}

/// Complete factorization over `Q`.
pub fn factor_over_q(f: &UniPoly) -> Result<Factorization> {
    let unit = f.lc().cloned().ok_or(Error::ZeroPolynomial)?;
    let mut factors = Vec::new();
    for (part, mult) in f.squarefree_decomposition() {
        for g in zassenhaus::factor_squarefree_primitive(&part.primitive_int()) {
            factors.push((monic_rational(&g), mult));
        }
    }
    factors.sort_by(|(a, ma), (b, mb)| {
        (a.deg(), a.coeffs(), ma).cmp(&(b.deg(), b.coeffs(), mb))
    });
    Ok(Factorization { unit, factors })
}

pub fn factorization_type(f: &UniPoly) -> Result<FactorizationType> {
    if f.degree().ok_or(Error::ZeroPolynomial)? == 0 {
        return Err(Error::ConstantPolynomial);
    }
    Ok(factor_over_q(f)?.factorization_type())
}

pub fn is_irreducible(f: &UniPoly) -> Result<bool> {
    match f.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(1) => Ok(true),
        _ => Ok(factor_over_q(f)?.is_irreducible()),
    }
}

/// Irreducible factors of `f` mod `p`, monic, with multiplicity, together
/// with the leading coefficient; `None` if `p` divides a denominator or
/// the leading coefficient.
pub fn factor_mod_p(f: &UniPoly, p: PrimeModulus) -> Option<(u64, Vec<(FpPoly, usize)>)> {
    let fp = FpPoly::from_rational(f, p)?;
    if fp.degree() != f.degree() || fp.is_zero() {
        return None;
    }
    Some(fp.factor())
}

/// Degrees of the factors of `f mod p`, or `None` when `p` is unusable:
/// it divides a denominator or the leading coefficient, or `f mod p` is
/// not squarefree.
pub fn cycle_type_mod_p(f: &UniPoly, p: PrimeModulus) -> Option<Partition> {
    let fp = FpPoly::from_rational(f, p)?;
    if fp.is_zero() || fp.degree() != f.degree() || !fp.is_squarefree() {
        return None;
    }
    Some(Partition::new(fp.factor_degrees()))
}

fn inv_mod_big(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

fn eval_int(f: &IntPoly, x: &BigInt) -> BigInt {
    f.coeffs().iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Lifts a simple root of `f mod p` to a root mod `p^k >= bound` by Newton
/// iteration.
fn newton_lift(f: &IntPoly, df: &IntPoly, r: u64, p: u64, bound: &BigInt) -> (BigInt, BigInt) {
    let mut m = BigInt::from(p);
    let mut x = BigInt::from(r);
    while &m <= bound {
        m = &m * &m;
        let d = inv_mod_big(&eval_int(df, &x), &m).expect("simple root");
        x = (&x - eval_int(f, &x) * d).mod_floor(&m);
    }
    (x, m)
}

/// Candidate primes tried before lifting; a prime with no roots ends the
/// search early.
const ROOT_PRIMES: usize = 4;

/// The rational roots of `f`, ascending.
pub fn rational_roots(f: &UniPoly) -> Result<Vec<Rational>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut g = f.squarefree_part();
    let mut roots = Vec::new();
    if g.deg() >= 1 && g.coeff(0).is_zero() {
        roots.push(Rational::zero());
        g = g.div_rem(&UniPoly::x()).0;
    }
    match g.deg() {
        0 => {}
        1 => roots.push(-g.coeff(0) / g.coeff(1)),
        2 => {
            let (a, b, c) = (g.coeff(2), g.coeff(1), g.coeff(0));
            let disc = &b * &b - Rational::from_integer(4.into()) * &a * &c;
            if let Some(s) = rational_sqrt(&disc) {
                let two_a = &a + &a;
                roots.push((-&b + &s) / &two_a);
                if !s.is_zero() {
                    roots.push((-&b - &s) / &two_a);
                }
            }
        }
        _ => roots.extend(roots_by_lifting(&g.primitive_int())),
    }
    roots.sort();
    Ok(roots)
}

/// Rational roots of a squarefree primitive integer polynomial with nonzero
/// constant term. A root `a/b` has `b | lc`, so `lc * a/b` is an integer of
/// absolute value at most `|lc| + max|coeff|`; it is recovered from the
/// `p`-adic lift of the root and then checked exactly.
fn roots_by_lifting(f: &IntPoly) -> Vec<Rational> {
    let lc = f.lc().unwrap().clone();
    let mut best: Option<(u64, Vec<u64>)> = None;
    let mut tried = 0;
    for p in primes_from(3) {
        if tried == ROOT_PRIMES {
            break;
        }
        if mod_u64(&lc, p) == 0 {
            continue;
        }
        let fp = FpPoly::new(p, f.coeffs().iter().map(|c| mod_u64(c, p)).collect());
        if !fp.is_squarefree() {
            continue;
        }
        tried += 1;
        let r = fp.roots_squarefree();
        if r.is_empty() {
            return Vec::new();
        }
        if best.as_ref().is_none_or(|(_, b)| r.len() < b.len()) {
            best = Some((p, r));
        }
    }
    let (p, residues) = best.expect("squarefree polynomials have usable primes");
    let df = f.derivative();
    let bound: BigInt = (lc.abs() + f.max_abs_coeff()) * 2u32;
    let mut out = Vec::new();
    for r in residues {
        let (x, m) = newton_lift(f, &df, r, p, &bound);
        let mut y = (&lc * x).mod_floor(&m);
        if y > (&m >> 1u32) {
            y -= &m;
        }
        let cand = Rational::new(y, lc.clone());
        if homogeneous_eval(f, cand.numer(), cand.denom()).is_zero() {
            out.push(cand);
        }
    }
    out
}

/// `den^n f(num/den)` for `n = deg f`.
fn homogeneous_eval(f: &IntPoly, num: &BigInt, den: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    let mut dpow = BigInt::one();
    for c in f.coeffs().iter().rev() {
        acc = acc * num + c * &dpow;
        dpow = &dpow * den;
    }
    acc
}
