//! Dense polynomials over an integral domain.
//!
//! [`UniPoly`] is `Q[X]`. [`BiPoly`] is `Q[T][X]`, stored as a polynomial
//! in `X` whose coefficients are polynomials in `T`.

mod bivariate;
mod display;
pub mod modp;
pub mod parse;

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::ring::{Field, Ring};

pub use bivariate::RatFn2;

/// Coefficient `i` multiplies `X^i`; the top coefficient is nonzero unless
/// the polynomial is zero (empty vector).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

pub type UniPoly = Poly<Rational>;
pub type BiPoly = Poly<UniPoly>;
pub type IntPoly = Poly<BigInt>;

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c * X^d`
    pub fn monomial(c: R, d: usize) -> Self {
        let mut v = vec![R::zero(); d + 1];
        v[d] = c;
        Self::new(v)
    }

    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        let mut k = R::zero();
        for c in self.coeffs.iter().skip(1) {
            k = k + R::one();
            out.push(c.mul_ref(&k));
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        self.pow_u(e)
    }

    /// `self(g(X))`
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(c.clone());
        }
        acc
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo_rem by zero");
        let Some(mut dr) = self.degree() else {
            return Self::zero();
        };
        if dr < dd {
            return self.clone();
        }
        let lcd = d.lc().unwrap().clone();
        let mut r = self.clone();
        let mut e = dr - dd + 1;
        loop {
            let lr = r.lc().unwrap().clone();
            let shift = dr - dd;
            let mut next = r.scale(&lcd).coeffs;
            for (i, c) in d.coeffs.iter().enumerate() {
                next[i + shift] = next[i + shift].sub_ref(&lr.mul_ref(c));
            }
            r = Self::new(next);
            e -= 1;
            match r.degree() {
                Some(k) if k >= dd => dr = k,
                _ => break,
            }
        }
        r.scale(&lcd.pow_u(e as u32))
    }

    /// Resultant by the subresultant remainder sequence.
    pub fn resultant(&self, other: &Self) -> Result<R> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        let mut negate = false;
        if a.deg() < b.deg() {
            core::mem::swap(&mut a, &mut b);
            if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
                negate = true;
            }
        }
        let sign = |x: R, neg: bool| if neg { -x } else { x };
        if b.deg() == 0 {
            return Ok(sign(b.coeffs[0].pow_u(a.deg() as u32), negate));
        }
        let mut g = R::one();
        let mut h = R::one();
        loop {
            let (da, db) = (a.deg(), b.deg());
            let delta = (da - db) as u32;
            if da % 2 == 1 && db % 2 == 1 {
                negate = !negate;
            }
            let r = a.pseudo_rem(&b);
            a = b;
            let divisor = g.mul_ref(&h.pow_u(delta));
            b = r
                .exact_div_scalar(&divisor)
                .expect("subresultant division is exact");
            g = a.lc().unwrap().clone();
            if delta > 0 {
                h = g
                    .pow_u(delta)
                    .exact_div(&h.pow_u(delta - 1))
                    .expect("subresultant division is exact");
            }
            if b.is_zero() {
                return Ok(R::zero());
            }
            if b.deg() == 0 {
                let da = a.deg() as u32;
                let lb = b.coeffs[0].clone();
                let res = lb
                    .pow_u(da)
                    .exact_div(&h.pow_u(da - 1))
                    .expect("subresultant division is exact");
                return Ok(sign(res, negate));
            }
        }
    }

    /// `(-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
    pub fn discriminant(&self) -> Result<R> {
        let n = match self.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => return Err(Error::ConstantPolynomial),
            Some(n) => n,
        };
        if n == 1 {
            return Ok(R::one());
        }
        let res = self.resultant(&self.derivative())?;
        let d = res
            .exact_div(self.lc().unwrap())
            .expect("lc divides Res(f, f')");
        Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
    }

    pub fn exact_div_scalar(&self, c: &R) -> Option<Self> {
        let v: Option<Vec<R>> = self.coeffs.iter().map(|a| a.exact_div(c)).collect();
        v.map(Self::new)
    }

    /// Exact polynomial division; `None` when `d` does not divide `self`.
    pub fn exact_div_poly(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let Some(dn) = self.degree() else {
            return Some(Self::zero());
        };
        if dn < dd {
            return None;
        }
        let lcd = d.lc().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![R::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let c = top.exact_div(lcd)?;
            for (i, di) in d.coeffs.iter().enumerate() {
                r[k + i] = r[k + i].sub_ref(&c.mul_ref(di));
            }
            q[k] = c;
        }
        r.iter().all(|c| c.is_zero()).then(|| Self::new(q))
    }
}

impl<F: Field> Poly<F> {
    pub fn monic(&self) -> Self {
        match self.lc() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.lc().unwrap().inv().unwrap();
        let mut r = self.coeffs.clone();
        let n = r.len();
        if n <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![F::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let c = r[k + dd].mul_ref(&inv);
            if c.is_zero() {
                continue;
            }
            for (i, di) in d.coeffs.iter().enumerate() {
                r[k + i] = r[k + i].sub_ref(&c.mul_ref(di));
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `f / gcd(f, f')`, made monic.
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    /// Yun's algorithm: monic squarefree, pairwise coprime `(a_i, i)` with
    /// `monic(f) = prod a_i^i`. Only factors of positive degree are kept.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.deg() == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.div_rem(&a).0;
        let mut c = df.div_rem(&a).0;
        let mut i = 1;
        loop {
            let d = &c - &b.derivative();
            if b.deg() == 0 {
                break;
            }
            a = b.gcd(&d);
            if a.deg() > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            i += 1;
        }
        out
    }
}

impl UniPoly {
    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&a| crate::arith::int(a)).collect())
    }

    /// Primitive integer polynomial with positive leading coefficient and
    /// the same roots.
    pub fn primitive_int(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let p = IntPoly::new(ints).primitive_part();
        if p.lc().unwrap().is_negative() {
            -p
        } else {
            p
        }
    }
}

impl IntPoly {
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() {
            return self.clone();
        }
        self.exact_div_scalar(&c).unwrap()
    }

    pub fn to_rational(&self) -> UniPoly {
        self.map(|c| Rational::from_integer(c.clone()))
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<'a, R: Ring> Add<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn add(self, o: &'a Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| match (self.coeffs.get(i), o.coeffs.get(i)) {
                    (Some(a), Some(b)) => a.add_ref(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl<'a, R: Ring> Sub<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn sub(self, o: &'a Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| match (self.coeffs.get(i), o.coeffs.get(i)) {
                    (Some(a), Some(b)) => a.sub_ref(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => -b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl<'a, R: Ring> Mul<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn mul(self, o: &'a Poly<R>) -> Poly<R> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Poly::new(out)
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<R: Ring> Add for Poly<R> {
    type Output = Poly<R>;
    fn add(self, o: Self) -> Self {
        &self + &o
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Poly<R>;
    fn sub(self, o: Self) -> Self {
        &self - &o
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Poly<R>;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn exact_div(&self, d: &Self) -> Option<Self> {
        self.exact_div_poly(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        let f = p(&[1, 0, 0, -4, 3]);
        assert_eq!(f.gcd(&f.derivative()), p(&[-1, 1]));
        assert_eq!(f.gcd(&UniPoly::one()), UniPoly::one());
        assert_eq!(f.gcd(&UniPoly::zero()), f.monic());
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(p(&[-2, 1]).resultant(&p(&[-5, 1])).unwrap(), int(-3));
        assert_eq!(p(&[1, 0, 1]).resultant(&p(&[-1, 1])).unwrap(), int(2));
        let f = p(&[3, -1, 0, 2]);
        assert_eq!(f.resultant(&f).unwrap(), int(0));
        assert_eq!(f.resultant(&UniPoly::zero()), Err(Error::ZeroPolynomial));
        // constants: Res(c, g) = c^deg g
        assert_eq!(p(&[3]).resultant(&p(&[1, 1, 1])).unwrap(), int(9));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(p(&[1, 1, 1]).discriminant().unwrap(), int(-3));
        assert_eq!(p(&[1, 0, 0, 1]).discriminant().unwrap(), int(-27));
        assert_eq!(p(&[1, 0, 0, -4, 3]).discriminant().unwrap(), int(0));
        assert_eq!(p(&[5]).discriminant(), Err(Error::ConstantPolynomial));
        // generic quadratic a x^2 + b x + c: b^2 - 4ac
        assert_eq!(p(&[7, 5, 3]).discriminant().unwrap(), int(25 - 84));
    }

    #[test]
    fn squarefree_examples() {
        let f = p(&[1, 0, 0, -4, 3]); // (X-1)^2 (3X^2+2X+1)
        let want = &p(&[-1, 1]) * &UniPoly::new(vec![rat(1, 3), rat(2, 3), int(1)]);
        assert_eq!(f.squarefree_part(), want);
        assert_eq!(UniPoly::monomial(int(1), 6).squarefree_part(), UniPoly::x());
        let g = p(&[2, 0, 4]);
        assert_eq!(g.squarefree_part(), g.monic());
    }

    #[test]
    fn yun_decomposition() {
        // (X-1)^3 (X+2)^2 (X^2+1)
        let f = &(&p(&[-1, 1]).pow(3) * &p(&[2, 1]).pow(2)) * &p(&[1, 0, 1]);
        let d = f.squarefree_decomposition();
        assert_eq!(d, vec![(p(&[1, 0, 1]), 1), (p(&[2, 1]), 2), (p(&[-1, 1]), 3)]);
    }

    #[test]
    fn pseudo_remainder_identity() {
        let a = p(&[3, 1, 4, 1, 5]);
        let b = p(&[2, 7, 3]);
        let r = a.pseudo_rem(&b);
        let (_, rr) = a.scale(&int(27)).div_rem(&b);
        assert_eq!(r, rr);
    }

    #[test]
    fn integer_resultant_matches_rational() {
        let a = IntPoly::new([3, -2, 0, 5].map(BigInt::from).to_vec());
        let b = IntPoly::new([-1, 4, 2].map(BigInt::from).to_vec());
        let ra = a.resultant(&b).unwrap();
        let rq = a.to_rational().resultant(&b.to_rational()).unwrap();
        assert_eq!(Rational::from_integer(ra), rq);
    }
}
