use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{BiPoly, UniPoly};
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::ring::Ring;

impl BiPoly {
    /// The variable `T` as an element of `Q[T][X]`.
    pub fn t() -> Self {
        Self::constant(UniPoly::x())
    }

    /// Builds a polynomial from `(coefficient, T-exponent, X-exponent)`.
    pub fn from_terms(terms: &[(Rational, usize, usize)]) -> Self {
        let mut acc = Self::zero();
        for (c, i, j) in terms {
            let m = Self::monomial(UniPoly::monomial(c.clone(), *i), *j);
            acc = &acc + &m;
        }
        acc
    }

    pub fn from_x_poly(f: &UniPoly) -> Self {
        f.map(|c| UniPoly::constant(c.clone()))
    }

    pub fn from_t_poly(f: &UniPoly) -> Self {
        Self::constant(f.clone())
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.degree()
    }

    pub fn t_degree(&self) -> usize {
        self.coeffs().iter().map(|c| c.deg()).max().unwrap_or(0)
    }

    /// `P(t, X)`; the `X`-degree drops when the leading coefficient
    /// vanishes at `t`.
    pub fn specialize(&self, t: &Rational) -> UniPoly {
        self.map(|c| c.eval(t))
    }

    pub fn eval2(&self, t: &Rational, x: &Rational) -> Rational {
        self.specialize(t).eval(x)
    }

    /// `ℓ(T)`, the coefficient of the top power of `X`.
    pub fn leading_coeff_in_x(&self) -> Result<UniPoly> {
        self.lc().cloned().ok_or(Error::ZeroPolynomial)
    }

    pub fn is_monic_in_x(&self) -> bool {
        self.lc().is_some_and(|l| l.is_one())
    }

    pub fn derivative_t(&self) -> Self {
        self.map(|c| c.derivative())
    }

    /// `Δ(T)`: the discriminant of `P` as a polynomial in `X` over `Q(T)`,
    /// with the same sign convention as [`Poly::discriminant`]. For every `t`
    /// with `ℓ(t) != 0` this specializes to the discriminant of `P(t, X)`.
    pub fn discriminant_in_x(&self) -> Result<UniPoly> {
        match self.degree() {
            None => Err(Error::ZeroPolynomial),
            Some(0) => Err(Error::ConstantPolynomial),
            Some(_) => self.discriminant(),
        }
    }

    /// Exchanges the roles of `T` and `X`.
    pub fn swap_vars(&self) -> Self {
        let mut terms = Vec::new();
        for (j, c) in self.coeffs().iter().enumerate() {
            for (i, a) in c.coeffs().iter().enumerate() {
                if !a.is_zero() {
                    terms.push((a.clone(), j, i));
                }
            }
        }
        Self::from_terms(&terms)
    }

    /// Nonzero terms as `(coefficient, T-exponent, X-exponent)`.
    pub fn terms(&self) -> Vec<(Rational, usize, usize)> {
        let mut out = Vec::new();
        for (j, c) in self.coeffs().iter().enumerate() {
            for (i, a) in c.coeffs().iter().enumerate() {
                if !a.is_zero() {
                    out.push((a.clone(), i, j));
                }
            }
        }
        out
    }

    /// Remainder of `self` modulo a polynomial monic in `X`.
    pub fn rem_monic_x(&self, m: &BiPoly) -> BiPoly {
        debug_assert!(m.is_monic_in_x());
        self.pseudo_rem(m)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.degree() {
            None => Some(Rational::zero()),
            Some(0) if self.coeffs()[0].is_constant() => Some(self.coeffs()[0].coeff(0)),
            _ => None,
        }
    }

    /// `Some(f)` when `self` does not involve `X`.
    pub fn as_t_poly(&self) -> Option<UniPoly> {
        match self.degree() {
            None => Some(UniPoly::zero()),
            Some(0) => Some(self.coeffs()[0].clone()),
            _ => None,
        }
    }
}

/// A rational function `num / den` in `T` and `X`. Not reduced.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFn2 {
    pub num: BiPoly,
    pub den: BiPoly,
}

impl RatFn2 {
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RatFn2 { num, den })
    }

    pub fn poly(p: BiPoly) -> Self {
        RatFn2 {
            num: p,
            den: BiPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::poly(BiPoly::constant(UniPoly::constant(c)))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return RatFn2 {
                num: &self.num + &o.num,
                den: self.den.clone(),
            };
        }
        RatFn2 {
            num: &(&self.num * &o.den) + &(&o.num * &self.den),
            den: &self.den * &o.den,
        }
    }

    pub fn neg(&self) -> Self {
        RatFn2 {
            num: -self.num.clone(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        RatFn2 {
            num: &self.num * &o.num,
            den: &self.den * &o.den,
        }
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RatFn2 {
            num: &self.num * &o.den,
            den: &self.den * &o.num,
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFn2 {
            num: self.num.pow_u(e),
            den: self.den.pow_u(e),
        }
    }

    /// Value at `(t, x)`, `None` where the denominator vanishes.
    pub fn eval(&self, t: &Rational, x: &Rational) -> Option<Rational> {
        let d = self.den.eval2(t, x);
        (!d.is_zero()).then(|| self.num.eval2(t, x) / d)
    }

    /// The polynomial itself when the denominator is a nonzero constant.
    pub fn into_poly(self) -> Option<BiPoly> {
        let c = self.den.as_constant()?;
        let inv = UniPoly::constant(c.recip());
        Some(self.num.scale(&inv))
    }
}
