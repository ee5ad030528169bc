//! Plane curves `f(T, X) = 0`, rational parametrizations, bounded point
//! searches, and the elliptic-curve arithmetic used for the case analysis.

mod elliptic;
mod identities;

pub use elliptic::{
    ec_add, ec_mul, ec_torsion_lutz_nagell, point_order, transform_scaled_model, EllipticCurve,
    ModelTransform, MAZUR_BOUND,
};
pub use identities::{case_identities, verify_case_identities, CaseIdentity};

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{height, rationals_of_height, sweep_key, Rational};
use crate::error::{Error, Result};
use crate::factor::{rational_roots, RootSieve};
use crate::poly::{BiPoly, RatFn2, UniPoly};

/// An affine point or the point at infinity. Plane-curve points are
/// `(t, x)`; elliptic-curve points are `(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine(Rational, Rational),
}

impl CurvePoint {
    pub fn affine(a: Rational, b: Rational) -> Self {
        CurvePoint::Affine(a, b)
    }

    pub fn coords(&self) -> Option<(&Rational, &Rational)> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine(a, b) => Some((a, b)),
        }
    }

    /// Larger of the two coordinate heights; zero at infinity.
    pub fn height(&self) -> BigInt {
        match self {
            CurvePoint::Infinity => BigInt::zero(),
            CurvePoint::Affine(a, b) => height(a).max(height(b)),
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => f.write_str("infinity"),
            CurvePoint::Affine(a, b) => write!(f, "({a}, {b})"),
        }
    }
}

/// Order used for plane-curve searches: point height, then the first
/// coordinate, then the second, each by sweep key. Searches at a smaller
/// bound return a prefix of searches at a larger one.
pub fn canonical_key(p: &CurvePoint) -> (BigInt, (BigInt, BigInt, BigInt), (BigInt, BigInt, BigInt)) {
    match p {
        CurvePoint::Infinity => (BigInt::zero(), Default::default(), Default::default()),
        CurvePoint::Affine(a, b) => (p.height(), sweep_key(a), sweep_key(b)),
    }
}

#[derive(Clone, Debug)]
pub struct PlaneCurve {
    f: BiPoly,
    sieve: RootSieve,
}

impl PartialEq for PlaneCurve {
    fn eq(&self, other: &Self) -> bool {
        self.f == other.f
    }
}

impl PlaneCurve {
    pub fn new(f: BiPoly) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let sieve = RootSieve::new(&f);
        Ok(PlaneCurve { f, sieve })
    }

    pub fn equation(&self) -> &BiPoly {
        &self.f
    }

    pub fn contains(&self, t: &Rational, x: &Rational) -> bool {
        self.f.eval2(t, x).is_zero()
    }
}

/// A univariate rational function in lowest terms with monic denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct UniRatFn {
    num: UniPoly,
    den: UniPoly,
}

impl UniRatFn {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(UniRatFn {
                num,
                den: UniPoly::one(),
            });
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lc = den.lc().expect("nonzero").clone();
        let inv = lc.recip();
        Ok(UniRatFn {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn poly(p: UniPoly) -> Self {
        UniRatFn {
            num: p,
            den: UniPoly::one(),
        }
    }

    /// A rational function of two variables that only involves `T`.
    pub fn from_ratfn2(r: &RatFn2) -> Option<Result<Self>> {
        Some(Self::new(r.num.as_t_poly()?, r.den.as_t_poly()?))
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn eval(&self, v: &Rational) -> Option<Rational> {
        let d = self.den.eval(v);
        (!d.is_zero()).then(|| self.num.eval(v) / d)
    }
}

impl fmt::Display for UniRatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num.to_string_in("V"))
        } else {
            write!(f, "({})/({})", self.num.to_string_in("V"), self.den.to_string_in("V"))
        }
    }
}

/// A map from the affine line with one or two components.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalMap {
    components: Vec<UniRatFn>,
}

impl RationalMap {
    pub fn new(components: Vec<UniRatFn>) -> Result<Self> {
        if !(1..=2).contains(&components.len()) {
            return Err(Error::Domain(alloc::format!(
                "a rational map has one or two components, got {}",
                components.len()
            )));
        }
        Ok(RationalMap { components })
    }

    pub fn components(&self) -> &[UniRatFn] {
        &self.components
    }
}

/// Componentwise value at `v`; `None` where some denominator vanishes.
pub fn eval_map(m: &RationalMap, v: &Rational) -> Option<Vec<Rational>> {
    m.components.iter().map(|c| c.eval(v)).collect()
}

/// `b^m d^n f(a/b, c/d)` for `T = a/b`, `X = c/d`, with `m`, `n` at least
/// the `T`- and `X`-degrees of `f`.
fn clear_along(f: &BiPoly, t: &UniRatFn, x: &UniRatFn, m: usize, n: usize) -> UniPoly {
    let powers = |p: &UniPoly, k: usize| {
        let mut out = Vec::with_capacity(k + 1);
        out.push(UniPoly::one());
        for i in 0..k {
            let next = &out[i] * p;
            out.push(next);
        }
        out
    };
    let (ta, tb) = (powers(&t.num, m), powers(&t.den, m));
    let (xc, xd) = (powers(&x.num, n), powers(&x.den, n));
    let mut acc = UniPoly::zero();
    for (c, i, j) in f.terms() {
        let term = &(&(&ta[i] * &tb[m - i]) * &xc[j]) * &xd[n - j];
        acc = &acc + &term.scale(&c);
    }
    acc
}

/// Whether `psi` maps the line into `curve` and `phi` inverts it, both as
/// exact identities of rational functions in `V`.
pub fn verify_parametrization(curve: &PlaneCurve, psi: &RationalMap, phi: &RatFn2) -> bool {
    let [t, x] = psi.components() else {
        return false;
    };
    let f = curve.equation();
    let on_curve = clear_along(f, t, x, f.t_degree(), f.x_degree().unwrap_or(0));
    if !on_curve.is_zero() {
        return false;
    }
    let m = phi.num.t_degree().max(phi.den.t_degree());
    let n = phi.num.x_degree().unwrap_or(0).max(phi.den.x_degree().unwrap_or(0));
    let num = clear_along(&phi.num, t, x, m, n);
    let den = clear_along(&phi.den, t, x, m, n);
    !den.is_zero() && (&num - &(&den * &UniPoly::x())).is_zero()
}

/// Points of `curve` with first coordinate `t` and second coordinate of
/// height at most `bound`, in ascending order of the second coordinate.
pub fn points_over(curve: &PlaneCurve, t: &Rational, bound: u64) -> Result<Vec<CurvePoint>> {
    if curve.sieve.excludes(t) {
        return Ok(Vec::new());
    }
    let g = curve.equation().specialize(t);
    let bound_big = BigInt::from(bound);
    let xs: Vec<Rational> = if g.is_zero() {
        let mut all: Vec<Rational> = (1..=bound).flat_map(rationals_of_height).collect();
        all.sort();
        all
    } else {
        rational_roots(&g)?
            .into_iter()
            .filter(|x| height(x) <= bound_big)
            .collect()
    };
    Ok(xs.into_iter().map(|x| CurvePoint::Affine(t.clone(), x)).collect())
}

/// Sorts search results into canonical order.
pub fn sort_canonical(points: &mut [CurvePoint]) {
    points.sort_by_cached_key(canonical_key);
}

/// All points `(t, x)` of `curve` with both heights at most `bound`, in
/// canonical order.
pub fn bounded_point_search(curve: &PlaneCurve, bound: u64) -> Result<Vec<CurvePoint>> {
    let mut out = Vec::new();
    for h in 1..=bound {
        for t in rationals_of_height(h) {
            out.extend(points_over(curve, &t, bound)?);
        }
    }
    sort_canonical(&mut out);
    Ok(out)
}

/// Whether `(t, x)` lies on the pullback of `value` under `phi`, that is,
/// on the zero set of `num(phi) - value * den(phi)`. This includes points
/// where `phi` is not defined by its given formula.
pub fn in_pullback(phi: &RatFn2, value: &Rational, t: &Rational, x: &Rational) -> bool {
    phi.num.eval2(t, x) == value * phi.den.eval2(t, x)
}

/// Points of `curve` of height at most `bound` on the pullback of `value`
/// under `phi`, in canonical order.
pub fn pullback_fiber(phi: &RatFn2, value: &Rational, curve: &PlaneCurve, bound: u64) -> Result<Vec<CurvePoint>> {
    Ok(bounded_point_search(curve, bound)?
        .into_iter()
        .filter(|p| match p {
            CurvePoint::Affine(t, x) => in_pullback(phi, value, t, x),
            CurvePoint::Infinity => false,
        })
        .collect())
}
