//! Long Weierstrass models `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`,
//! the chord-tangent law, and Lutz–Nagell torsion.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::CurvePoint;
use crate::arith::{int_valuation, prime_divisors, Rational};
use crate::error::{Error, Result};
use crate::factor::rational_roots;
use crate::poly::UniPoly;

/// Largest order of a rational torsion point.
pub const MAZUR_BOUND: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticCurve {
    a: [Rational; 5],
}

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

impl EllipticCurve {
    /// `[a1, a2, a3, a4, a6]`.
    pub fn new(a: [Rational; 5]) -> Result<Self> {
        let e = EllipticCurve { a };
        if e.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(e)
    }

    /// `y^2 = x^3 + A x + B`.
    pub fn short(a4: Rational, a6: Rational) -> Result<Self> {
        Self::new([Rational::zero(), Rational::zero(), Rational::zero(), a4, a6])
    }

    pub fn coefficients(&self) -> &[Rational; 5] {
        &self.a
    }

    pub fn discriminant(&self) -> Rational {
        let [a1, a2, a3, a4, a6] = &self.a;
        let b2 = a1 * a1 + r(4) * a2;
        let b4 = r(2) * a4 + a1 * a3;
        let b6 = a3 * a3 + r(4) * a6;
        let b8 = a1 * a1 * a6 + r(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        -(&b2 * &b2 * &b8) - r(8) * &b4 * &b4 * &b4 - r(27) * &b6 * &b6 + r(9) * &b2 * &b4 * &b6
    }

    /// `(A, B)` when the model is `y^2 = x^3 + A x + B`.
    pub fn short_coefficients(&self) -> Option<(&Rational, &Rational)> {
        let [a1, a2, a3, a4, a6] = &self.a;
        (a1.is_zero() && a2.is_zero() && a3.is_zero()).then_some((a4, a6))
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        let CurvePoint::Affine(x, y) = p else {
            return true;
        };
        let [a1, a2, a3, a4, a6] = &self.a;
        y * y + a1 * x * y + a3 * y == x * x * x + a2 * x * x + a4 * x + a6
    }

    pub fn neg(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => {
                let [a1, _, a3, _, _] = &self.a;
                CurvePoint::Affine(x.clone(), -y - a1 * x - a3)
            }
        }
    }
}

impl fmt::Display for EllipticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3, a4, a6] = &self.a;
        write!(f, "[{a1}, {a2}, {a3}, {a4}, {a6}]")
    }
}

fn sum(e: &EllipticCurve, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
    let (x1, y1, x2, y2) = match (p, q) {
        (CurvePoint::Infinity, _) => return q.clone(),
        (_, CurvePoint::Infinity) => return p.clone(),
        (CurvePoint::Affine(x1, y1), CurvePoint::Affine(x2, y2)) => (x1, y1, x2, y2),
    };
    let [a1, a2, a3, a4, _] = &e.a;
    let lambda = if x1 != x2 {
        (y2 - y1) / (x2 - x1)
    } else {
        let den = r(2) * y1 + a1 * x1 + a3;
        if den.is_zero() || y1 != y2 {
            // vertical chord or tangent
            return CurvePoint::Infinity;
        }
        (r(3) * x1 * x1 + r(2) * a2 * x1 + a4 - a1 * y1) / den
    };
    let nu = y1 - &lambda * x1;
    let x3 = &lambda * &lambda + a1 * &lambda - a2 - x1 - x2;
    let y3 = -(&lambda + a1) * &x3 - nu - a3;
    CurvePoint::Affine(x3, y3)
}

/// `p + q`; both must lie on `e`.
pub fn ec_add(e: &EllipticCurve, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
    if !e.contains(p) || !e.contains(q) {
        return Err(Error::NotOnCurve);
    }
    Ok(sum(e, p, q))
}

/// `n p` by double-and-add; negative `n` uses `-p`.
pub fn ec_mul(e: &EllipticCurve, n: i64, p: &CurvePoint) -> Result<CurvePoint> {
    if !e.contains(p) {
        return Err(Error::NotOnCurve);
    }
    let mut base = if n < 0 { e.neg(p) } else { p.clone() };
    let mut k = n.unsigned_abs();
    let mut acc = CurvePoint::Infinity;
    while k > 0 {
        if k & 1 == 1 {
            acc = sum(e, &acc, &base);
        }
        base = sum(e, &base, &base);
        k >>= 1;
    }
    Ok(acc)
}

/// Order of `p` if it is at most `cutoff`.
pub fn point_order(e: &EllipticCurve, p: &CurvePoint, cutoff: usize) -> Result<Option<usize>> {
    if !e.contains(p) {
        return Err(Error::NotOnCurve);
    }
    let mut q = p.clone();
    for k in 1..=cutoff {
        if q == CurvePoint::Infinity {
            return Ok(Some(k));
        }
        q = sum(e, &q, p);
    }
    Ok(None)
}

/// Positive `d` with `d^2 | n`, ascending.
fn square_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let mut out = alloc::vec![BigInt::one()];
    for p in prime_divisors(n)? {
        let half = int_valuation(n, p) / 2;
        let bp = BigInt::from(p);
        let mut next = Vec::new();
        for d in &out {
            let mut m = d.clone();
            for _ in 0..=half {
                next.push(m.clone());
                m *= &bp;
            }
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

/// The rational torsion subgroup of `y^2 = x^3 + A x + B` with integer `A`,
/// `B`: infinity first, then affine points ascending.
pub fn ec_torsion_lutz_nagell(e: &EllipticCurve) -> Result<Vec<CurvePoint>> {
    let (a, b) = e.short_coefficients().ok_or(Error::NonIntegralModel)?;
    if !a.is_integer() || !b.is_integer() {
        return Err(Error::NonIntegralModel);
    }
    let (a, b) = (a.to_integer(), b.to_integer());
    let disc = BigInt::from(4) * &a * &a * &a + BigInt::from(27) * &b * &b;
    let cubic = |c: BigInt| UniPoly::new(alloc::vec![(&b - c).into(), a.clone().into(), Rational::zero(), Rational::one()]);
    let mut candidates = Vec::new();
    for x in rational_roots(&cubic(BigInt::zero()))? {
        candidates.push(CurvePoint::Affine(x, Rational::zero()));
    }
    for d in square_divisors(&disc)? {
        for x in rational_roots(&cubic(&d * &d))? {
            let y = Rational::from_integer(d.clone());
            candidates.push(CurvePoint::Affine(x.clone(), -y.clone()));
            candidates.push(CurvePoint::Affine(x, y));
        }
    }
    let mut out = alloc::vec![CurvePoint::Infinity];
    for p in candidates {
        if point_order(e, &p, MAZUR_BOUND)?.is_some() {
            out.push(p);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Isomorphism from `y^2 = c * cubic(x)` to a minimal integral short model
/// `v^2 = u^3 + A u + B`, given by `u = k^2 (c x + s)`, `v = k^3 c y`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModelTransform {
    pub c: Rational,
    pub cubic: UniPoly,
    pub shift: Rational,
    pub scale: Rational,
}

impl ModelTransform {
    pub fn source_contains(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine(x, y) => y * y == &self.c * self.cubic.eval(x),
        }
    }

    pub fn forward(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => {
                let k2 = &self.scale * &self.scale;
                let u = &k2 * (&self.c * x + &self.shift);
                let v = &k2 * &self.scale * &self.c * y;
                CurvePoint::Affine(u, v)
            }
        }
    }

    pub fn backward(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(u, v) => {
                let k2 = &self.scale * &self.scale;
                let x = (u / &k2 - &self.shift) / &self.c;
                let y = v / (&k2 * &self.scale * &self.c);
                CurvePoint::Affine(x, y)
            }
        }
    }
}

/// `p`-adic exponent of a nonzero rational.
fn val(q: &Rational, p: u64) -> i64 {
    int_valuation(q.numer(), p) as i64 - int_valuation(q.denom(), p) as i64
}

fn pow_i(p: u64, e: i64) -> Rational {
    let base = Rational::from_integer(BigInt::from(p).pow(e.unsigned_abs() as u32));
    if e >= 0 {
        base
    } else {
        base.recip()
    }
}

/// Minimal integral short model of `y^2 = c * cubic(x)` for a monic cubic.
pub fn transform_scaled_model(c: &Rational, cubic: &UniPoly) -> Result<(EllipticCurve, ModelTransform)> {
    if c.is_zero() {
        return Err(Error::ZeroArgument);
    }
    if cubic.degree() != Some(3) || !cubic.lc().is_some_and(|l| l.is_one()) {
        return Err(Error::Domain(alloc::string::String::from("expected a monic cubic")));
    }
    // (X, Y) = (c x, c y): Y^2 = X^3 + a c X^2 + b c^2 X + d c^3
    let co = cubic.coeffs();
    let g = UniPoly::new(alloc::vec![&co[0] * c * c * c, &co[1] * c * c, &co[2] * c, Rational::one()]);
    let shift = &g.coeffs()[2] / r(3);
    // U = X + s
    let short = g.compose(&UniPoly::new(alloc::vec![-shift.clone(), Rational::one()]));
    let (a, b) = (short.coeff(1), short.coeff(0));
    // (u, v) = (k^2 U, k^3 Y) with k = prod p^e_p, the least exponents
    // making k^4 A and k^6 B integral.
    let mut primes: Vec<u64> = Vec::new();
    for q in [&a, &b] {
        if !q.is_zero() {
            primes.extend(prime_divisors(q.numer())?);
            primes.extend(prime_divisors(q.denom())?);
        }
    }
    primes.sort_unstable();
    primes.dedup();
    let mut scale = Rational::one();
    for p in primes {
        let need = |q: &Rational, w: i64| if q.is_zero() { i64::MIN } else { Integer::div_ceil(&(-val(q, p)), &w) };
        let e = need(&a, 4).max(need(&b, 6));
        scale *= pow_i(p, e);
    }
    let k2 = &scale * &scale;
    let (a_min, b_min) = (&a * &k2 * &k2, &b * &k2 * &k2 * &k2);
    let curve = EllipticCurve::short(a_min, b_min)?;
    let t = ModelTransform {
        c: c.clone(),
        cubic: cubic.clone(),
        shift,
        scale,
    };
    Ok((curve, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use alloc::collections::BTreeSet;

    fn pt(x: i64, y: i64) -> CurvePoint {
        CurvePoint::affine(int(x), int(y))
    }

    fn e36() -> EllipticCurve {
        EllipticCurve::short(int(0), int(1)).unwrap()
    }

    #[test]
    fn group_law_examples() {
        let e = e36();
        assert_eq!(ec_add(&e, &pt(2, 3), &pt(2, 3)).unwrap(), pt(0, 1));
        assert_eq!(ec_add(&e, &pt(-1, 0), &pt(-1, 0)).unwrap(), CurvePoint::Infinity);
        assert_eq!(ec_add(&e, &pt(2, 3), &CurvePoint::Infinity).unwrap(), pt(2, 3));
        assert_eq!(ec_add(&e, &pt(2, 3), &pt(2, -3)).unwrap(), CurvePoint::Infinity);
        assert_eq!(ec_add(&e, &pt(1, 1), &pt(0, 1)), Err(Error::NotOnCurve));
        assert_eq!(ec_mul(&e, 6, &pt(2, 3)).unwrap(), CurvePoint::Infinity);
        assert_eq!(ec_mul(&e, -1, &pt(2, 3)).unwrap(), pt(2, -3));
        assert_eq!(point_order(&e, &pt(2, 3), 12).unwrap(), Some(6));
        assert_eq!(point_order(&e, &pt(0, 1), 12).unwrap(), Some(3));
        assert!(EllipticCurve::short(int(0), int(0)).is_err());
        assert_eq!(e.discriminant(), int(-432));
    }

    #[test]
    fn tangent_line_oracle_on_long_model() {
        // y^2 + xy + y = x^3 - x^2, a1 = a3 = 1, a2 = -1
        let e = EllipticCurve::new([int(1), int(-1), int(1), int(0), int(0)]).unwrap();
        let p = pt(0, 0);
        let d = ec_add(&e, &p, &p).unwrap();
        assert!(e.contains(&d));
        // tangent slope at (0,0) is 0, so x3 = -a2 = 1 and y3 = -a1 x3 - a3
        assert_eq!(d, CurvePoint::affine(int(1), int(-2)));
        assert_eq!(ec_add(&e, &d, &e.neg(&d)).unwrap(), CurvePoint::Infinity);
    }

    /// Short-model addition written out directly, independent of the
    /// long-model formulas above.
    fn naive_add(a: &Rational, p: &Option<(Rational, Rational)>, q: &Option<(Rational, Rational)>) -> Option<(Rational, Rational)> {
        let (Some((x1, y1)), Some((x2, y2))) = (p, q) else {
            return p.clone().or(q.clone());
        };
        let l = if x1 == x2 {
            if y1 != y2 || y1.is_zero() {
                return None;
            }
            (int(3) * x1 * x1 + a) / (int(2) * y1)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = &l * &l - x1 - x2;
        let y3 = &l * (x1 - &x3) - y1;
        Some((x3, y3))
    }

    fn naive_torsion(a: i64, b: i64) -> BTreeSet<CurvePoint> {
        let disc = 4 * a * a * a + 27 * b * b;
        let mut out = BTreeSet::from([CurvePoint::Infinity]);
        for x in -200i64..=200 {
            let rhs = x * x * x + a * x + b;
            if rhs < 0 {
                continue;
            }
            let y = (rhs as f64).sqrt().round() as i64;
            if y * y != rhs || (y != 0 && disc % (y * y) != 0) {
                continue;
            }
            for y in [y, -y] {
                let p = Some((int(x), int(y)));
                let mut q = p.clone();
                for _ in 0..12 {
                    if q.is_none() {
                        out.insert(CurvePoint::affine(int(x), int(y)));
                        break;
                    }
                    q = naive_add(&int(a), &q, &p);
                }
            }
        }
        out
    }

    #[test]
    fn torsion_examples() {
        let t = ec_torsion_lutz_nagell(&e36()).unwrap();
        assert_eq!(
            t,
            alloc::vec![CurvePoint::Infinity, pt(-1, 0), pt(0, -1), pt(0, 1), pt(2, -3), pt(2, 3)]
        );
        let t = ec_torsion_lutz_nagell(&EllipticCurve::short(int(-1), int(0)).unwrap()).unwrap();
        assert_eq!(t, alloc::vec![CurvePoint::Infinity, pt(-1, 0), pt(0, 0), pt(1, 0)]);
        let t = ec_torsion_lutz_nagell(&EllipticCurve::short(int(0), int(2)).unwrap()).unwrap();
        assert_eq!(t, alloc::vec![CurvePoint::Infinity]);
        assert_eq!(
            ec_torsion_lutz_nagell(&EllipticCurve::short(rat(1, 2), int(1)).unwrap()),
            Err(Error::NonIntegralModel)
        );
        let long = EllipticCurve::new([int(1), int(0), int(0), int(0), int(1)]).unwrap();
        assert_eq!(ec_torsion_lutz_nagell(&long), Err(Error::NonIntegralModel));
    }

    #[test]
    fn torsion_matches_candidate_sweep() {
        for (a, b) in [(0, 1), (-1, 0), (0, 2), (0, -432), (-43, 166), (4, 0), (0, 64), (-2, 1), (1, 1), (-7, 10)] {
            let e = EllipticCurve::short(int(a), int(b)).unwrap();
            let got: BTreeSet<CurvePoint> = ec_torsion_lutz_nagell(&e).unwrap().into_iter().collect();
            assert_eq!(got, naive_torsion(a, b), "y^2 = x^3 + {a}x + {b}");
        }
    }

    #[test]
    fn torsion_is_closed_and_bounded() {
        for (a, b) in [(0, 1), (-43, 166), (0, -432), (-1, 0)] {
            let e = EllipticCurve::short(int(a), int(b)).unwrap();
            let t = ec_torsion_lutz_nagell(&e).unwrap();
            for p in &t {
                assert!(point_order(&e, p, MAZUR_BOUND).unwrap().is_some());
                for k in 1..=12 {
                    assert!(t.contains(&ec_mul(&e, k, p).unwrap()));
                }
            }
        }
        // y^2 = x^3 - 43x + 166 has a point of order 7
        let e = EllipticCurve::short(int(-43), int(166)).unwrap();
        assert_eq!(ec_torsion_lutz_nagell(&e).unwrap().len(), 7);
    }

    #[test]
    fn group_axioms_on_torsion() {
        let e = e36();
        let t = ec_torsion_lutz_nagell(&e).unwrap();
        for p in &t {
            for q in &t {
                let pq = ec_add(&e, p, q).unwrap();
                assert_eq!(pq, ec_add(&e, q, p).unwrap());
                for s in &t {
                    let l = ec_add(&e, &pq, s).unwrap();
                    let r = ec_add(&e, p, &ec_add(&e, q, s).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn scaled_model_for_the_quartic_case() {
        let cubic = UniPoly::from_ints(&[72, 48, 12, 1]);
        let (e, tr) = transform_scaled_model(&int(2), &cubic).unwrap();
        assert_eq!(e, e36());
        let src = [pt(0, 12), pt(0, -12), pt(-4, 4), pt(-4, -4), pt(-6, 0)];
        let torsion = ec_torsion_lutz_nagell(&e).unwrap();
        let mut images = BTreeSet::new();
        for p in &src {
            assert!(tr.source_contains(p));
            let q = tr.forward(p);
            assert!(torsion.contains(&q));
            assert_eq!(&tr.backward(&q), p);
            images.insert(q);
        }
        images.insert(CurvePoint::Infinity);
        assert_eq!(images, torsion.into_iter().collect());
        assert_eq!(tr.forward(&pt(0, 12)), pt(2, 3));
        assert_eq!(tr.forward(&pt(-4, 4)), pt(0, 1));
        assert_eq!(tr.forward(&pt(-6, 0)), pt(-1, 0));
    }

    #[test]
    fn scaled_model_identity_and_round_trip() {
        let (e, tr) = transform_scaled_model(&int(1), &UniPoly::from_ints(&[1, 0, 0, 1])).unwrap();
        assert_eq!(e, e36());
        assert_eq!(tr.shift, int(0));
        assert_eq!(tr.scale, int(1));
        assert_eq!(tr.forward(&pt(2, 3)), pt(2, 3));

        // targets y^2 = x^3 + 9x + 27 (no shift, no rescaling) and
        // y^2 = x^3 - 2 (shift 1/2, scale 2); both have positive rank
        for (c, cubic) in [
            (int(3), UniPoly::from_ints(&[1, 1, 0, 1])),
            (rat(1, 2), UniPoly::new(alloc::vec![rat(3, 4), int(3), int(3), int(1)])),
        ] {
            let (e, tr) = transform_scaled_model(&c, &cubic).unwrap();
            let (a, b) = e.short_coefficients().unwrap();
            assert!(a.is_integer() && b.is_integer());
            // small points on the target, then multiples
            let mut seeds = Vec::new();
            for x in -30i64..=30 {
                let rhs = int(x * x * x) + a * int(x) + b;
                if let Some(y) = crate::arith::rational_sqrt(&rhs) {
                    if !y.is_zero() {
                        seeds.push(CurvePoint::affine(int(x), y));
                    }
                }
            }
            let gen = seeds
                .into_iter()
                .find(|p| point_order(&e, p, MAZUR_BOUND).unwrap().is_none())
                .expect("a point of infinite order");
            for k in 1..=20 {
                let q = ec_mul(&e, k, &gen).unwrap();
                let p = tr.backward(&q);
                assert!(tr.source_contains(&p));
                assert_eq!(tr.forward(&p), q);
                assert_eq!(tr.backward(&tr.forward(&p)), p);
            }
        }
        assert!(transform_scaled_model(&int(0), &UniPoly::from_ints(&[1, 0, 0, 1])).is_err());
        assert!(transform_scaled_model(&int(1), &UniPoly::from_ints(&[1, 0, 1])).is_err());
    }
}
