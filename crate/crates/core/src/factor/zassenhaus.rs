//! Zassenhaus factorization of squarefree primitive integer polynomials:
//! a good prime, mod-p factorization, multifactor Hensel lifting along a
//! balanced factor tree, and subset recombination with exact division.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{mod_u64, primes_from};
use crate::poly::modp::FpPoly;
use crate::poly::IntPoly;

const PRIME_TRIALS: usize = 25;

/// Polynomial with coefficients reduced into `[0, m)`.
fn reduce(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

/// Coefficients in `(-m/2, m/2]`.
fn symmetric(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m >> 1u32;
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn mul_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    reduce(&(a * b), m)
}

/// Division by a monic divisor, all arithmetic mod `m`.
fn div_rem_monic(a: &IntPoly, d: &IntPoly, m: &BigInt) -> (IntPoly, IntPoly) {
    let dd = d.deg();
    debug_assert!(d.lc().is_some_and(|l| l.is_one()));
    let mut r: Vec<BigInt> = reduce(a, m).into_coeffs();
    if r.len() <= dd {
        return (IntPoly::zero(), IntPoly::new(r));
    }
    let mut q = vec![BigInt::zero(); r.len() - dd];
    for k in (0..r.len() - dd).rev() {
        let c = r[k + dd].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (i, di) in d.coeffs().iter().enumerate() {
            r[k + i] = (&r[k + i] - &c * di).mod_floor(m);
        }
        q[k] = c;
    }
    r.truncate(dd);
    (IntPoly::new(q), reduce(&IntPoly::new(r), m))
}

fn inv_mod_big(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

fn lift_fp(g: &FpPoly) -> IntPoly {
    IntPoly::new(g.coeffs().iter().map(|&c| BigInt::from(c)).collect())
}

fn to_fp(f: &IntPoly, p: u64) -> FpPoly {
    FpPoly::new(p, f.coeffs().iter().map(|c| mod_u64(c, p)).collect())
}

/// One quadratic Hensel step: from `f = g h`, `s g + t h = 1` mod `m` to
/// the same relations mod `m^2`, keeping `h` monic.
fn hensel_step(
    f: &IntPoly,
    g: &IntPoly,
    h: &IntPoly,
    s: &IntPoly,
    t: &IntPoly,
    m: &BigInt,
) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let m2 = m * m;
    let e = reduce(&(f - &(g * h)), &m2);
    let (q, r) = div_rem_monic(&mul_mod(s, &e, &m2), h, &m2);
    let g1 = reduce(&(&(g + &(t * &e)) + &(&q * g)), &m2);
    let h1 = reduce(&(h + &r), &m2);
    let b = reduce(&(&(&(s * &g1) + &(t * &h1)) - &IntPoly::one()), &m2);
    let (c, d) = div_rem_monic(&mul_mod(s, &b, &m2), &h1, &m2);
    let s1 = reduce(&(s - &d), &m2);
    let t1 = reduce(&(&(t - &(t * &b)) - &(&c * &g1)), &m2);
    (g1, h1, s1, t1)
}

/// Lifts `f = lc(f) * prod(factors) mod p` to monic factors mod `p^(2^steps)`.
fn tree_lift(f: &IntPoly, factors: &[FpPoly], p: u64, steps: u32, big_m: &BigInt) -> Vec<IntPoly> {
    let lc = f.lc().unwrap().clone();
    if factors.len() == 1 {
        let inv = inv_mod_big(&lc, big_m).expect("p does not divide lc");
        return vec![reduce(&f.scale(&inv), big_m)];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let prod = |fs: &[FpPoly]| fs.iter().fold(FpPoly::one(p), |a, b| a.mul(b));
    let g0 = prod(left).scale(mod_u64(&lc, p));
    let h0 = prod(right);
    let (one, s0, t0) = g0.ext_gcd(&h0);
    debug_assert!(one.is_one());
    let (mut g, mut h, mut s, mut t) = (lift_fp(&g0), lift_fp(&h0), lift_fp(&s0), lift_fp(&t0));
    let mut m = BigInt::from(p);
    for _ in 0..steps {
        (g, h, s, t) = hensel_step(f, &g, &h, &s, &t, &m);
        m = &m * &m;
    }
    let ginv = inv_mod_big(g.lc().unwrap(), big_m).expect("unit leading coefficient");
    let g = reduce(&g.scale(&ginv), big_m);
    let mut out = tree_lift(&g, left, p, steps, big_m);
    out.extend(tree_lift(&h, right, p, steps, big_m));
    out
}

/// Coefficient bound for `lc(f)` times any monic factor of `f`.
fn factor_coefficient_bound(f: &IntPoly) -> BigInt {
    let norm2: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let n = f.deg() as u32;
    (norm2.sqrt() + 1u32) * (BigInt::one() << n) * f.lc().unwrap().abs()
}

/// Chooses a usable prime with the fewest modular factors.
fn choose_prime(f: &IntPoly) -> (u64, Vec<FpPoly>) {
    let lc = f.lc().unwrap();
    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    let mut tried = 0;
    for p in primes_from(3) {
        if tried == PRIME_TRIALS {
            break;
        }
        if mod_u64(lc, p) == 0 {
            continue;
        }
        let fp = to_fp(f, p);
        if !fp.is_squarefree() {
            continue;
        }
        tried += 1;
        let count = fp.factor_degrees().len();
        if best.as_ref().is_none_or(|(_, b)| count < b.len()) {
            let fs = fp.factor_squarefree();
            let done = fs.len() == 1;
            best = Some((p, fs));
            if done {
                break;
            }
        }
    }
    best.expect("a squarefree polynomial has good primes")
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn primitive_positive(f: &IntPoly) -> IntPoly {
    let p = f.primitive_part();
    if p.lc().is_some_and(|l| l.is_negative()) {
        -p
    } else {
        p
    }
}

/// Irreducible factors over `Z` of a squarefree primitive polynomial with
/// positive leading coefficient.
pub(crate) fn factor_squarefree_primitive(f: &IntPoly) -> Vec<IntPoly> {
    let n = f.deg();
    if n <= 1 {
        return vec![f.clone()];
    }
    let (p, modular) = choose_prime(f);
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    let bound = factor_coefficient_bound(f);
    let two_b = &bound * 2u32;
    let mut big_m = BigInt::from(p);
    let mut steps = 0;
    while big_m <= two_b {
        big_m = &big_m * &big_m;
        steps += 1;
    }
    let mut lifted = tree_lift(f, &modular, p, steps, &big_m);

    let mut found = Vec::new();
    let mut rest = f.clone();
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut hit = None;
        let lc = rest.lc().unwrap().clone();
        for subset in combinations(lifted.len(), s) {
            let g = subset
                .iter()
                .fold(IntPoly::constant(lc.clone()), |a, &i| mul_mod(&a, &lifted[i], &big_m));
            let g = primitive_positive(&symmetric(&g, &big_m));
            if let Some(q) = rest.exact_div_poly(&g) {
                hit = Some((subset, g, q));
                break;
            }
        }
        match hit {
            Some((subset, g, q)) => {
                found.push(g);
                rest = primitive_positive(&q);
                let mut k = 0;
                lifted.retain(|_| {
                    let keep = !subset.contains(&k);
                    k += 1;
                    keep
                });
            }
            None => s += 1,
        }
    }
    found.push(rest);
    found
}
