//! Parallel height sweeps. Each `t` is processed independently and results
//! are collected in input order, so any worker count gives the serial
//! output.

use hitbox_core::arith::rationals_up_to_height;
use hitbox_core::factor::rational_roots;
use hitbox_core::hit::{EquivalenceReport, Harness, ReportKind, SpecializationRecord};
use hitbox_core::{Rational, Result};
use num_traits::Zero;
use rayon::prelude::*;

use crate::fixture::Parametrization;

pub const THREADS_ENV: &str = "HITBOX_THREADS";

/// Worker count from `HITBOX_THREADS`, when set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV).ok()?.trim().parse().ok().filter(|&n| n > 0)
}

/// A pool of `threads` workers; `None` lets rayon pick.
pub fn pool(threads: Option<usize>) -> rayon::ThreadPool {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        b = b.num_threads(n);
    }
    b.build().expect("thread pool")
}

/// Maps `f` over `ts` in parallel. Output order is input order; on error
/// the first failing `t` in input order wins.
pub fn par_map<R, F>(pool: &rayon::ThreadPool, ts: &[Rational], f: F) -> Result<Vec<R>>
where
    R: Send,
    F: Fn(&Rational) -> Result<R> + Sync,
{
    let results: Vec<Result<R>> = pool.install(|| ts.par_iter().map(&f).collect());
    results.into_iter().collect()
}

pub fn verify(pool: &rayon::ThreadPool, h: &Harness, kind: ReportKind, height_bound: u64) -> Result<EquivalenceReport> {
    let ts = rationals_up_to_height(height_bound);
    let records = match kind {
        ReportKind::Equivalence => par_map(pool, &ts, |t| h.record(t))?,
        ReportKind::FactorizationImplication => par_map(pool, &ts, |t| h.factorization_record(t))?,
    };
    Ok(h.assemble(kind, height_bound, records))
}

/// Exceptional `t` outside `D`, in sweep order, with witnesses.
pub fn enumerate(pool: &rayon::ThreadPool, h: &Harness, height_bound: u64) -> Result<Vec<SpecializationRecord>> {
    let ts: Vec<Rational> = rationals_up_to_height(height_bound)
        .into_iter()
        .filter(|t| !h.data.in_d(t))
        .collect();
    let hits = par_map(pool, &ts, |t| {
        Ok(match h.witness(t)? {
            Some(_) => Some(h.factorization_record(t)?),
            None => None,
        })
    })?;
    Ok(hits.into_iter().flatten().collect())
}

impl Parametrization {
    /// Whether `t` is the `T`-coordinate of the parametrization at some
    /// rational `v` where it is defined.
    pub fn reaches(&self, t: &Rational) -> Result<bool> {
        let tc = &self.psi.components()[0];
        let g = tc.num() - &tc.den().scale(t);
        if g.is_zero() {
            // constant T-coordinate equal to t
            return Ok(true);
        }
        Ok(rational_roots(&g)?.iter().any(|v| !tc.den().eval(v).is_zero()))
    }
}

/// `t` outside `D` up to the height bound that the parametrization reaches.
pub fn parametrized_values(
    pool: &rayon::ThreadPool,
    h: &Harness,
    param: &Parametrization,
    height_bound: u64,
) -> Result<Vec<Rational>> {
    let ts: Vec<Rational> = rationals_up_to_height(height_bound)
        .into_iter()
        .filter(|t| !h.data.in_d(t))
        .collect();
    let flags = par_map(pool, &ts, |t| param.reaches(t))?;
    Ok(ts.into_iter().zip(flags).filter_map(|(t, f)| f.then_some(t)).collect())
}
