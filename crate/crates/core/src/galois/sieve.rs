//! Frobenius cycle-type sieve for degrees 5 and 6.
//!
//! A candidate survives while it contains every observed cycle type, has
//! the parity forced by the discriminant, and has no cycle type whose
//! expected number of sightings so far reaches [`ABSENCE_EXPECTATION`]
//! without a single sighting. Candidates are only ever removed, so a
//! larger prime budget never enlarges the set.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use super::{is_square, Candidate, Evidence, GaloisId, IdMode, TransitiveGroupEntry, TransitiveTables};
use crate::arith::{primes_from, PrimeModulus};
use crate::error::{Error, Result};
use crate::factor::{cycle_type_mod_p, factor_over_q};
use crate::poly::UniPoly;

pub const DEFAULT_PRIME_BUDGET: usize = 200;

/// A cycle type of frequency `k/|H|` in `H` rules `H` out once
/// `primes * k/|H|` reaches this value with no sighting.
const ABSENCE_EXPECTATION: usize = 20;

pub fn sieve_degree_5_6(f: &UniPoly, tables: &TransitiveTables, budget: usize) -> Result<GaloisId> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if !(5..=6).contains(&n) {
        return Err(Error::DegreeOutOfRange {
            degree: n,
            min: 5,
            max: 6,
        });
    }
    if budget == 0 {
        return Err(Error::Domain(String::from("prime budget must be positive")));
    }
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let disc_square = is_square(&f.discriminant()?);
    let fa = factor_over_q(f)?;
    let ft = fa.factorization_type();
    if !fa.is_irreducible() {
        return Ok(GaloisId {
            degree: n,
            mode: IdMode::Definitive,
            transitive: false,
            candidates: Vec::new(),
            order: None,
            factorization_type: ft,
            evidence: Evidence {
                disc_square,
                ..Evidence::default()
            },
        });
    }

    let mut alive: Vec<&TransitiveGroupEntry> = tables
        .degree(n)
        .iter()
        .filter(|e| e.in_alternating == disc_square)
        .collect();
    let mut seen: BTreeSet<_> = BTreeSet::new();
    let mut primes = Vec::new();
    for p in primes_from(3) {
        if primes.len() == budget || alive.len() <= 1 {
            break;
        }
        let Some(ct) = cycle_type_mod_p(f, PrimeModulus::new(p)?) else {
            continue;
        };
        primes.push(p);
        seen.insert(ct);
        let used = primes.len();
        alive.retain(|e| {
            seen.iter().all(|c| e.cycle_types.contains(c))
                && e.cycle_type_counts
                    .iter()
                    .all(|(c, &k)| seen.contains(c) || used * k < ABSENCE_EXPECTATION * e.order())
        });
    }

    let candidates: Vec<Candidate> = alive
        .iter()
        .map(|e| Candidate {
            label: e.label(),
            name: String::from(e.name),
            order: e.order(),
        })
        .collect();
    let order = match candidates.as_slice() {
        [first, rest @ ..] if rest.iter().all(|c| c.order == first.order) => Some(first.order),
        _ => None,
    };
    Ok(GaloisId {
        degree: n,
        mode: if order.is_some() {
            IdMode::Definitive
        } else {
            IdMode::Sieved
        },
        transitive: true,
        candidates,
        order,
        factorization_type: ft,
        evidence: Evidence {
            primes,
            cycle_types: seen,
            disc_square,
        },
    })
}
