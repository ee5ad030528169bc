//! Galois groups of squarefree polynomials of degree 2 to 6 over `Q`.
//!
//! Degrees up to 4 are classified exactly from discriminants, the cubic
//! resolvent and factorization. Degrees 5 and 6 are sieved with Frobenius
//! cycle types against the transitive tables; the result records whether
//! the evidence pins the group order down.

mod sieve;
mod table;

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::arith::{rational_sqrt, Rational};
use crate::error::{Error, Result};
use crate::factor::{factor_over_q, rational_roots, FactorizationType};
use crate::perm::{Partition, PermGroup};
use crate::poly::UniPoly;

pub use sieve::{sieve_degree_5_6, DEFAULT_PRIME_BUDGET};
pub use table::{transitive_table, TransitiveGroupEntry, TransitiveTables};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdMode {
    Definitive,
    Sieved,
}

impl fmt::Display for IdMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdMode::Definitive => "definitive",
            IdMode::Sieved => "sieved",
        })
    }
}

/// A possible Galois group: a transitive table entry (`nTk`) or, for a
/// reducible polynomial, an abstract group name.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Candidate {
    pub label: String,
    pub name: String,
    pub order: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Evidence {
    /// Usable primes consulted, ascending.
    pub primes: Vec<u64>,
    pub cycle_types: BTreeSet<Partition>,
    pub disc_square: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisId {
    pub degree: usize,
    pub mode: IdMode,
    /// Whether the polynomial is irreducible.
    pub transitive: bool,
    /// Exactly one entry in definitive mode when the group is known; in
    /// sieved mode, every table entry consistent with the evidence. Empty
    /// for a reducible polynomial of degree 5 or 6.
    pub candidates: Vec<Candidate>,
    /// Set whenever every candidate has the same order.
    pub order: Option<usize>,
    pub factorization_type: FactorizationType,
    pub evidence: Evidence,
}

impl GaloisId {
    /// The single label of a definitive identification.
    pub fn label(&self) -> Option<&str> {
        match (self.mode, self.candidates.as_slice()) {
            (IdMode::Definitive, [c]) => Some(&c.label),
            _ => None,
        }
    }

    pub fn is_definitive(&self) -> bool {
        self.mode == IdMode::Definitive
    }
}

impl fmt::Display for GaloisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.mode, self.candidates.as_slice()) {
            (IdMode::Definitive, [c]) => write!(f, "{} ({}, order {})", c.label, c.name, c.order),
            (IdMode::Definitive, []) => write!(f, "reducible, factor degrees {}", self.factorization_type),
            _ => {
                f.write_str("one of ")?;
                for (i, c) in self.candidates.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{}", c.label)?;
                }
                if let Some(o) = self.order {
                    write!(f, " (order {o})")?;
                }
                Ok(())
            }
        }
    }
}

/// Outcome of comparing an identification with a reference group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Match {
    Yes,
    No,
    Indeterminate,
}

pub fn is_square(q: &Rational) -> bool {
    rational_sqrt(q).is_some()
}

/// The cubic whose roots are `x1 x2 + x3 x4`, `x1 x3 + x2 x4`,
/// `x1 x4 + x2 x3` for the roots `x_i` of a monic quartic.
pub fn resolvent_cubic(f: &UniPoly) -> Result<UniPoly> {
    if f.deg() != 4 {
        return Err(Error::DegreeOutOfRange {
            degree: f.deg(),
            min: 4,
            max: 4,
        });
    }
    let g = f.monic();
    let (a, b, c, d) = (g.coeff(3), g.coeff(2), g.coeff(1), g.coeff(0));
    let four = Rational::from_integer(4.into());
    Ok(UniPoly::new(alloc::vec![
        -(&a * &a * &d - &four * &b * &d + &c * &c),
        &a * &c - &four * &d,
        -b,
        Rational::one(),
    ]))
}

fn abstract_group(name: &str, order: usize) -> Candidate {
    Candidate {
        label: String::from(name),
        name: String::from(name),
        order,
    }
}

fn table_group(tables: &TransitiveTables, label: &str) -> Candidate {
    let e = tables.by_label(label).expect("label present in table");
    Candidate {
        label: e.label(),
        name: String::from(e.name),
        order: e.order(),
    }
}

fn definitive(n: usize, transitive: bool, c: Candidate, ft: FactorizationType, disc_square: bool) -> GaloisId {
    GaloisId {
        degree: n,
        mode: IdMode::Definitive,
        transitive,
        order: Some(c.order),
        candidates: alloc::vec![c],
        factorization_type: ft,
        evidence: Evidence {
            disc_square,
            ..Evidence::default()
        },
    }
}

/// Whether a monic quartic with exactly one rational resolvent root `r`
/// has cyclic group: both `X^2 - rX + d` and `X^2 + aX + (b - r)` must
/// split over `Q(sqrt(disc))`.
fn quartic_is_cyclic(g: &UniPoly, r: &Rational, disc: &Rational) -> bool {
    let (a, b, d) = (g.coeff(3), g.coeff(2), g.coeff(0));
    let four = Rational::from_integer(4.into());
    let splits = |q: Rational| q.is_zero() || is_square(&q) || is_square(&(&q * disc));
    splits(r * r - &four * &d) && splits(&a * &a - &four * (&b - r))
}

/// Exact Galois group of a squarefree polynomial of degree 1 to 4.
pub fn classify_degree_le4(f: &UniPoly, tables: &TransitiveTables) -> Result<GaloisId> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if !(1..=4).contains(&n) {
        return Err(Error::DegreeOutOfRange {
            degree: n,
            min: 1,
            max: 4,
        });
    }
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let g = f.monic();
    let disc = g.discriminant()?;
    let disc_square = is_square(&disc);
    let fa = factor_over_q(&g)?;
    let ft = fa.factorization_type();
    let quad_disc = |h: &UniPoly| h.coeff(1) * h.coeff(1) - Rational::from_integer(4.into()) * h.coeff(0);
    let cubic_group = |disc_sq: bool| {
        if disc_sq {
            table_group(tables, "3T1")
        } else {
            table_group(tables, "3T2")
        }
    };

    let (transitive, cand) = match ft.parts() {
        [1] | [1, 1] | [1, 1, 1] | [1, 1, 1, 1] => (n == 1, abstract_group("1", 1)),
        [2] => (true, table_group(tables, "2T1")),
        [3] => (true, cubic_group(disc_square)),
        [1, 2] | [1, 1, 2] => (false, abstract_group("C2", 2)),
        [1, 3] => {
            let cubic = &fa.factors.iter().find(|(h, _)| h.deg() == 3).unwrap().0;
            let c = cubic_group(is_square(&cubic.discriminant()?));
            (false, abstract_group(if c.order == 3 { "C3" } else { "S3" }, c.order))
        }
        [2, 2] => {
            let d1 = quad_disc(&fa.factors[0].0);
            let d2 = quad_disc(&fa.factors[1].0);
            if is_square(&(d1 * d2)) {
                (false, abstract_group("C2", 2))
            } else {
                (false, abstract_group("C2xC2", 4))
            }
        }
        [4] => {
            let roots = rational_roots(&resolvent_cubic(&g)?)?;
            let label = match roots.len() {
                0 if disc_square => "4T4",
                0 => "4T5",
                1 if quartic_is_cyclic(&g, &roots[0], &disc) => "4T1",
                1 => "4T3",
                _ => "4T2",
            };
            (true, table_group(tables, label))
        }
        _ => unreachable!("factor degrees of a polynomial of degree at most 4"),
    };
    Ok(definitive(n, transitive, cand, ft, disc_square))
}

/// Identifies the Galois group of a squarefree polynomial of degree 1 to 6.
pub fn identify(f: &UniPoly, tables: &TransitiveTables, budget: usize) -> Result<GaloisId> {
    match f.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(1..=4) => classify_degree_le4(f, tables),
        Some(5 | 6) => sieve_degree_5_6(f, tables, budget),
        Some(d) => Err(Error::DegreeOutOfRange {
            degree: d,
            min: 1,
            max: 6,
        }),
    }
}

/// Compares an identification of `G_t` with the generic group `G`.
///
/// Away from the exclusion set `G_t` embeds in `G`, so equal orders mean
/// isomorphic groups; a reducible specialization of an irreducible family
/// never matches a transitive `G`.
pub fn groups_match(id: &GaloisId, reference: &PermGroup, tables: &TransitiveTables) -> Match {
    let n = reference.order();
    if !id.transitive && reference.is_transitive() {
        return Match::No;
    }
    if id.is_definitive() && id.degree <= 4 {
        let same_label = match (id.label(), tables.lookup(reference)) {
            (Some(l), Some(e)) => l == e.label(),
            _ => true,
        };
        return if same_label && id.order == Some(n) {
            Match::Yes
        } else {
            Match::No
        };
    }
    if id.candidates.is_empty() {
        return Match::Indeterminate;
    }
    if id.candidates.iter().all(|c| c.order == n) {
        Match::Yes
    } else if id.candidates.iter().all(|c| c.order != n) {
        Match::No
    } else {
        Match::Indeterminate
    }
}
