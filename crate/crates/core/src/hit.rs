//! Exclusion sets, exceptional-specialization tests, and bounded-height
//! sweeps checking that outside `D`, `G_t` differs from the generic group
//! exactly when some auxiliary polynomial `f(t, X)` has a rational root.
//!
//! Per-`t` work ([`Harness::record`]) is independent of every other `t`;
//! [`EquivalenceReport::assemble`] sorts records canonically, so callers may
//! compute records in any order or in parallel.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{rationals_up_to_height, sweep_key, Rational};
use crate::error::{Error, Result};
use crate::factor::{factorization_type, rational_roots, FactorizationType, RootSieve};
use crate::galois::{identify, GaloisId, Match, TransitiveTables, DEFAULT_PRIME_BUDGET};
use crate::perm::Partition;
use crate::poly::{BiPoly, UniPoly};

use num_traits::Zero;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Computed,
    Fixture,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Computed => "computed",
            Provenance::Fixture => "fixture",
        })
    }
}

/// `P` together with its exclusion set `D` and auxiliary polynomials `S`.
#[derive(Clone, Debug, PartialEq)]
pub struct HitData {
    pub p: BiPoly,
    /// Ascending.
    pub d: Vec<Rational>,
    pub s: Vec<BiPoly>,
    pub d_provenance: Provenance,
    pub s_provenance: Provenance,
}

impl HitData {
    /// Computes `D` from `P` and `S` after checking that every member of
    /// `S` is monic in `X` of degree at least 2.
    pub fn new(p: BiPoly, s: Vec<BiPoly>, s_provenance: Provenance) -> Result<Self> {
        check_auxiliary(&s)?;
        let d = compute_exclusion_set(&p, &s)?;
        Ok(HitData {
            p,
            d,
            s,
            d_provenance: Provenance::Computed,
            s_provenance,
        })
    }

    pub fn in_d(&self, t: &Rational) -> bool {
        self.d.binary_search(t).is_ok()
    }

    pub fn degree(&self) -> usize {
        self.p.x_degree().unwrap_or(0)
    }
}

fn check_auxiliary(s: &[BiPoly]) -> Result<()> {
    for (i, f) in s.iter().enumerate() {
        if !f.is_monic_in_x() {
            return Err(Error::Domain(alloc::format!("S[{i}] is not monic in X")));
        }
        if f.x_degree().unwrap_or(0) < 2 {
            return Err(Error::Domain(alloc::format!("S[{i}] has X-degree below 2")));
        }
    }
    Ok(())
}

fn push_roots(out: &mut Vec<Rational>, f: &UniPoly) -> Result<()> {
    if f.is_zero() {
        return Err(Error::Inseparable);
    }
    out.extend(rational_roots(f)?);
    Ok(())
}

/// Rational roots of `lc_X(P)`, `disc_X(P)` and `disc_X(f)` for `f` in `S`,
/// ascending and without repeats. `P` must be separable over `Q(T)`,
/// i.e. `disc_X(P)` must be a nonzero polynomial.
pub fn compute_exclusion_set(p: &BiPoly, s: &[BiPoly]) -> Result<Vec<Rational>> {
    match p.x_degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        _ => {}
    }
    let mut out = Vec::new();
    push_roots(&mut out, &p.leading_coeff_in_x()?)?;
    push_roots(&mut out, &p.discriminant_in_x()?)?;
    for f in s {
        push_roots(&mut out, &f.discriminant_in_x()?)?;
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// A reference for the generic Galois group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRef {
    pub order: usize,
    pub label: Option<String>,
    /// True when obtained by specialization sampling rather than supplied.
    pub derived: bool,
}

/// Whether `id` is the reference group. Intransitive specializations never
/// match; in degree at most 4 definitive identifications compare order and
/// label; otherwise the surviving candidates must agree on the order.
pub fn match_reference(id: &GaloisId, reference: &GroupRef) -> Match {
    if !id.transitive {
        return Match::No;
    }
    if id.is_definitive() && id.degree <= 4 {
        let same_label = match (id.label(), &reference.label) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        };
        return if same_label && id.order == Some(reference.order) {
            Match::Yes
        } else {
            Match::No
        };
    }
    if id.candidates.is_empty() {
        return Match::Indeterminate;
    }
    if id.candidates.iter().all(|c| c.order == reference.order) {
        Match::Yes
    } else if id.candidates.iter().all(|c| c.order != reference.order) {
        Match::No
    } else {
        Match::Indeterminate
    }
}

/// The largest group seen over a set of sample specializations.
#[derive(Clone, Debug)]
pub struct GenericGroup {
    pub reference: GroupRef,
    /// Factorization type at the sample realizing the reference.
    pub factorization_type: FactorizationType,
    pub samples: Vec<(Rational, GaloisId)>,
}

pub const MIN_GENERIC_SAMPLES: usize = 5;

/// Identifies `G_t` at each sample and keeps the largest definitive
/// order. The result is a derived reference: specialization can only
/// shrink the group, and almost every `t` attains the generic one.
pub fn generic_group(
    data: &HitData,
    samples: &[Rational],
    tables: &TransitiveTables,
    budget: usize,
) -> Result<GenericGroup> {
    if samples.len() < MIN_GENERIC_SAMPLES {
        return Err(Error::Domain(alloc::format!(
            "need at least {MIN_GENERIC_SAMPLES} samples, got {}",
            samples.len()
        )));
    }
    if let Some(t) = samples.iter().find(|t| data.in_d(t)) {
        return Err(Error::Domain(alloc::format!("sample {t} lies in D")));
    }
    let mut ids = Vec::new();
    // (order, index into ids)
    let mut best: Option<(usize, usize)> = None;
    for t in samples {
        let id = identify(&data.p.specialize(t), tables, budget)?;
        if let (true, Some(o)) = (id.transitive, id.order) {
            if best.is_none_or(|(b, _)| o > b) {
                best = Some((o, ids.len()));
            }
        }
        ids.push((t.clone(), id));
    }
    let (_, b) = best.ok_or_else(|| {
        Error::Inconclusive(String::from("no sample gave a definitive transitive identification"))
    })?;
    let id = &ids[b].1;
    let reference = GroupRef {
        order: id.order.unwrap_or(0),
        label: id.label().map(String::from),
        derived: true,
    };
    let factorization_type = id.factorization_type.clone();
    Ok(GenericGroup {
        reference,
        factorization_type,
        samples: ids,
    })
}

/// The first `count` rationals in sweep order outside `D`.
pub fn default_samples(data: &HitData, count: usize) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut h = 1;
    while out.len() < count {
        for t in crate::arith::rationals_of_height(h) {
            if out.len() < count && !data.in_d(&t) {
                out.push(t);
            }
        }
        h += 1;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Excluded,
    Exceptional,
    Generic,
    Indeterminate,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Excluded => "excluded",
            Verdict::Exceptional => "exceptional",
            Verdict::Generic => "generic",
            Verdict::Indeterminate => "indeterminate",
        })
    }
}

/// The auxiliary polynomial index and its root certifying exceptionality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootWitness {
    /// Zero-based index into `S`.
    pub index: usize,
    pub root: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationRecord {
    pub t: Rational,
    pub in_d: bool,
    pub root_witness: Option<RootWitness>,
    pub factorization_type: FactorizationType,
    /// Absent when `P_t` is not squarefree (only possible for `t` in `D`)
    /// or when the record was built without identification.
    pub galois: Option<GaloisId>,
    /// Comparison of `galois` with the reference group.
    pub reference_match: Option<Match>,
    pub verdict: Verdict,
}

impl SpecializationRecord {
    pub fn sort_key(&self) -> (num_bigint::BigInt, num_bigint::BigInt, num_bigint::BigInt) {
        sweep_key(&self.t)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportKind {
    /// `G_t` differs from the reference iff some `f(t, X)` has a root.
    Equivalence,
    /// A factorization type other than the generic one forces a root.
    FactorizationImplication,
}

impl fmt::Display for ReportKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportKind::Equivalence => "equivalence",
            ReportKind::FactorizationImplication => "factorization-implication",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerdictCounts {
    pub excluded: usize,
    pub exceptional: usize,
    pub generic: usize,
    pub indeterminate: usize,
}

impl VerdictCounts {
    pub fn total(&self) -> usize {
        self.excluded + self.exceptional + self.generic + self.indeterminate
    }
}

#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    pub kind: ReportKind,
    pub height_bound: u64,
    pub counts: VerdictCounts,
    /// Every swept `t`, in sweep order.
    pub records: Vec<SpecializationRecord>,
    /// Indices into `records`.
    pub violations: Vec<usize>,
    /// Indices into `records` of `t` outside `D` whose comparison with the
    /// reference was indeterminate.
    pub indeterminates: Vec<usize>,
    /// Set when the check is vacuous for this configuration.
    pub invalid_configuration: Option<String>,
}

impl EquivalenceReport {
    /// Sorts records into sweep order and derives counts, violations and
    /// indeterminates. `generic_type` is the factorization type of `P`
    /// over `Q(T)` and is used for [`ReportKind::FactorizationImplication`].
    pub fn assemble(
        kind: ReportKind,
        height_bound: u64,
        mut records: Vec<SpecializationRecord>,
        data: &HitData,
        reference: &GroupRef,
        generic_type: &FactorizationType,
    ) -> Self {
        records.sort_by_cached_key(|r| r.sort_key());
        let mut counts = VerdictCounts::default();
        let mut violations = Vec::new();
        let mut indeterminates = Vec::new();
        for (i, r) in records.iter().enumerate() {
            match r.verdict {
                Verdict::Excluded => counts.excluded += 1,
                Verdict::Exceptional => counts.exceptional += 1,
                Verdict::Generic => counts.generic += 1,
                Verdict::Indeterminate => counts.indeterminate += 1,
            }
            if r.in_d {
                continue;
            }
            let witnessed = r.root_witness.is_some();
            match kind {
                ReportKind::Equivalence => match r.reference_match {
                    Some(Match::Yes) if witnessed => violations.push(i),
                    Some(Match::No) if !witnessed => violations.push(i),
                    Some(Match::Indeterminate) | None => indeterminates.push(i),
                    _ => {}
                },
                ReportKind::FactorizationImplication => {
                    if &r.factorization_type != generic_type && !witnessed {
                        violations.push(i);
                    }
                }
            }
        }
        let invalid_configuration = (data.s.is_empty() && reference.order > 1)
            .then(|| String::from("S is empty: no auxiliary polynomial can witness an exceptional specialization"));
        EquivalenceReport {
            kind,
            height_bound,
            counts,
            records,
            violations,
            indeterminates,
            invalid_configuration,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.invalid_configuration.is_none()
    }

    /// Fraction of records outside `D` with a determinate comparison.
    pub fn determinacy(&self) -> f64 {
        let outside = self.records.iter().filter(|r| !r.in_d).count();
        if outside == 0 {
            return 1.0;
        }
        1.0 - self.indeterminates.len() as f64 / outside as f64
    }
}

/// Read-only sweep context: data, reference group and per-`f` root sieves.
#[derive(Clone, Debug)]
pub struct Harness {
    pub data: HitData,
    pub reference: GroupRef,
    /// Factorization type of `P` over `Q(T)`.
    pub generic_type: FactorizationType,
    pub tables: TransitiveTables,
    pub budget: usize,
    sieves: Vec<RootSieve>,
}

impl Harness {
    pub fn new(data: HitData, reference: GroupRef, generic_type: FactorizationType, tables: TransitiveTables) -> Self {
        let sieves = data.s.iter().map(RootSieve::new).collect();
        Harness {
            data,
            reference,
            generic_type,
            tables,
            budget: DEFAULT_PRIME_BUDGET,
            sieves,
        }
    }

    /// Reference and generic factorization type taken from
    /// [`generic_group`] over [`default_samples`].
    pub fn with_derived_reference(data: HitData, tables: TransitiveTables, budget: usize) -> Result<Self> {
        let samples = default_samples(&data, 8);
        let g = generic_group(&data, &samples, &tables, budget)?;
        let mut h = Harness::new(data, g.reference, g.factorization_type, tables);
        h.budget = budget;
        Ok(h)
    }

    /// Smallest index `i`, then smallest root, with `S[i](t, x) = 0`.
    pub fn witness(&self, t: &Rational) -> Result<Option<RootWitness>> {
        for (i, (f, sieve)) in self.data.s.iter().zip(&self.sieves).enumerate() {
            if sieve.excludes(t) {
                continue;
            }
            let g = f.specialize(t);
            if let Some(root) = rational_roots(&g)?.into_iter().next() {
                return Ok(Some(RootWitness { index: i, root }));
            }
        }
        Ok(None)
    }

    fn base_record(&self, t: &Rational) -> Result<SpecializationRecord> {
        let in_d = self.data.in_d(t);
        let pt = self.data.p.specialize(t);
        let ft = if pt.is_zero() {
            Partition::default()
        } else {
            factorization_type(&pt)?
        };
        let root_witness = if in_d { None } else { self.witness(t)? };
        let verdict = if in_d {
            Verdict::Excluded
        } else if root_witness.is_some() {
            Verdict::Exceptional
        } else {
            Verdict::Generic
        };
        Ok(SpecializationRecord {
            t: t.clone(),
            in_d,
            root_witness,
            factorization_type: ft,
            galois: None,
            reference_match: None,
            verdict,
        })
    }

    /// The full record for `t`, including the Galois identification and
    /// its comparison with the reference.
    pub fn record(&self, t: &Rational) -> Result<SpecializationRecord> {
        let mut r = self.base_record(t)?;
        let pt = self.data.p.specialize(t);
        if pt.degree().unwrap_or(0) >= 1 && pt.is_squarefree() {
            let id = identify(&pt, &self.tables, self.budget)?;
            if !r.in_d {
                let m = match_reference(&id, &self.reference);
                if m == Match::Indeterminate && r.verdict == Verdict::Generic {
                    r.verdict = Verdict::Indeterminate;
                }
                r.reference_match = Some(m);
            }
            r.galois = Some(id);
        }
        Ok(r)
    }

    /// A record without Galois identification.
    pub fn factorization_record(&self, t: &Rational) -> Result<SpecializationRecord> {
        self.base_record(t)
    }

    pub fn verify_equivalence(&self, height_bound: u64) -> Result<EquivalenceReport> {
        let records = rationals_up_to_height(height_bound)
            .iter()
            .map(|t| self.record(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.assemble(ReportKind::Equivalence, height_bound, records))
    }

    pub fn verify_factorization_implication(&self, height_bound: u64) -> Result<EquivalenceReport> {
        let records = rationals_up_to_height(height_bound)
            .iter()
            .map(|t| self.factorization_record(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.assemble(ReportKind::FactorizationImplication, height_bound, records))
    }

    pub fn assemble(&self, kind: ReportKind, height_bound: u64, records: Vec<SpecializationRecord>) -> EquivalenceReport {
        EquivalenceReport::assemble(kind, height_bound, records, &self.data, &self.reference, &self.generic_type)
    }

    /// Exceptional `t` of height at most `height_bound`, in sweep order,
    /// each with its witness.
    pub fn enumerate_exceptional(&self, height_bound: u64) -> Result<Vec<SpecializationRecord>> {
        let mut out = Vec::new();
        for t in rationals_up_to_height(height_bound) {
            if self.data.in_d(&t) {
                continue;
            }
            if self.witness(&t)?.is_some() {
                out.push(self.factorization_record(&t)?);
            }
        }
        Ok(out)
    }
}

/// Checks that the sorted `X`-degrees of `S` equal the indices of the
/// maximal subgroup classes of the reference group, when its label is
/// known to the tables.
pub fn check_degree_structure(s: &[BiPoly], reference: &GroupRef, tables: &TransitiveTables) -> Result<()> {
    let Some(label) = &reference.label else {
        return Ok(());
    };
    let entry = tables
        .by_label(label)
        .ok_or_else(|| Error::Domain(alloc::format!("unknown group label {label}")))?;
    if entry.order() != reference.order {
        return Err(Error::Domain(alloc::format!(
            "group {label} has order {}, not {}",
            entry.order(),
            reference.order
        )));
    }
    if s.is_empty() {
        return Ok(());
    }
    let mut degrees: Vec<usize> = s.iter().map(|f| f.x_degree().unwrap_or(0)).collect();
    degrees.sort_unstable();
    let indices = entry.group.maximal_indices()?;
    if degrees != indices {
        return Err(Error::Domain(alloc::format!(
            "X-degrees of S are {degrees:?} but the maximal subgroups of {label} have indices {indices:?}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::poly::parse::parse_bipoly;

    fn bp(s: &str) -> BiPoly {
        parse_bipoly(s).unwrap()
    }

    fn quartic() -> HitData {
        HitData::new(
            bp("3*X^4 - 4*X^3 + 1 + 3*T^2"),
            alloc::vec![
                bp("X^4 + 4*X^3 + 81*T^2 + 27"),
                bp("X^3 + 48*X^2 + (336 - 1296*T^2)*X - 10368*T^2 + 640"),
            ],
            Provenance::Fixture,
        )
        .unwrap()
    }

    fn sextic() -> HitData {
        HitData::new(
            bp("X^6 + T^6 - 1"),
            alloc::vec![
                bp("X^2 - 62208*(T^6 - 1)^3"),
                bp("X^2 + 1728*(T^6 - 1)^2"),
                bp("X^2 + 12*X + 27 + 9*T^6"),
                bp("X^3 + 12*X^2 + 48*X + 72 - 8*T^6"),
            ],
            Provenance::Fixture,
        )
        .unwrap()
    }

    fn toy() -> HitData {
        HitData::new(bp("X^2 - T"), alloc::vec![bp("X^2 - T")], Provenance::Fixture).unwrap()
    }

    fn a4() -> GroupRef {
        GroupRef {
            order: 12,
            label: Some(String::from("4T4")),
            derived: false,
        }
    }

    fn tables() -> TransitiveTables {
        TransitiveTables::load().unwrap()
    }

    #[test]
    fn exclusion_sets() {
        assert_eq!(quartic().d, alloc::vec![int(0)]);
        assert_eq!(sextic().d, alloc::vec![int(-1), int(1)]);
        assert_eq!(toy().d, alloc::vec![int(0)]);
        assert_eq!(compute_exclusion_set(&bp("(X - T)^2"), &[]), Err(Error::Inseparable));
        assert!(HitData::new(bp("X^2 - T"), alloc::vec![bp("2*X^2 - T")], Provenance::Fixture).is_err());
        assert!(HitData::new(bp("X^2 - T"), alloc::vec![bp("X - T")], Provenance::Fixture).is_err());
    }

    #[test]
    fn exclusion_set_ignores_order_of_s() {
        let s = sextic().s;
        let mut r = s.clone();
        r.reverse();
        let p = bp("X^6 + T^6 - 1");
        assert_eq!(compute_exclusion_set(&p, &s).unwrap(), compute_exclusion_set(&p, &r).unwrap());
    }

    #[test]
    fn generic_groups() {
        let t = tables();
        let q = quartic();
        let samples = [int(1), int(2), int(3), rat(1, 2), int(5)];
        let g = generic_group(&q, &samples, &t, 200).unwrap();
        assert_eq!(g.reference.order, 12);
        assert_eq!(g.reference.label.as_deref(), Some("4T4"));
        assert!(g.reference.derived);
        assert_eq!(g.factorization_type, Partition::new(alloc::vec![4]));

        let s = sextic();
        let samples = [int(2), int(3), rat(1, 2), int(5), int(7)];
        assert_eq!(generic_group(&s, &samples, &t, 200).unwrap().reference.order, 12);

        let toy = toy();
        let samples = [int(2), int(3), rat(1, 2), int(5), int(7)];
        assert_eq!(generic_group(&toy, &samples, &t, 200).unwrap().reference.order, 2);

        assert!(generic_group(&q, &samples[..4], &t, 200).is_err());
        let with_zero = [int(0), int(2), int(3), rat(1, 2), int(5)];
        assert!(generic_group(&q, &with_zero, &t, 200).is_err());
        // every sample a nonzero square: each fibre of X^2 - T splits
        let squares = [int(1), int(4), rat(1, 4), int(9), rat(4, 9)];
        assert!(matches!(generic_group(&toy, &squares, &t, 200), Err(Error::Inconclusive(_))));
    }

    #[test]
    fn exceptional_tests() {
        let h = Harness::new(quartic(), a4(), Partition::new(alloc::vec![4]), tables());
        let r = h.record(&rat(10, 27)).unwrap();
        assert_eq!(r.verdict, Verdict::Exceptional);
        let w = r.root_witness.unwrap();
        assert_eq!(w.index, 1);
        assert_eq!(h.data.s[1].eval2(&rat(10, 27), &w.root), int(0));
        assert_eq!(r.reference_match, Some(Match::No));

        let r = h.record(&int(1)).unwrap();
        assert_eq!(r.verdict, Verdict::Generic);
        assert_eq!(r.galois.unwrap().label(), Some("4T4"));

        let r = h.record(&int(0)).unwrap();
        assert_eq!(r.verdict, Verdict::Excluded);
        assert!(r.root_witness.is_none());
        assert!(r.galois.is_none());
    }

    #[test]
    fn fermat_zero_is_witnessed() {
        let h = Harness::new(sextic(), GroupRef { order: 12, label: Some(String::from("6T3")), derived: false }, Partition::new(alloc::vec![6]), tables());
        let r = h.record(&int(0)).unwrap();
        assert!(!r.in_d);
        assert_eq!(r.verdict, Verdict::Exceptional);
        let w = r.root_witness.unwrap();
        assert_eq!((w.index, w.root.clone()), (2, int(-9)));
        assert_eq!(r.factorization_type, Partition::new(alloc::vec![1, 1, 2, 2]));
        assert_eq!(r.reference_match, Some(Match::No));
    }

    #[test]
    fn quartic_equivalence_is_determinate() {
        let h = Harness::new(quartic(), a4(), Partition::new(alloc::vec![4]), tables());
        let rep = h.verify_equivalence(12).unwrap();
        assert!(rep.passed(), "violations at {:?}", rep.violations);
        assert!(rep.indeterminates.is_empty());
        assert_eq!(rep.counts.excluded, 1);
        assert_eq!(rep.counts.total(), rep.records.len());
        let keys: Vec<_> = rep.records.iter().map(|r| r.sort_key()).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        let fi = h.verify_factorization_implication(12).unwrap();
        assert!(fi.passed());
    }

    #[test]
    fn wrong_reference_produces_violations() {
        let bad = GroupRef { order: 24, label: Some(String::from("4T5")), derived: false };
        let h = Harness::new(quartic(), bad, Partition::new(alloc::vec![4]), tables());
        let rep = h.verify_equivalence(4).unwrap();
        assert!(!rep.violations.is_empty());
        for &i in &rep.violations {
            assert!(rep.records[i].root_witness.is_none());
        }
    }

    #[test]
    fn empty_s_is_invalid_configuration() {
        let data = HitData::new(bp("X^2 - T"), alloc::vec![], Provenance::Fixture).unwrap();
        let r = GroupRef { order: 2, label: Some(String::from("2T1")), derived: false };
        let h = Harness::new(data, r, Partition::new(alloc::vec![2]), tables());
        let rep = h.verify_equivalence(5).unwrap();
        assert!(rep.invalid_configuration.is_some());
        assert!(!rep.passed());
        assert!(rep.records.iter().all(|r| r.root_witness.is_none()));
    }

    #[test]
    fn toy_exceptional_values_are_squares() {
        let h = Harness::new(toy(), GroupRef { order: 2, label: Some(String::from("2T1")), derived: false }, Partition::new(alloc::vec![2]), tables());
        let got: Vec<Rational> = h.enumerate_exceptional(12).unwrap().into_iter().map(|r| r.t).collect();
        let want: Vec<Rational> = rationals_up_to_height(12)
            .into_iter()
            .filter(|t| !t.is_zero() && crate::arith::rational_sqrt(t).is_some())
            .collect();
        assert_eq!(got, want);
        let rep = h.verify_equivalence(12).unwrap();
        assert!(rep.passed());
    }

    #[test]
    fn enumeration_prefix_property() {
        let h = Harness::new(quartic(), a4(), Partition::new(alloc::vec![4]), tables());
        let big = h.enumerate_exceptional(27).unwrap();
        assert!(big.iter().any(|r| r.t == rat(10, 27)));
        for r in &big {
            let w = r.root_witness.as_ref().unwrap();
            assert!(h.data.s[w.index].eval2(&r.t, &w.root).is_zero());
        }
        let small = h.enumerate_exceptional(10).unwrap();
        let ts = |v: &[SpecializationRecord]| v.iter().map(|r| r.t.clone()).collect::<Vec<_>>();
        assert_eq!(ts(&small), ts(&big[..small.len()]));
    }

    #[test]
    fn degree_structure() {
        let t = tables();
        check_degree_structure(&quartic().s, &a4(), &t).unwrap();
        let d6 = GroupRef { order: 12, label: Some(String::from("6T3")), derived: false };
        check_degree_structure(&sextic().s, &d6, &t).unwrap();
        assert!(check_degree_structure(&quartic().s, &d6, &t).is_err());
        let wrong_order = GroupRef { order: 24, label: Some(String::from("4T4")), derived: false };
        assert!(check_degree_structure(&quartic().s, &wrong_order, &t).is_err());
    }
}
