//! Transitive permutation groups of degree 2 to 6, indexed `nTk` in the
//! usual order. Orders, cycle types and parity are derived at load time
//! from the embedded generators.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::{Partition, PermGroup, Permutation};

struct Raw {
    degree: usize,
    index: usize,
    name: &'static str,
    order: usize,
    even: bool,
    gens: &'static [&'static str],
}

const fn raw(
    degree: usize,
    index: usize,
    name: &'static str,
    order: usize,
    even: bool,
    gens: &'static [&'static str],
) -> Raw {
    Raw {
        degree,
        index,
        name,
        order,
        even,
        gens,
    }
}

const RAW: &[Raw] = &[
    raw(2, 1, "C2", 2, false, &["(1,2)"]),
    raw(3, 1, "A3", 3, true, &["(1,2,3)"]),
    raw(3, 2, "S3", 6, false, &["(1,2,3)", "(1,2)"]),
    raw(4, 1, "C4", 4, false, &["(1,2,3,4)"]),
    raw(4, 2, "V4", 4, true, &["(1,2)(3,4)", "(1,3)(2,4)"]),
    raw(4, 3, "D4", 8, false, &["(1,2,3,4)", "(1,3)"]),
    raw(4, 4, "A4", 12, true, &["(1,2,3)", "(2,3,4)"]),
    raw(4, 5, "S4", 24, false, &["(1,2,3,4)", "(1,2)"]),
    raw(5, 1, "C5", 5, true, &["(1,2,3,4,5)"]),
    raw(5, 2, "D5", 10, true, &["(1,2,3,4,5)", "(2,5)(3,4)"]),
    raw(5, 3, "F20", 20, false, &["(1,2,3,4,5)", "(2,3,5,4)"]),
    raw(5, 4, "A5", 60, true, &["(1,2,3,4,5)", "(1,2,3)"]),
    raw(5, 5, "S5", 120, false, &["(1,2,3,4,5)", "(1,2)"]),
    raw(6, 1, "C6", 6, false, &["(1,2,3,4,5,6)"]),
    raw(6, 2, "S3", 6, false, &["(1,2)(3,4)(5,6)", "(1,3)(2,5)(4,6)"]),
    raw(6, 3, "D6", 12, false, &["(1,2,3,4,5,6)", "(1,4)(2,3)(5,6)"]),
    raw(6, 4, "A4", 12, true, &["(3,4)(5,6)", "(1,3,5)(2,4,6)"]),
    raw(6, 5, "C3xS3", 18, false, &["(4,5,6)", "(1,4)(2,5)(3,6)"]),
    raw(6, 6, "C2xA4", 24, false, &["(5,6)", "(1,2,5)(3,4,6)"]),
    raw(6, 7, "S4+", 24, true, &["(3,4)(5,6)", "(1,3,2,5)(4,6)"]),
    raw(6, 8, "S4-", 24, false, &["(3,4,5,6)", "(1,3)(2,5)(4,6)"]),
    raw(6, 9, "S3xS3", 36, false, &["(3,4)(5,6)", "(1,2,3,5,4,6)"]),
    raw(6, 10, "3^2:4", 36, true, &["(4,5,6)", "(1,4)(2,5,3,6)"]),
    raw(6, 11, "C2xS4", 48, false, &["(3,4)(5,6)", "(1,3,2,5)"]),
    raw(6, 12, "A5", 60, true, &["(3,4)(5,6)", "(1,2,3)(4,5,6)"]),
    raw(6, 13, "3^2:D4", 72, false, &["(5,6)", "(1,2,3,5)(4,6)"]),
    raw(6, 14, "S5", 120, false, &["(3,4)(5,6)", "(1,2,3,4,5,6)"]),
    raw(6, 15, "A6", 360, true, &["(4,5,6)", "(1,2,3,4)(5,6)"]),
    raw(6, 16, "S6", 720, false, &["(1,2,3,4,5,6)", "(1,2)"]),
];

#[derive(Clone, Debug)]
pub struct TransitiveGroupEntry {
    pub degree: usize,
    pub index: usize,
    pub name: &'static str,
    pub group: PermGroup,
    pub cycle_types: BTreeSet<Partition>,
    pub cycle_type_counts: BTreeMap<Partition, usize>,
    pub in_alternating: bool,
}

impl TransitiveGroupEntry {
    /// `nTk`.
    pub fn label(&self) -> String {
        alloc::format!("{}T{}", self.degree, self.index)
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn generators(&self) -> &[Permutation] {
        self.group.generators()
    }
}

fn load_entry(r: &Raw) -> Result<TransitiveGroupEntry> {
    let bad = |what: &str| Error::Domain(alloc::format!("table entry {}T{}: {what}", r.degree, r.index));
    let gens = r
        .gens
        .iter()
        .map(|s| Permutation::parse(r.degree, s))
        .collect::<Result<Vec<_>>>()?;
    let group = PermGroup::closure(r.degree, &gens)?;
    if group.order() != r.order {
        return Err(bad("generators do not give the stated order"));
    }
    if !group.is_transitive() {
        return Err(bad("group is not transitive"));
    }
    let in_alternating = group.in_alternating();
    if in_alternating != r.even {
        return Err(bad("parity flag disagrees with generators"));
    }
    Ok(TransitiveGroupEntry {
        degree: r.degree,
        index: r.index,
        name: r.name,
        cycle_types: group.cycle_type_set(),
        cycle_type_counts: group.cycle_type_counts(),
        in_alternating,
        group,
    })
}

/// All transitive groups of degree `n`, `2 <= n <= 6`.
pub fn transitive_table(n: usize) -> Result<Vec<TransitiveGroupEntry>> {
    if !(2..=6).contains(&n) {
        return Err(Error::DegreeOutOfRange {
            degree: n,
            min: 2,
            max: 6,
        });
    }
    RAW.iter().filter(|r| r.degree == n).map(load_entry).collect()
}

/// Tables for every supported degree, loaded once.
#[derive(Clone, Debug)]
pub struct TransitiveTables {
    by_degree: Vec<Vec<TransitiveGroupEntry>>,
}

impl TransitiveTables {
    pub fn load() -> Result<Self> {
        let mut by_degree = alloc::vec![Vec::new(), Vec::new()];
        for n in 2..=6 {
            by_degree.push(transitive_table(n)?);
        }
        Ok(TransitiveTables { by_degree })
    }

    pub fn degree(&self, n: usize) -> &[TransitiveGroupEntry] {
        self.by_degree.get(n).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// The entry conjugate in `S_n` to a transitive group, matched by order
    /// and cycle-type counts (which separate all transitive groups of
    /// degree at most 6).
    pub fn lookup(&self, g: &PermGroup) -> Option<&TransitiveGroupEntry> {
        if !g.is_transitive() {
            return None;
        }
        let counts = g.cycle_type_counts();
        self.degree(g.degree())
            .iter()
            .find(|e| e.order() == g.order() && e.cycle_type_counts == counts)
    }

    pub fn by_label(&self, label: &str) -> Option<&TransitiveGroupEntry> {
        let (n, k) = label.split_once('T')?;
        let n: usize = n.parse().ok()?;
        let k: usize = k.parse().ok()?;
        self.degree(n).iter().find(|e| e.index == k)
    }
}
