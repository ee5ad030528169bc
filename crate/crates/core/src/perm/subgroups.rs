//! Conjugacy classes of subgroups by repeated extension with cyclic
//! subgroups: every subgroup is generated by finitely many elements, so
//! closing the trivial group under `H -> <H, g>` reaches a conjugate of each.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::{Partition, PermGroup, Permutation, DEFAULT_ORDER_BOUND};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub representative: PermGroup,
    /// `[G : H]`.
    pub index: usize,
    pub is_maximal: bool,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.representative.order()
    }
}

type ClassKey = (usize, BTreeMap<Partition, usize>);

fn key(h: &PermGroup) -> ClassKey {
    (h.order(), h.cycle_type_counts())
}

impl PermGroup {
    /// One generator per cyclic subgroup.
    fn cyclic_generators(&self) -> Vec<Permutation> {
        let mut seen: BTreeSet<Vec<Permutation>> = BTreeSet::new();
        let mut out = Vec::new();
        for g in self.elements() {
            if g.is_identity() {
                continue;
            }
            let c = PermGroup::closure_bounded(self.degree(), core::slice::from_ref(g), usize::MAX)
                .expect("element of the group");
            if seen.insert(c.elements().to_vec()) {
                out.push(g.clone());
            }
        }
        out
    }

    /// Representatives of the conjugacy classes of subgroups, ordered by
    /// subgroup order, with maximality flags.
    pub fn subgroup_classes(&self) -> Result<Vec<SubgroupClass>> {
        if self.order() > DEFAULT_ORDER_BOUND {
            return Err(Error::GroupTooLarge {
                bound: DEFAULT_ORDER_BOUND,
            });
        }
        let cyclic = self.cyclic_generators();
        let mut reps: Vec<PermGroup> = alloc::vec![PermGroup::trivial(self.degree())];
        let mut by_key: BTreeMap<ClassKey, Vec<usize>> = BTreeMap::new();
        by_key.insert(key(&reps[0]), alloc::vec![0]);
        let mut next = 0;
        while next < reps.len() {
            let h = reps[next].clone();
            next += 1;
            let mut local: BTreeSet<Vec<Permutation>> = BTreeSet::new();
            for c in &cyclic {
                if h.contains(c) {
                    continue;
                }
                let k = h.join_element(c);
                if !local.insert(k.elements().to_vec()) {
                    continue;
                }
                let kk = key(&k);
                let known = by_key
                    .get(&kk)
                    .is_some_and(|ids| ids.iter().any(|&i| self.are_conjugate(&k, &reps[i])));
                if !known {
                    by_key.entry(kk).or_default().push(reps.len());
                    reps.push(k);
                }
            }
        }
        reps.sort_by_key(|r| (r.order(), r.cycle_type_counts(), r.elements().to_vec()));

        let n = self.order();
        let mut out = Vec::with_capacity(reps.len());
        for (i, h) in reps.iter().enumerate() {
            let proper = h.order() < n;
            let is_maximal = proper
                && !reps.iter().enumerate().any(|(j, k)| {
                    j != i
                        && k.order() > h.order()
                        && k.order() < n
                        && k.order() % h.order() == 0
                        && self.conjugator_into(h, k).is_some()
                });
            out.push(SubgroupClass {
                representative: h.clone(),
                index: n / h.order(),
                is_maximal,
            });
        }
        Ok(out)
    }

    pub fn maximal_classes(&self) -> Result<Vec<SubgroupClass>> {
        if self.is_trivial() {
            return Err(Error::TrivialGroup);
        }
        Ok(self
            .subgroup_classes()?
            .into_iter()
            .filter(|c| c.is_maximal)
            .collect())
    }

    /// Indices of the maximal subgroup classes, ascending.
    pub fn maximal_indices(&self) -> Result<Vec<usize>> {
        let mut v: Vec<usize> = self.maximal_classes()?.iter().map(|c| c.index).collect();
        v.sort_unstable();
        Ok(v)
    }
}
