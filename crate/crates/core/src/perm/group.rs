use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use super::{Partition, Permutation};
use crate::error::{Error, Result};

/// Largest group order accepted by default; covers every transitive group
/// of degree at most 7.
pub const DEFAULT_ORDER_BOUND: usize = 10080;

/// A permutation group with all elements stored, sorted.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    /// Closure under products of the generators, failing once the order
    /// exceeds `bound`.
    pub fn closure_bounded(degree: usize, gens: &[Permutation], bound: usize) -> Result<Self> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(alloc::format!(
                    "generator {g} has degree {} instead of {degree}",
                    g.degree()
                )));
            }
        }
        let id = Permutation::identity(degree);
        let mut seen: BTreeSet<Permutation> = BTreeSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(e) = queue.pop_front() {
            for g in gens {
                let h = e.then(g);
                if seen.insert(h.clone()) {
                    if seen.len() > bound {
                        return Err(Error::GroupTooLarge { bound });
                    }
                    queue.push_back(h);
                }
            }
        }
        let generators = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        Ok(PermGroup {
            degree,
            generators,
            elements: seen.into_iter().collect(),
        })
    }

    pub fn closure(degree: usize, gens: &[Permutation]) -> Result<Self> {
        Self::closure_bounded(degree, gens, DEFAULT_ORDER_BOUND)
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            elements: alloc::vec![Permutation::identity(degree)],
        }
    }

    /// Symmetric group on `n` points.
    pub fn symmetric(n: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if n >= 2 {
            let cyc: Vec<usize> = (1..=n).collect();
            gens.push(Permutation::from_cycles(n, &[&cyc])?);
            gens.push(Permutation::from_cycles(n, &[&[1, 2]])?);
        }
        Self::closure(n, &gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    /// `x^-1 H x`.
    pub fn conjugate_by(&self, x: &Permutation) -> PermGroup {
        let mut elements: Vec<Permutation> = self.elements.iter().map(|h| h.conjugate_by(x)).collect();
        elements.sort();
        PermGroup {
            degree: self.degree,
            generators: self.generators.iter().map(|h| h.conjugate_by(x)).collect(),
            elements,
        }
    }

    /// Some `x` in `self` with `x^-1 a x <= b`, by exhaustive search.
    pub fn conjugator_into(&self, a: &PermGroup, b: &PermGroup) -> Option<Permutation> {
        self.elements
            .iter()
            .find(|x| a.generators.iter().all(|h| b.contains(&h.conjugate_by(x))))
            .cloned()
    }

    /// Whether `a` and `b` are conjugate in `self`.
    pub fn are_conjugate(&self, a: &PermGroup, b: &PermGroup) -> bool {
        a.order() == b.order()
            && a.cycle_type_counts() == b.cycle_type_counts()
            && self.conjugator_into(a, b).is_some()
    }

    pub fn cycle_type_set(&self) -> BTreeSet<Partition> {
        self.elements.iter().map(|g| g.cycle_type()).collect()
    }

    /// Number of elements of each cycle type.
    pub fn cycle_type_counts(&self) -> BTreeMap<Partition, usize> {
        let mut m = BTreeMap::new();
        for g in &self.elements {
            *m.entry(g.cycle_type()).or_insert(0) += 1;
        }
        m
    }

    pub fn is_transitive(&self) -> bool {
        let mut reached = alloc::vec![false; self.degree];
        if self.degree == 0 {
            return true;
        }
        for g in &self.elements {
            reached[g.apply(0)] = true;
        }
        reached.iter().all(|&r| r)
    }

    pub fn in_alternating(&self) -> bool {
        self.generators.iter().all(|g| g.is_even())
    }

    /// Subgroup generated by `self` and `g`.
    pub fn join_element(&self, g: &Permutation) -> PermGroup {
        if self.contains(g) {
            return self.clone();
        }
        let mut gens = self.generators.clone();
        gens.push(g.clone());
        Self::closure_bounded(self.degree, &gens, usize::MAX).expect("degrees agree")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    #[test]
    fn closure_examples() {
        let a4 = PermGroup::closure(4, &[p(4, "(1,2,3)"), p(4, "(1,2)(3,4)")]).unwrap();
        assert_eq!(a4.order(), 12);
        assert!(a4.in_alternating());
        assert!(a4.is_transitive());
        assert_eq!(PermGroup::closure(2, &[p(2, "(1,2)")]).unwrap().order(), 2);
        assert_eq!(PermGroup::closure(3, &[Permutation::identity(3)]).unwrap().order(), 1);
        assert_eq!(PermGroup::symmetric(5).unwrap().order(), 120);
    }

    #[test]
    fn closure_respects_bound() {
        let r = PermGroup::closure_bounded(5, &[p(5, "(1,2,3,4,5)"), p(5, "(1,2)")], 100);
        assert_eq!(r, Err(Error::GroupTooLarge { bound: 100 }));
    }

    #[test]
    fn cycle_type_sets() {
        let a4 = PermGroup::closure(4, &[p(4, "(1,2,3)"), p(4, "(1,2)(3,4)")]).unwrap();
        let want: BTreeSet<Partition> = [
            alloc::vec![1, 1, 1, 1],
            alloc::vec![2, 2],
            alloc::vec![1, 3],
        ]
        .into_iter()
        .map(Partition::new)
        .collect();
        assert_eq!(a4.cycle_type_set(), want);
        assert_eq!(PermGroup::symmetric(4).unwrap().cycle_type_set().len(), 5);
        assert_eq!(PermGroup::symmetric(2).unwrap().cycle_type_set().len(), 2);
    }

    #[test]
    fn brute_force_closure_agrees() {
        // Oracle: repeatedly multiply the whole set by itself until stable.
        let gens = [p(5, "(1,2,3,4,5)"), p(5, "(2,5)(3,4)")];
        let mut set: BTreeSet<Permutation> = gens.iter().cloned().collect();
        set.insert(Permutation::identity(5));
        loop {
            let v: Vec<Permutation> = set.iter().cloned().collect();
            let before = set.len();
            for a in &v {
                for b in &v {
                    set.insert(a.then(b));
                }
            }
            if set.len() == before {
                break;
            }
        }
        let g = PermGroup::closure(5, &gens).unwrap();
        assert_eq!(g.order(), set.len());
        assert_eq!(g.order(), 10);
    }
}
