//! Permutations, cycle types, and explicit permutation groups of small
//! order, with conjugacy classes of subgroups.

mod group;
mod subgroups;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub use group::{PermGroup, DEFAULT_ORDER_BOUND};
pub use subgroups::SubgroupClass;

/// Multiset of positive integers, stored in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable();
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiset union.
    pub fn union(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self::new(v)
    }

    /// Parity of a permutation with this cycle type.
    pub fn is_even(&self) -> bool {
        self.0.iter().filter(|&&c| c % 2 == 0).count() % 2 == 0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// A bijection of `{0, .., n-1}`; displayed and parsed 1-based. Products
/// act left to right: `(a * b)(i) = b(a(i))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation("images are not a bijection".into()));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of degree `n` from 1-based disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u8> = (0..n as u8).collect();
        let mut moved = alloc::vec![false; n];
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                if a == 0 || a > n {
                    return Err(Error::InvalidPermutation(alloc::format!(
                        "point {a} outside 1..={n}"
                    )));
                }
                if moved[a - 1] {
                    return Err(Error::InvalidPermutation(alloc::format!(
                        "point {a} repeated"
                    )));
                }
                moved[a - 1] = true;
                let b = cyc[(k + 1) % cyc.len()];
                images[a - 1] = (b - 1) as u8;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(1,2,3)(4,5)`; `()` is the identity.
    pub fn parse(n: usize, src: &str) -> Result<Self> {
        let bad = |m: &str| Error::InvalidPermutation(alloc::format!("{m} in '{src}'"));
        let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let end = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let inner = &body[..end];
            if !inner.is_empty() {
                let pts: core::result::Result<Vec<usize>, _> =
                    inner.split(',').map(|x| x.parse::<usize>()).collect();
                cycles.push(pts.map_err(|_| bad("expected point list"))?);
            }
            rest = &body[end + 1..];
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Self::from_cycles(n, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Self) -> Self {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// `x^-1 * self * x`.
    pub fn conjugate_by(&self, x: &Self) -> Self {
        x.inverse().then(self).then(x)
    }

    /// Cycles of length at least 2, 0-based, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                c.push(i);
                i = self.images[i] as usize;
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    /// Cycle lengths including fixed points.
    pub fn cycle_type(&self) -> Partition {
        let moved: usize = self.cycles().iter().map(|c| c.len()).sum();
        let mut parts: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        parts.extend(core::iter::repeat_n(1, self.degree() - moved));
        Partition::new(parts)
    }

    pub fn is_even(&self) -> bool {
        self.cycle_type().is_even()
    }

    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .fold(1, |acc, c| num_integer::lcm(acc, c.len()))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs = self.cycles();
        if cs.is_empty() {
            return f.write_str("()");
        }
        for c in cs {
            let pts: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_types() {
        let p = Permutation::parse(4, "(1,2,3)").unwrap();
        assert_eq!(p.cycle_type(), Partition::new(alloc::vec![3, 1]));
        assert_eq!(
            Permutation::identity(6).cycle_type(),
            Partition::new(alloc::vec![1; 6])
        );
        let q = Permutation::parse(6, "(1,2)(3,4,5,6)").unwrap();
        assert_eq!(q.cycle_type(), Partition::new(alloc::vec![2, 4]));
        assert_eq!(q.order(), 4);
        assert!(q.is_even());
        assert!(!Permutation::parse(4, "(1,2,3,4)").unwrap().is_even());
    }

    #[test]
    fn parse_and_display_round_trip() {
        let p = Permutation::parse(5, " (1, 3,2)( 4,5)").unwrap();
        assert_eq!(p.to_string(), "(1,3,2)(4,5)");
        assert_eq!(Permutation::parse(5, &p.to_string()).unwrap(), p);
        assert_eq!(Permutation::parse(3, "()").unwrap(), Permutation::identity(3));
        assert!(Permutation::parse(3, "(1,4)").is_err());
        assert!(Permutation::parse(3, "(1,2)(2,3)").is_err());
        assert!(Permutation::parse(3, "(1,2").is_err());
    }

    #[test]
    fn products_act_left_to_right() {
        let a = Permutation::parse(3, "(1,2)").unwrap();
        let b = Permutation::parse(3, "(2,3)").unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.then(&b).apply(0), 2);
        assert!(a.then(&a.inverse()).is_identity());
        let c = b.conjugate_by(&a);
        assert_eq!(c, Permutation::parse(3, "(1,3)").unwrap());
    }
}
