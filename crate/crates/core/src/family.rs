//! Explicit, deduplicated collections of subsets.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::universe::Subset;

/// Largest universe whose full power set may be materialised as a family.
pub const MAX_POWER_SET_UNIVERSE: usize = 20;

/// A deduplicated family of subsets of a universe of size `n`, kept in canonical order.
#[derive(Clone, Debug)]
pub struct SubsetFamily {
    n: usize,
    members: Vec<Subset>,
    index: HashSet<Subset>,
}

impl PartialEq for SubsetFamily {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.members == other.members
    }
}

impl Eq for SubsetFamily {}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClosureFlags {
    pub union: bool,
    pub intersection: bool,
    pub complement: bool,
    pub difference: bool,
}

impl SubsetFamily {
    pub fn new<I: IntoIterator<Item = Subset>>(n: usize, members: I) -> Result<Self> {
        let full = Subset::full(n);
        let mut v: Vec<Subset> = Vec::new();
        for m in members {
            if !m.is_subset(full) {
                return Err(Error::InvalidFamily(format!(
                    "member {m:?} exceeds a universe of size {n}"
                )));
            }
            v.push(m);
        }
        v.sort();
        v.dedup();
        let index = v.iter().copied().collect();
        Ok(SubsetFamily {
            n,
            members: v,
            index,
        })
    }

    pub fn empty(n: usize) -> Self {
        SubsetFamily {
            n,
            members: Vec::new(),
            index: HashSet::new(),
        }
    }

    pub fn power_set(n: usize) -> Result<Self> {
        if n > MAX_POWER_SET_UNIVERSE {
            return Err(Error::GuardExceeded {
                what: "power set",
                limit: MAX_POWER_SET_UNIVERSE,
                found: n,
            });
        }
        Self::new(n, Subset::full(n).subsets())
    }

    /// All subsets of `top`, i.e. the principal down-set of `top` in the power set.
    pub fn down_set(n: usize, top: Subset) -> Result<Self> {
        Self::new(n, top.subsets())
    }

    pub fn universe_size(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.index.contains(&s)
    }

    pub fn is_subfamily_of(&self, other: &SubsetFamily) -> bool {
        self.iter().all(|m| other.contains(m))
    }

    /// Pairwise closure check. Quadratic in the family size.
    pub fn closure_flags(&self) -> ClosureFlags {
        let mut flags = ClosureFlags {
            union: true,
            intersection: true,
            complement: true,
            difference: true,
        };
        for &a in &self.members {
            if flags.complement && !self.contains(a.complement(self.n)) {
                flags.complement = false;
            }
            for &b in &self.members {
                flags.union &= self.contains(a | b);
                flags.intersection &= self.contains(a & b);
                flags.difference &= self.contains(a - b);
            }
        }
        flags
    }

    /// Closed under union and intersection.
    pub fn is_ring(&self) -> bool {
        let f = self.closure_flags();
        !self.is_empty() && f.union && f.intersection
    }

    /// A ring closed under relative difference.
    pub fn is_difference_algebra(&self) -> bool {
        let f = self.closure_flags();
        !self.is_empty() && f.union && f.intersection && f.difference
    }

    /// A ring closed under complement (hence containing `∅` and the universe).
    pub fn is_complemented_algebra(&self) -> bool {
        let f = self.closure_flags();
        !self.is_empty() && f.union && f.intersection && f.complement
    }

    /// Members that are `⊆`-maximal within the family.
    pub fn maximal(&self) -> Vec<Subset> {
        self.iter()
            .filter(|&m| !self.iter().any(|o| m.is_proper_subset(o)))
            .collect()
    }

    /// True when no two distinct members are comparable under `⊆`.
    pub fn is_antichain(&self) -> bool {
        self.iter().all(|a| {
            self.iter()
                .all(|b| a == b || !(a.is_subset(b) || b.is_subset(a)))
        })
    }
}

/// The Boolean algebra of unions of blocks of a partition.
pub fn partition_algebra(n: usize, blocks: &[Subset]) -> Result<SubsetFamily> {
    let cover = blocks.iter().fold(Subset::EMPTY, |acc, &b| acc | b);
    let disjoint = blocks
        .iter()
        .enumerate()
        .all(|(i, &a)| blocks[i + 1..].iter().all(|&b| !a.intersects(b)));
    if cover != Subset::full(n) || !disjoint || blocks.iter().any(|b| b.is_empty()) {
        return Err(Error::InvalidFamily("blocks do not partition the universe".into()));
    }
    if blocks.len() > MAX_POWER_SET_UNIVERSE {
        return Err(Error::GuardExceeded {
            what: "partition blocks",
            limit: MAX_POWER_SET_UNIVERSE,
            found: blocks.len(),
        });
    }
    let members = Subset::full(blocks.len()).subsets().map(|sel| {
        sel.iter()
            .fold(Subset::EMPTY, |acc, i| acc | blocks[i])
    });
    SubsetFamily::new(n, members)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedup_and_canonical_order() {
        let f = SubsetFamily::new(
            3,
            [Subset::from_ranks([1]), Subset::EMPTY, Subset::from_ranks([1])],
        )
        .unwrap();
        assert_eq!(f.members(), &[Subset::EMPTY, Subset::from_ranks([1])]);
        assert!(SubsetFamily::new(2, [Subset::from_ranks([2])]).is_err());
    }

    #[test]
    fn closure_flags_power_set_and_chain() {
        let p = SubsetFamily::power_set(3).unwrap();
        assert!(p.is_complemented_algebra() && p.is_difference_algebra());
        let chain = SubsetFamily::new(
            2,
            [Subset::EMPTY, Subset::from_ranks([0]), Subset::full(2)],
        )
        .unwrap();
        let f = chain.closure_flags();
        assert!(f.union && f.intersection && !f.complement && !f.difference);
        assert!(chain.is_ring());
    }

    #[test]
    fn partition_algebra_is_complemented() {
        let blocks = [Subset::from_ranks([0, 2]), Subset::from_ranks([1]), Subset::from_ranks([3])];
        let alg = partition_algebra(4, &blocks).unwrap();
        assert_eq!(alg.len(), 8);
        assert!(alg.is_complemented_algebra());
        assert!(partition_algebra(4, &blocks[..2]).is_err());
    }

    #[test]
    fn antichain_check() {
        let f = SubsetFamily::new(3, [Subset::from_ranks([0]), Subset::from_ranks([1, 2])]).unwrap();
        assert!(f.is_antichain());
        let g = SubsetFamily::new(3, [Subset::from_ranks([0]), Subset::from_ranks([0, 2])]).unwrap();
        assert!(!g.is_antichain());
        assert_eq!(g.maximal(), vec![Subset::from_ranks([0, 2])]);
    }
}
