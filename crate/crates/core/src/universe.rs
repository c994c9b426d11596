//! Finite universes, bit-mask subsets and binary relations.
//!
//! Elements are identified by their rank (declaration order). A [`Subset`] is a
//! plain `u64` mask and carries no reference to its universe; operations that
//! need the universe size take it explicitly.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest universe that fits a single-word mask.
pub const MAX_UNIVERSE: usize = 62;

/// A subset of a finite universe, stored as a mask of member ranks.
///
/// The `Ord` impl is the canonical order used for every emitted list of
/// subsets: by cardinality first, then lexicographically by member ranks.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: usize) -> Self {
        debug_assert!(x < 64);
        Subset(1u64 << x)
    }

    pub fn from_ranks<I: IntoIterator<Item = usize>>(ranks: I) -> Self {
        ranks.into_iter().fold(Subset::EMPTY, |s, r| s.with(r))
    }

    pub fn contains(self, x: usize) -> bool {
        x < 64 && self.0 >> x & 1 == 1
    }

    #[must_use]
    pub fn with(self, x: usize) -> Self {
        Subset(self.0 | 1u64 << x)
    }

    #[must_use]
    pub fn without(self, x: usize) -> Self {
        Subset(self.0 & !(1u64 << x))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    /// Complement relative to a universe of `n` elements.
    pub fn complement(self, n: usize) -> Subset {
        Subset(!self.0 & Subset::full(n).0)
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Subset) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn intersects(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    /// Lowest member rank.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Member ranks in ascending order.
    pub fn iter(self) -> Ranks {
        Ranks(self.0)
    }

    /// All subsets of `self` (including `∅` and `self`), in increasing mask order.
    pub fn subsets(self) -> SubMasks {
        SubMasks {
            of: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        self.union(rhs)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        self.intersection(rhs)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        self.difference(rhs)
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_ranks(iter)
    }
}

pub struct Ranks(u64);

impl Iterator for Ranks {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let r = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(r)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Ranks {}

pub struct SubMasks {
    of: u64,
    next: Option<u64>,
}

impl Iterator for SubMasks {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.of {
            None
        } else {
            Some((cur.wrapping_sub(self.of)) & self.of)
        };
        Some(Subset(cur))
    }
}

/// A finite carrier with labelled elements in declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universe {
    labels: Vec<String>,
    rank: HashMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if labels.len() > MAX_UNIVERSE {
            return Err(Error::GuardExceeded {
                what: "universe",
                limit: MAX_UNIVERSE,
                found: labels.len(),
            });
        }
        let mut rank = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if rank.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateElement(l.clone()));
            }
        }
        Ok(Universe { labels, rank })
    }

    /// Universe labelled `0, 1, ..., n-1`.
    pub fn numbered(n: usize) -> Result<Self> {
        Universe::new((0..n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, rank: usize) -> &str {
        &self.labels[rank]
    }

    pub fn element(&self, label: &str) -> Result<usize> {
        self.rank
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn subset<I, S>(&self, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        labels
            .into_iter()
            .map(|l| self.element(l.as_ref()))
            .collect::<Result<Subset>>()
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn names(&self, s: Subset) -> Vec<String> {
        s.iter().map(|r| self.labels[r].clone()).collect()
    }

    /// `{a, b}` or `∅`, in declaration order.
    pub fn format(&self, s: Subset) -> String {
        if s.is_empty() {
            return "∅".to_string();
        }
        let parts: Vec<&str> = s.iter().map(|r| self.labels[r].as_str()).collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// Universe whose elements are the subsets of `self`, element `i` being the
    /// subset with mask `i`. Used to carry relations on the power set.
    pub fn power_set(&self) -> Result<Universe> {
        let size = 1usize
            .checked_shl(self.len() as u32)
            .filter(|&s| s <= MAX_UNIVERSE)
            .ok_or(Error::GuardExceeded {
                what: "power-set carrier",
                limit: MAX_UNIVERSE,
                found: 1usize << self.len().min(32),
            })?;
        Universe::new((0..size).map(|m| self.format(Subset::from_bits(m as u64))))
    }
}

/// Convention for the intersection of an empty family of neighborhoods.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EmptyMeet {
    #[default]
    Empty,
    Universe,
}

/// A binary relation on `0..n`, indexed both ways.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryRelation {
    n: usize,
    // out[x] = {y : R x y}
    out: Vec<Subset>,
    // inc[y] = {x : R x y}
    inc: Vec<Subset>,
}

impl fmt::Debug for BinaryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

impl BinaryRelation {
    pub fn empty(n: usize) -> Self {
        BinaryRelation {
            n,
            out: vec![Subset::EMPTY; n],
            inc: vec![Subset::EMPTY; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |a, b| a == b)
    }

    pub fn full(n: usize) -> Self {
        Self::from_fn(n, |_, _| true)
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut r = Self::empty(n);
        for a in 0..n {
            for b in 0..n {
                if f(a, b) {
                    r.insert(a, b);
                }
            }
        }
        r
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(n: usize, pairs: I) -> Result<Self> {
        let mut r = Self::empty(n);
        for (a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::RankOutOfRange { rank: x, size: n });
                }
            }
            r.insert(a, b);
        }
        Ok(r)
    }

    /// Builds a relation from its successor rows (`rows[x] = {y : R x y}`).
    pub fn from_rows(rows: Vec<Subset>) -> Self {
        let n = rows.len();
        let mut r = Self::empty(n);
        for (a, row) in rows.iter().enumerate() {
            for b in row.iter() {
                r.insert(a, b);
            }
        }
        r
    }

    fn insert(&mut self, a: usize, b: usize) {
        self.out[a] = self.out[a].with(b);
        self.inc[b] = self.inc[b].with(a);
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.out[a].contains(b)
    }

    pub fn pair_count(&self) -> usize {
        self.out.iter().map(|s| s.len()).sum()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.iter().map(move |b| (a, b)))
    }

    /// `[x]_R = {a : R a x}`.
    pub fn successor_neighborhood(&self, x: usize) -> Subset {
        self.inc[x]
    }

    /// `[x]^R = {a : R x a}`.
    pub fn predecessor_neighborhood(&self, x: usize) -> Subset {
        self.out[x]
    }

    /// Common upper bounds `U(a, b) = {x : R a x & R b x}`.
    pub fn upper_bounds(&self, a: usize, b: usize) -> Subset {
        self.out[a] & self.out[b]
    }

    /// Common lower bounds `L(a, b) = {x : R x a & R x b}`.
    pub fn lower_bounds(&self, a: usize, b: usize) -> Subset {
        self.inc[a] & self.inc[b]
    }

    /// `<x>`: intersection of the predecessor neighborhoods `[b]^R` that contain `x`.
    pub fn min_neighborhood(&self, x: usize) -> Subset {
        self.min_neighborhood_with(x, EmptyMeet::Empty)
    }

    pub fn min_neighborhood_with(&self, x: usize, meet: EmptyMeet) -> Subset {
        // b ranges over {b : x ∈ [b]^R} = [x]_R
        let mut it = self.inc[x].iter().map(|b| self.out[b]);
        match it.next() {
            Some(first) => it.fold(first, |acc, s| acc & s),
            None => match meet {
                EmptyMeet::Empty => Subset::EMPTY,
                EmptyMeet::Universe => Subset::full(self.n),
            },
        }
    }

    pub fn min_neighborhoods(&self, meet: EmptyMeet) -> Vec<Subset> {
        (0..self.n)
            .map(|x| self.min_neighborhood_with(x, meet))
            .collect()
    }

    /// `τ a b` iff `a ∈ <b>`.
    pub fn tau(&self, meet: EmptyMeet) -> BinaryRelation {
        let mins = self.min_neighborhoods(meet);
        Self::from_fn(self.n, |a, b| mins[b].contains(a))
    }

    pub fn converse(&self) -> BinaryRelation {
        BinaryRelation {
            n: self.n,
            out: self.inc.clone(),
            inc: self.out.clone(),
        }
    }

    pub fn transitive_closure(&self) -> BinaryRelation {
        let mut rows = self.out.clone();
        // Warshall on row masks
        for k in 0..self.n {
            for a in 0..self.n {
                if rows[a].contains(k) {
                    rows[a] = rows[a] | rows[k];
                }
            }
        }
        Self::from_rows(rows)
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|x| self.contains(x, x))
    }

    pub fn is_symmetric(&self) -> bool {
        self.out == self.inc
    }

    pub fn is_transitive(&self) -> bool {
        self.pairs()
            .all(|(a, b)| self.out[b].is_subset(self.out[a]))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.pairs().all(|(a, b)| a == b || !self.contains(b, a))
    }

    /// `R a b → R a a`.
    pub fn is_quasi_reflexive(&self) -> bool {
        self.pairs().all(|(a, _)| self.contains(a, a))
    }

    pub fn is_quasi_order(&self) -> bool {
        self.is_reflexive() && self.is_transitive()
    }

    /// Every pair comparable one way or the other.
    pub fn is_connex(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.contains(a, b) || self.contains(b, a)))
    }

    pub fn properties(&self, meet: EmptyMeet) -> RelationProperties {
        let mins = self.min_neighborhoods(meet);
        let tau = self.tau(meet);
        let weakly_antisymmetric = tau
            .pairs()
            .all(|(a, b)| !tau.contains(b, a) || mins[a] == mins[b]);
        RelationProperties {
            reflexive: self.is_reflexive(),
            symmetric: self.is_symmetric(),
            transitive: self.is_transitive(),
            quasi_order: self.is_quasi_order(),
            antisymmetric: self.is_antisymmetric(),
            quasi_reflexive: self.is_quasi_reflexive(),
            weakly_antisymmetric,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationProperties {
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
    pub quasi_order: bool,
    pub antisymmetric: bool,
    pub quasi_reflexive: bool,
    /// `τ a b & τ b a → <a> = <b>` for the derived relation `τ`.
    pub weakly_antisymmetric: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference;

    fn s6() -> (Universe, BinaryRelation) {
        let inst = reference::s6_instance();
        (inst.universe, inst.relation)
    }

    fn set(u: &Universe, labels: &[&str]) -> Subset {
        u.subset(labels.iter()).unwrap()
    }

    #[test]
    fn successor_neighborhood_examples() {
        let (u, r) = s6();
        let c = u.element("c").unwrap();
        assert_eq!(r.successor_neighborhood(c), set(&u, &["a", "b", "c"]));
        let e = BinaryRelation::empty(3);
        assert!(e.successor_neighborhood(1).is_empty());
        let id = BinaryRelation::identity(2);
        assert_eq!(id.successor_neighborhood(0), Subset::singleton(0));
    }

    #[test]
    fn predecessor_neighborhood_examples() {
        let (u, r) = s6();
        assert_eq!(
            r.predecessor_neighborhood(u.element("a").unwrap()),
            set(&u, &["c", "e"])
        );
        assert!(r.predecessor_neighborhood(u.element("g").unwrap()).is_empty());
        let full = BinaryRelation::full(2);
        assert_eq!(full.predecessor_neighborhood(1), Subset::full(2));
    }

    #[test]
    fn min_neighborhood_examples() {
        let (u, r) = s6();
        assert_eq!(
            r.min_neighborhood(u.element("b").unwrap()),
            set(&u, &["b", "c"])
        );
        let g = u.element("g").unwrap();
        assert!(r.min_neighborhood(g).is_empty());
        assert_eq!(r.min_neighborhood_with(g, EmptyMeet::Universe), u.full());
        let one = BinaryRelation::identity(1);
        assert_eq!(one.min_neighborhood(0), Subset::singleton(0));
    }

    #[test]
    fn unknown_label_is_rejected() {
        let (u, _) = s6();
        assert_eq!(u.element("z"), Err(Error::UnknownElement("z".into())));
        assert!(Universe::new(["a", "a"]).is_err());
        assert_eq!(Universe::new(Vec::<String>::new()), Err(Error::EmptyUniverse));
    }

    #[test]
    fn tau_on_reflexive_extension_of_s6() {
        let (u, r) = s6();
        let refl = BinaryRelation::from_fn(u.len(), |a, b| a == b || r.contains(a, b));
        let tau = refl.tau(EmptyMeet::Empty);
        let (b, c) = (u.element("b").unwrap(), u.element("c").unwrap());
        // <b> of the reflexive extension, computed by hand from the closed rows
        assert!(refl.min_neighborhood(b).contains(c));
        assert!(tau.contains(c, b));
        assert!(tau.is_reflexive() && tau.is_transitive());
    }

    #[test]
    fn tau_of_identity_is_identity() {
        let id = BinaryRelation::identity(4);
        assert_eq!(id.tau(EmptyMeet::Empty), id);
    }

    #[test]
    fn tau_weak_antisymmetry_all_reflexive_on_three() {
        // 2^6 reflexive relations on three points
        for m in 0u32..64 {
            let off: Vec<(usize, usize)> = (0..3)
                .flat_map(|a| (0..3).filter(move |&b| b != a).map(move |b| (a, b)))
                .collect();
            let r = BinaryRelation::from_fn(3, |a, b| {
                a == b || off.iter().position(|&p| p == (a, b)).is_some_and(|i| m >> i & 1 == 1)
            });
            let tau = r.tau(EmptyMeet::Empty);
            assert!(tau.is_reflexive());
            assert!(tau.is_transitive());
            assert!(r.properties(EmptyMeet::Empty).weakly_antisymmetric);
        }
    }

    #[test]
    fn relation_property_examples() {
        let (_, r) = s6();
        let p = r.properties(EmptyMeet::Empty);
        assert!(!p.reflexive && !p.transitive && !p.symmetric);
        let p = BinaryRelation::identity(3).properties(EmptyMeet::Empty);
        assert!(p.reflexive && p.symmetric && p.transitive);
        let ab = BinaryRelation::from_pairs(2, [(0, 1)]).unwrap();
        assert!(!ab.properties(EmptyMeet::Empty).quasi_reflexive);
    }

    #[test]
    fn canonical_order_is_cardinality_then_lexicographic() {
        let mut v = vec![
            Subset::from_ranks([0, 1, 2, 3]),
            Subset::from_ranks([5]),
            Subset::from_ranks([4]),
            Subset::EMPTY,
            Subset::from_ranks([4, 5]),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                Subset::EMPTY,
                Subset::from_ranks([4]),
                Subset::from_ranks([5]),
                Subset::from_ranks([4, 5]),
                Subset::from_ranks([0, 1, 2, 3]),
            ]
        );
    }

    #[test]
    fn submask_iteration_visits_every_subset_once() {
        let s = Subset::from_ranks([1, 3, 4]);
        let subs: Vec<Subset> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        let mut dedup = subs.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 8);
    }

    #[test]
    fn power_set_universe_labels_follow_masks() {
        let u = Universe::new(["a", "b"]).unwrap();
        let p = u.power_set().unwrap();
        assert_eq!(p.labels(), &["∅", "{a}", "{b}", "{a, b}"]);
        let big = Universe::numbered(6).unwrap();
        assert!(big.power_set().is_err());
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn de_morgan_and_double_complement(a in 0u64..(1 << 10), b in 0u64..(1 << 10)) {
                let n = 10;
                let (a, b) = (Subset::from_bits(a), Subset::from_bits(b));
                prop_assert_eq!((a | b).complement(n), a.complement(n) & b.complement(n));
                prop_assert_eq!((a & b).complement(n), a.complement(n) | b.complement(n));
                prop_assert_eq!(a.complement(n).complement(n), a);
                prop_assert_eq!(a - b, a & b.complement(n));
            }

            #[test]
            fn neighborhoods_contain_point_for_reflexive(rows in proptest::collection::vec(0u64..32, 5)) {
                let r = BinaryRelation::from_fn(5, |a, b| a == b || rows[a] >> b & 1 == 1);
                for x in 0..5 {
                    prop_assert!(r.successor_neighborhood(x).contains(x));
                    prop_assert!(r.predecessor_neighborhood(x).contains(x));
                    prop_assert!(r.min_neighborhood(x).contains(x));
                }
            }

            #[test]
            fn min_neighborhood_is_nested(rows in proptest::collection::vec(0u64..32, 5)) {
                let r = BinaryRelation::from_rows(rows.into_iter().map(Subset::from_bits).collect());
                let mins = r.min_neighborhoods(EmptyMeet::Empty);
                for x in 0..5 {
                    for y in mins[x].iter() {
                        prop_assert!(mins[y].is_subset(mins[x]));
                    }
                }
            }
        }
    }
}
