//! Generalized ideals relative to an arbitrary binary relation `σ` on a carrier.
//!
//! A σ-ideal is a proper subset that is downward σ-closed and U-directed. Two
//! readings of directedness are supported: [`Directedness::Strict`] requires
//! `U(a, b) ∩ K ≠ ∅` for every pair of members, [`Directedness::Weak`] only for
//! pairs whose common upper bounds are nonempty.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::SubsetFamily;
use crate::universe::{BinaryRelation, Subset, Universe};

/// Largest carrier accepted by [`SigmaStructure::enumerate_ideals`].
pub const MAX_SIGMA_CARRIER: usize = 20;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Directedness {
    Strict,
    #[default]
    Weak,
}

impl fmt::Display for Directedness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Directedness::Strict => "strict",
            Directedness::Weak => "weak",
        })
    }
}

/// First failing clause of the σ-ideal (or σ-filter) definition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaViolation {
    /// `∅` while the structure does not admit the empty ideal.
    Empty,
    /// The whole carrier.
    NotProper,
    /// `σ x a` with `a` inside and `x` outside (for filters: `σ a x`).
    NotClosed { outside: usize, member: usize },
    /// Bounds of `a, b` miss the set.
    NotDirected { a: usize, b: usize },
}

impl SigmaViolation {
    pub fn describe(&self, carrier: &Universe) -> String {
        match *self {
            SigmaViolation::Empty => "empty set not admitted".to_string(),
            SigmaViolation::NotProper => "not a proper subset of the carrier".to_string(),
            SigmaViolation::NotClosed { outside, member } => format!(
                "closure fails: {} is related to member {} but is outside",
                carrier.label(outside),
                carrier.label(member)
            ),
            SigmaViolation::NotDirected { a, b } => format!(
                "directedness fails on ({}, {})",
                carrier.label(a),
                carrier.label(b)
            ),
        }
    }
}

/// A carrier with a relation `σ`, a directedness reading and the empty-ideal convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaStructure {
    carrier: Universe,
    sigma: BinaryRelation,
    mode: Directedness,
    allow_empty: bool,
}

/// A member of the σ-ideal family of a particular structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SigmaIdeal(Subset);

impl SigmaIdeal {
    pub fn members(self) -> Subset {
        self.0
    }
}

/// Supremum map of a supremal relation, ties broken by lowest rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupremumMap {
    n: usize,
    table: Vec<usize>,
    candidates: Vec<Subset>,
}

impl SupremumMap {
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    /// Every σ-supremum of `a, b`.
    pub fn all(&self, a: usize, b: usize) -> Subset {
        self.candidates[a * self.n + b]
    }

    pub fn is_unique(&self) -> bool {
        self.candidates.iter().all(|c| c.len() == 1)
    }
}

/// Result of the generation iteration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Generated {
    pub ideal: Subset,
    pub rounds: usize,
    /// Set when `σ` is reflexive and the `π∘𝔏` route was also run (and agreed).
    pub cross_checked: bool,
}

/// Outcome of looking for the least σ-ideal containing a set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeastIdeal {
    Found(Subset),
    /// No minimum; carries the inclusion-minimal ideals containing the set (possibly none).
    Absent(Vec<Subset>),
}

impl LeastIdeal {
    pub fn found(&self) -> Option<Subset> {
        match self {
            LeastIdeal::Found(s) => Some(*s),
            LeastIdeal::Absent(_) => None,
        }
    }
}

impl SigmaStructure {
    pub fn new(carrier: Universe, sigma: BinaryRelation) -> Result<Self> {
        if sigma.size() != carrier.len() {
            return Err(Error::SizeMismatch {
                expected: carrier.len(),
                found: sigma.size(),
            });
        }
        Ok(SigmaStructure {
            carrier,
            sigma,
            mode: Directedness::default(),
            allow_empty: true,
        })
    }

    /// `σ` is `⊆` on the power set of `base`; carrier element `i` is the subset with mask `i`.
    pub fn subset_order(base: &Universe) -> Result<Self> {
        let carrier = base.power_set()?;
        let n = carrier.len();
        let sigma = BinaryRelation::from_fn(n, |a, b| {
            Subset::from_bits(a as u64).is_subset(Subset::from_bits(b as u64))
        });
        Self::new(carrier, sigma)
    }

    pub fn with_mode(mut self, mode: Directedness) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_allow_empty(mut self, allow: bool) -> Self {
        self.allow_empty = allow;
        self
    }

    pub fn carrier(&self) -> &Universe {
        &self.carrier
    }

    pub fn sigma(&self) -> &BinaryRelation {
        &self.sigma
    }

    pub fn mode(&self) -> Directedness {
        self.mode
    }

    pub fn allow_empty(&self) -> bool {
        self.allow_empty
    }

    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    fn full(&self) -> Subset {
        Subset::full(self.size())
    }

    pub fn upper_bounds(&self, a: usize, b: usize) -> Subset {
        self.sigma.upper_bounds(a, b)
    }

    pub fn lower_bounds(&self, a: usize, b: usize) -> Subset {
        self.sigma.lower_bounds(a, b)
    }

    fn directed_by(&self, set: Subset, bounds: impl Fn(usize, usize) -> Subset) -> Option<(usize, usize)> {
        for a in set.iter() {
            for b in set.iter() {
                let bnd = bounds(a, b);
                let required = match self.mode {
                    Directedness::Strict => true,
                    Directedness::Weak => !bnd.is_empty(),
                };
                if required && !bnd.intersects(set) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_u_directed(&self, set: Subset) -> bool {
        self.directed_by(set, |a, b| self.upper_bounds(a, b)).is_none()
    }

    pub fn is_l_directed(&self, set: Subset) -> bool {
        self.directed_by(set, |a, b| self.lower_bounds(a, b)).is_none()
    }

    pub fn is_directed(&self, set: Subset) -> bool {
        self.is_u_directed(set) && self.is_l_directed(set)
    }

    /// `σ a x & σ x b → x ∈ B` for `a, b ∈ B`.
    pub fn is_convex(&self, set: Subset) -> bool {
        set.iter().all(|a| {
            set.iter().all(|b| {
                (self.sigma.predecessor_neighborhood(a) & self.sigma.successor_neighborhood(b))
                    .is_subset(set)
            })
        })
    }

    /// `σ x a & a ∈ K → x ∈ K`.
    pub fn is_down_closed(&self, set: Subset) -> bool {
        set.iter()
            .all(|a| self.sigma.successor_neighborhood(a).is_subset(set))
    }

    pub fn check_ideal(&self, set: Subset) -> std::result::Result<(), SigmaViolation> {
        if set.is_empty() && !self.allow_empty {
            return Err(SigmaViolation::Empty);
        }
        if set == self.full() {
            return Err(SigmaViolation::NotProper);
        }
        for a in set.iter() {
            if let Some(x) = (self.sigma.successor_neighborhood(a) - set).first() {
                return Err(SigmaViolation::NotClosed { outside: x, member: a });
            }
        }
        if let Some((a, b)) = self.directed_by(set, |a, b| self.upper_bounds(a, b)) {
            return Err(SigmaViolation::NotDirected { a, b });
        }
        Ok(())
    }

    pub fn is_ideal(&self, set: Subset) -> bool {
        self.check_ideal(set).is_ok()
    }

    pub fn ideal(&self, set: Subset) -> std::result::Result<SigmaIdeal, SigmaViolation> {
        self.check_ideal(set).map(|()| SigmaIdeal(set))
    }

    /// Dual of [`check_ideal`](Self::check_ideal): upward closed and L-directed.
    pub fn check_filter(&self, set: Subset) -> std::result::Result<(), SigmaViolation> {
        if set.is_empty() && !self.allow_empty {
            return Err(SigmaViolation::Empty);
        }
        if set == self.full() {
            return Err(SigmaViolation::NotProper);
        }
        for a in set.iter() {
            if let Some(x) = (self.sigma.predecessor_neighborhood(a) - set).first() {
                return Err(SigmaViolation::NotClosed { outside: x, member: a });
            }
        }
        if let Some((a, b)) = self.directed_by(set, |a, b| self.lower_bounds(a, b)) {
            return Err(SigmaViolation::NotDirected { a, b });
        }
        Ok(())
    }

    pub fn is_filter(&self, set: Subset) -> bool {
        self.check_filter(set).is_ok()
    }

    /// A σ-ideal `K` is prime when `L(a, b) ∩ K ≠ ∅ → a ∈ K or b ∈ K` over all pairs.
    /// Returns the first failing pair; non-ideals are reported as `Err(None)`.
    pub fn check_prime(&self, set: Subset) -> std::result::Result<(), Option<(usize, usize)>> {
        if !self.is_ideal(set) {
            return Err(None);
        }
        let n = self.size();
        for a in 0..n {
            for b in 0..n {
                if self.lower_bounds(a, b).intersects(set) && !set.contains(a) && !set.contains(b) {
                    return Err(Some((a, b)));
                }
            }
        }
        Ok(())
    }

    pub fn is_prime(&self, set: Subset) -> bool {
        self.check_prime(set).is_ok()
    }

    /// The σ-supremum map when `σ` is supremal, else a pair without one.
    ///
    /// The witness is the first pair with no upper bound at all when such a
    /// pair exists, otherwise the first pair whose bounds have no least member.
    pub fn supremum(&self) -> std::result::Result<SupremumMap, (usize, usize)> {
        let n = self.size();
        let mut table = Vec::with_capacity(n * n);
        let mut candidates = Vec::with_capacity(n * n);
        let mut failure: Option<(usize, usize)> = None;
        for a in 0..n {
            for b in 0..n {
                let ub = self.upper_bounds(a, b);
                if ub.is_empty() {
                    return Err((a, b));
                }
                let sups: Subset = ub
                    .iter()
                    .filter(|&s| (ub.without(s)).is_subset(self.sigma.predecessor_neighborhood(s)))
                    .collect();
                match sups.first() {
                    Some(s) => {
                        table.push(s);
                        candidates.push(sups);
                    }
                    None => {
                        failure.get_or_insert((a, b));
                    }
                }
            }
        }
        if let Some(w) = failure {
            return Err(w);
        }
        Ok(SupremumMap {
            n,
            table,
            candidates,
        })
    }

    pub fn is_supremal(&self) -> bool {
        self.supremum().is_ok()
    }

    /// `𝔏(X) = {x : ∃a ∈ X, σ x a}`.
    fn lower_image(&self, set: Subset) -> Subset {
        set.iter()
            .fold(Subset::EMPTY, |acc, a| acc | self.sigma.successor_neighborhood(a))
    }

    /// `π(X)`: all σ-supremums of pairs drawn from `X`.
    fn sup_image(&self, set: Subset, sup: &SupremumMap) -> Subset {
        let mut acc = Subset::EMPTY;
        for b in set.iter() {
            for c in set.iter() {
                acc = acc | sup.all(b, c);
            }
        }
        acc
    }

    /// Least σ-ideal containing `set` by iterating `Σ∘λ` to a fixpoint.
    ///
    /// Requires `σ` supremal. When `σ` is also reflexive the union of the
    /// `(π∘𝔏)ⁿ` iterates is computed as well and must agree.
    pub fn generated_ideal(&self, set: Subset) -> Result<Generated> {
        let sup = self.supremum().map_err(|(a, b)| {
            Error::NotSupremal(self.carrier.label(a).into(), self.carrier.label(b).into())
        })?;
        if set.is_empty() {
            return Err(Error::EmptyGenerator);
        }
        let n = self.size();
        let mut current = set;
        let mut rounds = 0;
        loop {
            let lambda = self.lower_image(current) | current;
            let next = self.sup_image(lambda, &sup) | lambda;
            rounds += 1;
            if next == current {
                break;
            }
            current = next;
            if rounds > n + 1 {
                return Err(Error::Internal("Σλ iteration did not converge".into()));
            }
        }
        let cross_checked = if self.sigma.is_reflexive() {
            let other = self.pi_l_route(set, &sup);
            if other != current {
                return Err(Error::RouteMismatch {
                    sigma_lambda: self.carrier.format(current),
                    pi_l: self.carrier.format(other),
                });
            }
            true
        } else {
            false
        };
        if current == self.full() {
            return Err(Error::NotProper);
        }
        if let Err(v) = self.check_ideal(current) {
            return Err(Error::Internal(format!(
                "generated set is not a σ-ideal: {}",
                v.describe(&self.carrier)
            )));
        }
        Ok(Generated {
            ideal: current,
            rounds,
            cross_checked,
        })
    }

    fn pi_l_route(&self, set: Subset, sup: &SupremumMap) -> Subset {
        let mut seen: Vec<Subset> = Vec::new();
        let mut acc = Subset::EMPTY;
        let mut y = set;
        loop {
            y = self.sup_image(self.lower_image(y), sup);
            if seen.contains(&y) {
                return acc;
            }
            seen.push(y);
            acc = acc | y;
        }
    }

    /// All downward σ-closed subsets, by closure-forced branching.
    pub fn enumerate_down_closed(&self) -> Result<Vec<Subset>> {
        let n = self.size();
        if n > MAX_SIGMA_CARRIER {
            return Err(Error::GuardExceeded {
                what: "σ-ideal enumeration carrier",
                limit: MAX_SIGMA_CARRIER,
                found: n,
            });
        }
        let closure = self.sigma.transitive_closure();
        let down: Vec<Subset> = (0..n)
            .map(|x| closure.successor_neighborhood(x).with(x))
            .collect();

        fn walk(i: usize, inc: Subset, exc: Subset, down: &[Subset], out: &mut Vec<Subset>) {
            if i == down.len() {
                out.push(inc);
                return;
            }
            if inc.contains(i) || exc.contains(i) {
                walk(i + 1, inc, exc, down, out);
                return;
            }
            walk(i + 1, inc, exc.with(i), down, out);
            let grown = inc | down[i];
            if !grown.intersects(exc) {
                walk(i + 1, grown, exc, down, out);
            }
        }

        let mut out = Vec::new();
        walk(0, Subset::EMPTY, Subset::EMPTY, &down, &mut out);
        out.sort();
        Ok(out)
    }

    /// Every σ-ideal of the structure, canonically ordered.
    pub fn enumerate_ideals(&self) -> Result<SubsetFamily> {
        let down = self.enumerate_down_closed()?;
        SubsetFamily::new(
            self.size(),
            down.into_iter().filter(|&k| self.is_ideal(k)),
        )
    }

    /// `⟨B⟩` read as the meet of all σ-ideals containing `B`, when that meet is a σ-ideal.
    pub fn intersection_ideal(&self, ideals: &SubsetFamily, set: Subset) -> Option<Subset> {
        let meet = ideals
            .iter()
            .filter(|&k| set.is_subset(k))
            .fold(self.full(), |acc, k| acc & k);
        ideals.contains(meet).then_some(meet)
    }
}

/// `μ(A)`: inclusion-maximal members of `ideals` inside `set`.
pub fn maximal_ideals_within(ideals: &SubsetFamily, set: Subset) -> Vec<Subset> {
    let inside: Vec<Subset> = ideals.iter().filter(|k| k.is_subset(set)).collect();
    inside
        .iter()
        .copied()
        .filter(|&k| !inside.iter().any(|&o| k.is_proper_subset(o)))
        .collect()
}

/// `Υ(A)`: the least member of `ideals` containing `set`, if there is a minimum.
pub fn least_ideal_containing(ideals: &SubsetFamily, set: Subset) -> LeastIdeal {
    let covers: Vec<Subset> = ideals.iter().filter(|&k| set.is_subset(k)).collect();
    if let Some(&min) = covers.iter().find(|&&k| covers.iter().all(|&o| k.is_subset(o))) {
        return LeastIdeal::Found(min);
    }
    let minimal = covers
        .iter()
        .copied()
        .filter(|&k| !covers.iter().any(|&o| o.is_proper_subset(k)))
        .collect();
    LeastIdeal::Absent(minimal)
}
