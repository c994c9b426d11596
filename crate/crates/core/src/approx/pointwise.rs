//! Point-wise approximations over a reflexive approximation space `(X, R)`.

use serde::{Deserialize, Serialize};

use super::{cogranular, ApproxResult, Membership, Op};
use crate::error::{Error, Result};
use crate::family::SubsetFamily;
use crate::lattice::LatticeIdeal;
use crate::universe::{BinaryRelation, Subset};

/// Largest universe for the definite-set sweep.
pub const MAX_TOPOLOGY_UNIVERSE: usize = 5;

/// Which neighborhood serves as the granule of a point.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Neighborhood {
    /// `<x>`
    #[default]
    Min,
    /// `[x]_R`
    Successor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointwiseSpace {
    relation: BinaryRelation,
    granules: Vec<Subset>,
}

impl PointwiseSpace {
    /// Rejects non-reflexive relations.
    pub fn new(relation: BinaryRelation) -> Result<Self> {
        Self::with_neighborhood(relation, Neighborhood::Min)
    }

    pub fn with_neighborhood(relation: BinaryRelation, choice: Neighborhood) -> Result<Self> {
        if !relation.is_reflexive() {
            return Err(Error::NotReflexive);
        }
        let granules = (0..relation.size())
            .map(|x| match choice {
                Neighborhood::Min => relation.min_neighborhood(x),
                Neighborhood::Successor => relation.successor_neighborhood(x),
            })
            .collect();
        Ok(PointwiseSpace { relation, granules })
    }

    pub fn size(&self) -> usize {
        self.relation.size()
    }

    pub fn relation(&self) -> &BinaryRelation {
        &self.relation
    }

    pub fn granules(&self) -> &[Subset] {
        &self.granules
    }

    fn check_set(&self, set: Subset) -> Result<()> {
        if set.is_subset(Subset::full(self.size())) {
            Ok(())
        } else {
            Err(Error::SizeMismatch {
                expected: self.size(),
                found: 64 - set.bits().leading_zeros() as usize,
            })
        }
    }

    /// `l_κ`, `u_κ` for an ideal of the full power-set algebra.
    pub fn kappa(&self, ideal: &LatticeIdeal, set: Subset) -> Result<ApproxResult> {
        self.check_set(set)?;
        let amb = ideal.ambient();
        if amb.universe_size() != self.size() || amb.len() != 1usize << self.size() {
            return Err(Error::InvalidFamily(
                "ideal must live in the full power-set algebra".into(),
            ));
        }
        Ok(cogranular(Op::Kappa, &self.granules, set, |s| {
            Membership::from_bool(ideal.contains(s))
        }))
    }

    /// `l_k`, `u_k` for an ideal of a ring of subsets.
    pub fn iad(&self, ring: &SubsetFamily, ideal: &LatticeIdeal, set: Subset) -> Result<ApproxResult> {
        self.check_set(set)?;
        self.check_ring(ring, ideal)?;
        Ok(cogranular(Op::Iad, &self.granules, set, ring_test(ring, ideal)))
    }

    /// `l_p`, `u_p`: [`iad`](Self::iad) restricted to prime ideals.
    pub fn iad_prime(&self, ring: &SubsetFamily, ideal: &LatticeIdeal, set: Subset) -> Result<ApproxResult> {
        self.check_set(set)?;
        self.check_ring(ring, ideal)?;
        if let Err((a, b)) = ideal.check_prime() {
            return Err(Error::NotPrime(format!("{a:?}"), format!("{b:?}")));
        }
        Ok(cogranular(Op::IadPrime, &self.granules, set, ring_test(ring, ideal)))
    }

    /// `l_+`, `u_+` for an ideal of an algebra closed under relative difference.
    pub fn iasd(&self, algebra: &SubsetFamily, ideal: &LatticeIdeal, set: Subset) -> Result<ApproxResult> {
        self.check_set(set)?;
        if !algebra.is_difference_algebra() {
            return Err(Error::InvalidFamily(
                "ambient family is not closed under union, intersection and difference".into(),
            ));
        }
        if ideal.ambient() != algebra {
            return Err(Error::InvalidFamily("ideal is not over the given algebra".into()));
        }
        if !algebra.contains(set) {
            return Err(Error::InvalidFamily(format!(
                "set {set:?} is not a member of the algebra"
            )));
        }
        Ok(cogranular(Op::Iasd, &self.granules, set, ring_test(algebra, ideal)))
    }

    fn check_ring(&self, ring: &SubsetFamily, ideal: &LatticeIdeal) -> Result<()> {
        if ring.universe_size() != self.size() || !ring.is_ring() {
            return Err(Error::InvalidFamily(
                "ambient family is not a ring of subsets of the universe".into(),
            ));
        }
        if ideal.ambient() != ring {
            return Err(Error::InvalidFamily("ideal is not over the given ring".into()));
        }
        Ok(())
    }
}

fn ring_test<'a>(ring: &'a SubsetFamily, ideal: &'a LatticeIdeal) -> impl Fn(Subset) -> Membership + 'a {
    move |s| {
        if !ring.contains(s) {
            Membership::OutsideAmbient
        } else {
            Membership::from_bool(ideal.contains(s))
        }
    }
}

/// Fixpoints of `l_κ` and their closure properties.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopologyReport {
    pub open_sets: Vec<Subset>,
    pub has_empty: bool,
    pub has_full: bool,
    /// First pair whose union or intersection escapes the family.
    pub violation: Option<(Subset, Subset)>,
}

impl TopologyReport {
    pub fn is_topology(&self) -> bool {
        self.has_empty && self.has_full && self.violation.is_none()
    }
}

pub fn definite_sets_topology(space: &PointwiseSpace, ideal: &LatticeIdeal) -> Result<TopologyReport> {
    let n = space.size();
    if n > MAX_TOPOLOGY_UNIVERSE {
        return Err(Error::GuardExceeded {
            what: "definite-set sweep",
            limit: MAX_TOPOLOGY_UNIVERSE,
            found: n,
        });
    }
    let mut open_sets = Vec::new();
    for a in Subset::full(n).subsets() {
        if space.kappa(ideal, a)?.lower == a {
            open_sets.push(a);
        }
    }
    open_sets.sort();
    let fam = SubsetFamily::new(n, open_sets.iter().copied())?;
    let violation = open_sets.iter().find_map(|&a| {
        open_sets
            .iter()
            .find(|&&b| !fam.contains(a | b) || !fam.contains(a & b))
            .map(|&b| (a, b))
    });
    Ok(TopologyReport {
        has_empty: fam.contains(Subset::EMPTY),
        has_full: fam.contains(Subset::full(n)),
        open_sets,
        violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::partition_algebra;
    use crate::lattice::enumerate_lattice_ideals;

    fn equivalence(n: usize, classes: &[&[usize]]) -> BinaryRelation {
        let class_of = |x: usize| classes.iter().position(|c| c.contains(&x)).unwrap();
        BinaryRelation::from_fn(n, |a, b| class_of(a) == class_of(b))
    }

    fn zero_ideal(n: usize) -> LatticeIdeal {
        LatticeIdeal::principal_in_power_set(n, Subset::EMPTY).unwrap()
    }

    #[test]
    fn non_reflexive_rejected() {
        assert_eq!(
            PointwiseSpace::new(BinaryRelation::empty(2)).unwrap_err(),
            Error::NotReflexive
        );
    }

    #[test]
    fn kappa_boundary_examples() {
        let space = PointwiseSpace::new(BinaryRelation::from_fn(3, |a, b| a <= b)).unwrap();
        let ideal = LatticeIdeal::principal_in_power_set(3, Subset::from_ranks([1])).unwrap();
        let full = Subset::full(3);
        assert_eq!(space.kappa(&ideal, full).unwrap().lower, full);
        assert_eq!(space.kappa(&ideal, Subset::EMPTY).unwrap().upper, Subset::EMPTY);
        let a = Subset::from_ranks([1]);
        assert_eq!(space.kappa(&ideal, a).unwrap().upper, a);
    }

    #[test]
    fn zero_ideal_on_equivalence_is_classical() {
        let r = equivalence(4, &[&[0, 1], &[2], &[3]]);
        let space = PointwiseSpace::new(r).unwrap();
        let ideal = zero_ideal(4);
        let a = Subset::from_ranks([0, 2]);
        let res = space.kappa(&ideal, a).unwrap();
        assert_eq!(res.lower, Subset::from_ranks([2]));
        assert_eq!(res.upper, Subset::from_ranks([0, 1, 2]));
    }

    #[test]
    fn definite_sets_of_equivalence_are_unions_of_classes() {
        let classes: [&[usize]; 2] = [&[0, 1], &[2, 3, 4]];
        let space = PointwiseSpace::new(equivalence(5, &classes)).unwrap();
        let rep = definite_sets_topology(&space, &zero_ideal(5)).unwrap();
        assert!(rep.is_topology());
        let blocks: Vec<Subset> = classes.iter().map(|c| Subset::from_ranks(c.iter().copied())).collect();
        let expected = partition_algebra(5, &blocks).unwrap();
        assert_eq!(rep.open_sets.as_slice(), expected.members());
    }

    #[test]
    fn iad_matches_kappa_on_power_set() {
        let r = BinaryRelation::from_fn(3, |a, b| a == b || (a, b) == (0, 2) || (a, b) == (2, 1));
        let space = PointwiseSpace::new(r).unwrap();
        let p = SubsetFamily::power_set(3).unwrap();
        for ideal in enumerate_lattice_ideals(&p).unwrap() {
            for a in Subset::full(3).subsets() {
                let k = space.kappa(&ideal, a).unwrap();
                let d = space.iad(&p, &ideal, a).unwrap();
                assert_eq!((k.lower, k.upper), (d.lower, d.upper));
            }
        }
    }

    #[test]
    fn restricted_ring_flags_outside_sets() {
        let space = PointwiseSpace::new(BinaryRelation::full(2)).unwrap();
        let chain = SubsetFamily::new(2, [Subset::EMPTY, Subset::from_ranks([0]), Subset::full(2)]).unwrap();
        let ideal = LatticeIdeal::new(chain.clone(), SubsetFamily::new(2, [Subset::EMPTY, Subset::from_ranks([0])]).unwrap()).unwrap();
        let res = space.iad(&chain, &ideal, Subset::from_ranks([1])).unwrap();
        // <x> = X for the full relation, X \ {1} = {0} is in the ideal
        assert_eq!(res.lower, Subset::from_ranks([1]));
        assert!(res
            .provenance
            .iter()
            .all(|p| p.upper.verdict == Membership::OutsideAmbient));
        assert_eq!(res.upper, Subset::full(2));
    }

    #[test]
    fn prime_variant_rejects_non_prime() {
        let space = PointwiseSpace::new(BinaryRelation::identity(2)).unwrap();
        let p = SubsetFamily::power_set(2).unwrap();
        assert!(matches!(
            space.iad_prime(&p, &zero_ideal(2), Subset::EMPTY),
            Err(Error::NotPrime(..))
        ));
        let prime = LatticeIdeal::principal_in_power_set(2, Subset::from_ranks([0])).unwrap();
        assert!(space.iad_prime(&p, &prime, Subset::EMPTY).is_ok());
    }

    #[test]
    fn iasd_requires_member_set() {
        let space = PointwiseSpace::new(BinaryRelation::identity(3)).unwrap();
        let alg = partition_algebra(3, &[Subset::from_ranks([0, 1]), Subset::from_ranks([2])]).unwrap();
        let ideal = LatticeIdeal::new(alg.clone(), SubsetFamily::new(3, [Subset::EMPTY]).unwrap()).unwrap();
        assert!(space.iasd(&alg, &ideal, Subset::from_ranks([0])).is_err());
        let r = space.iasd(&alg, &ideal, Subset::from_ranks([2])).unwrap();
        assert_eq!(r.lower, Subset::from_ranks([2]));
    }
}
