//! Rough inclusion and rough equality over a list of computed approximations.

use super::{ApproxResult, Op};
use crate::error::{Error, Result};
use crate::universe::Subset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoughOrder {
    pub op: Op,
    pub sets: Vec<Subset>,
    /// `included[i][j]` iff `sets[i] ⊑ sets[j]`.
    pub included: Vec<Vec<bool>>,
    /// Indices grouped by rough equality, in first-appearance order.
    pub classes: Vec<Vec<usize>>,
}

impl RoughOrder {
    pub fn roughly_included(&self, i: usize, j: usize) -> bool {
        self.included[i][j]
    }

    pub fn roughly_equal(&self, i: usize, j: usize) -> bool {
        self.included[i][j] && self.included[j][i]
    }
}

/// `A ⊑ B` iff both approximations of `A` are included in those of `B`.
pub fn rough_compare(results: &[ApproxResult]) -> Result<RoughOrder> {
    let op = match results.first() {
        Some(r) => r.op,
        None => {
            return Ok(RoughOrder {
                op: Op::Kappa,
                sets: Vec::new(),
                included: Vec::new(),
                classes: Vec::new(),
            })
        }
    };
    if let Some(r) = results.iter().find(|r| r.op != op) {
        return Err(Error::MixedTags(op.to_string(), r.op.to_string()));
    }
    let included: Vec<Vec<bool>> = results
        .iter()
        .map(|a| {
            results
                .iter()
                .map(|b| a.lower.is_subset(b.lower) && a.upper.is_subset(b.upper))
                .collect()
        })
        .collect();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, row) in included.iter().enumerate() {
        match classes
            .iter_mut()
            .find(|c| included[c[0]][i] && row[c[0]])
        {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    Ok(RoughOrder {
        op,
        sets: results.iter().map(|r| r.set).collect(),
        included,
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::PointwiseSpace;
    use crate::lattice::LatticeIdeal;
    use crate::universe::BinaryRelation;

    #[test]
    fn order_is_a_preorder_and_classes_partition() {
        let space = PointwiseSpace::new(BinaryRelation::from_fn(3, |a, b| a <= b)).unwrap();
        let ideal = LatticeIdeal::principal_in_power_set(3, Subset::from_ranks([2])).unwrap();
        let results: Vec<ApproxResult> = Subset::full(3)
            .subsets()
            .map(|a| space.kappa(&ideal, a).unwrap())
            .collect();
        let ord = rough_compare(&results).unwrap();
        let n = results.len();
        for i in 0..n {
            assert!(ord.roughly_included(i, i));
            for j in 0..n {
                if results[i].set.is_subset(results[j].set) {
                    assert!(ord.roughly_included(i, j));
                }
                for k in 0..n {
                    if ord.roughly_included(i, j) && ord.roughly_included(j, k) {
                        assert!(ord.roughly_included(i, k));
                    }
                }
            }
        }
        let mut seen: Vec<usize> = ord.classes.concat();
        seen.sort();
        assert_eq!(seen, (0..n).collect::<Vec<_>>());
        for c in &ord.classes {
            assert!(c.iter().all(|&i| ord.roughly_equal(i, c[0])));
        }
    }

    #[test]
    fn mixed_tags_rejected() {
        let space = PointwiseSpace::new(BinaryRelation::identity(2)).unwrap();
        let p = crate::family::SubsetFamily::power_set(2).unwrap();
        let ideal = LatticeIdeal::principal_in_power_set(2, Subset::EMPTY).unwrap();
        let a = space.kappa(&ideal, Subset::EMPTY).unwrap();
        let b = space.iad(&p, &ideal, Subset::EMPTY).unwrap();
        assert!(matches!(rough_compare(&[a, b]), Err(Error::MixedTags(..))));
        assert!(rough_compare(&[]).unwrap().sets.is_empty());
    }
}
