//! Blind brute-force oracles. They share no code with the optimized paths they check.

use crate::error::{Error, Result};
use crate::family::SubsetFamily;
use crate::sigma::Directedness;
use crate::universe::{BinaryRelation, Subset};

pub const MAX_ORACLE_CARRIER: usize = 16;

fn guard(n: usize) -> Result<()> {
    if n > MAX_ORACLE_CARRIER {
        return Err(Error::GuardExceeded {
            what: "oracle scan",
            limit: MAX_ORACLE_CARRIER,
            found: n,
        });
    }
    Ok(())
}

fn down_closed(sigma: &BinaryRelation, k: u64) -> bool {
    let n = sigma.size();
    (0..n).all(|a| k >> a & 1 == 0 || (0..n).all(|x| !sigma.contains(x, a) || k >> x & 1 == 1))
}

/// Every `K` with `σ x a ∧ a ∈ K → x ∈ K`, by scanning all `2^n` masks.
pub fn oracle_enumerate_downclosed(sigma: &BinaryRelation) -> Result<SubsetFamily> {
    let n = sigma.size();
    guard(n)?;
    let members = (0u64..1 << n).filter(|&k| down_closed(sigma, k)).map(Subset::from_bits);
    SubsetFamily::new(n, members)
}

/// σ-ideals by scan: proper, down-closed, and U-directed under `mode`.
pub fn oracle_sigma_ideals(sigma: &BinaryRelation, mode: Directedness, allow_empty: bool) -> Result<SubsetFamily> {
    let n = sigma.size();
    guard(n)?;
    let full = (1u64 << n) - 1;
    let directed = |k: u64| {
        (0..n).filter(|&a| k >> a & 1 == 1).all(|a| {
            (0..n).filter(|&b| k >> b & 1 == 1).all(|b| {
                let ups: Vec<usize> = (0..n).filter(|&x| sigma.contains(a, x) && sigma.contains(b, x)).collect();
                let hit = ups.iter().any(|&x| k >> x & 1 == 1);
                match mode {
                    Directedness::Strict => hit,
                    Directedness::Weak => ups.is_empty() || hit,
                }
            })
        })
    };
    let members = (0u64..1 << n)
        .filter(|&k| k != full && (allow_empty || k != 0))
        .filter(|&k| down_closed(sigma, k) && directed(k))
        .map(Subset::from_bits);
    SubsetFamily::new(n, members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::s6_instance;

    #[test]
    fn reference_down_sets() {
        let inst = s6_instance();
        let fam = oracle_enumerate_downclosed(&inst.relation).unwrap();
        let u = &inst.universe;
        let mut want: Vec<Subset> = [
            &[][..],
            &["f"],
            &["g"],
            &["f", "g"],
            &["a", "b", "c", "e"],
            &["a", "b", "c", "e", "f"],
            &["a", "b", "c", "e", "g"],
            &["a", "b", "c", "e", "f", "g"],
        ]
        .iter()
        .map(|l| u.subset(l.iter()).unwrap())
        .collect();
        want.sort();
        assert_eq!(fam.members(), want.as_slice());
    }

    #[test]
    fn trivial_shapes() {
        assert_eq!(oracle_enumerate_downclosed(&BinaryRelation::empty(4)).unwrap().len(), 16);
        let chain = BinaryRelation::from_fn(5, |a, b| a <= b);
        assert_eq!(oracle_enumerate_downclosed(&chain).unwrap().len(), 6);
        assert!(oracle_enumerate_downclosed(&BinaryRelation::empty(17)).is_err());
    }

    #[test]
    fn reference_ideals_by_mode() {
        let inst = s6_instance();
        let strict = oracle_sigma_ideals(&inst.relation, Directedness::Strict, true).unwrap();
        let u = &inst.universe;
        assert_eq!(strict.members(), &[Subset::EMPTY, u.subset(["f"]).unwrap()]);
        let weak = oracle_sigma_ideals(&inst.relation, Directedness::Weak, true).unwrap();
        assert_eq!(weak.len(), 7);
    }
}
