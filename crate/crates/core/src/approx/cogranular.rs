//! Co-granular operators mediated by σ-ideals.

use serde::Serialize;

use super::{cogranular, cogranular_split, ApproxResult, Granulation, Membership, Op};
use crate::error::{Error, Result};
use crate::family::SubsetFamily;
use crate::reference;
use crate::sigma::{least_ideal_containing, LeastIdeal, SigmaStructure};
use crate::universe::Subset;

fn check_sizes(structure: &SigmaStructure, gran: &Granulation, set: Subset) -> Result<()> {
    if gran.size() != structure.size() {
        return Err(Error::SizeMismatch {
            expected: structure.size(),
            found: gran.size(),
        });
    }
    check_set(gran.size(), set)
}

fn check_set(n: usize, set: Subset) -> Result<()> {
    if !set.is_subset(Subset::full(n)) {
        return Err(Error::RankOutOfRange {
            rank: 63 - set.bits().leading_zeros() as usize,
            size: n,
        });
    }
    Ok(())
}

/// `l_*`, `u_*`: membership in the σ-ideal family decided by the ideal predicate.
///
/// On the built-in reference instance a [`reference::Deviation`] is attached when
/// the computed lower approximation differs from the recorded one.
pub fn approx_gosi(structure: &SigmaStructure, gran: &Granulation, set: Subset) -> Result<ApproxResult> {
    check_sizes(structure, gran, set)?;
    let mut res = cogranular(Op::Gosi, gran.granules(), set, |s| {
        Membership::from_bool(structure.is_ideal(s))
    });
    res.deviations.extend(reference::gosi_lower_deviation(
        structure.carrier(),
        structure.sigma(),
        gran.granules(),
        set,
        res.lower,
    ));
    Ok(res)
}

/// [`approx_gosi`] with membership looked up in an enumerated family.
pub fn approx_gosi_with_family(ideals: &SubsetFamily, gran: &Granulation, set: Subset) -> Result<ApproxResult> {
    check_set(gran.size(), set)?;
    Ok(cogranular(Op::Gosi, gran.granules(), set, |s| {
        Membership::from_bool(ideals.contains(s))
    }))
}

/// Hypotheses under which the `l_o`/`u_o` laws are claimed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GosihHypotheses {
    pub supremal: bool,
    pub quasi_order: bool,
    pub reflexive_granules: bool,
}

impl GosihHypotheses {
    pub fn all(self) -> bool {
        self.supremal && self.quasi_order && self.reflexive_granules
    }
}

pub fn gosih_hypotheses(structure: &SigmaStructure, gran: &Granulation) -> GosihHypotheses {
    GosihHypotheses {
        supremal: structure.is_supremal(),
        quasi_order: structure.sigma().is_quasi_order(),
        reflexive_granules: gran.is_reflexive(),
    }
}

/// `l_o`, `u_o`. `structure` lives on the power set of the granulation's universe
/// (carrier element `m` is the subset with mask `m`); `fixed` is a σ-ideal of it.
pub fn approx_gosih(
    structure: &SigmaStructure,
    gran: &Granulation,
    fixed: Subset,
    set: Subset,
) -> Result<ApproxResult> {
    let n = gran.size();
    if structure.size() != 1usize << n {
        return Err(Error::SizeMismatch {
            expected: 1usize << n,
            found: structure.size(),
        });
    }
    check_set(n, set)?;
    if let Err(v) = structure.check_ideal(fixed) {
        return Err(Error::NotSigmaIdeal(v.describe(structure.carrier())));
    }
    Ok(cogranular(Op::Gosih, gran.granules(), set, |s| {
        Membership::from_bool(fixed.contains(s.bits() as usize))
    }))
}

/// `l_s`, `u_s` over the enumerated σ-ideal family.
///
/// A point enters the lower approximation when some nonempty σ-ideal sits inside
/// `γ(x) ∖ A`; it enters the upper one when `γ(x) ∩ A` is strictly below its
/// least containing σ-ideal. For points outside `A` that least ideal must exist.
pub fn approx_strong(structure: &SigmaStructure, gran: &Granulation, set: Subset) -> Result<ApproxResult> {
    check_sizes(structure, gran, set)?;
    let ideals = structure.enumerate_ideals()?;
    approx_strong_with_family(structure, &ideals, gran, set)
}

pub fn approx_strong_with_family(
    structure: &SigmaStructure,
    ideals: &SubsetFamily,
    gran: &Granulation,
    set: Subset,
) -> Result<ApproxResult> {
    check_sizes(structure, gran, set)?;
    for x in (Subset::full(gran.size()) - set).iter() {
        let tested = gran.get(x) & set;
        if let LeastIdeal::Absent(_) = least_ideal_containing(ideals, tested) {
            return Err(Error::UpsilonUndefined {
                point: structure.carrier().label(x).to_string(),
                tested: structure.carrier().format(tested),
            });
        }
    }
    let lower = |s: Subset| {
        Membership::from_bool(ideals.iter().any(|k| !k.is_empty() && k.is_subset(s)))
    };
    // In means "not strictly below Υ", i.e. the point is not added
    let upper = |s: Subset| match least_ideal_containing(ideals, s) {
        LeastIdeal::Found(k) => Membership::from_bool(k == s),
        LeastIdeal::Absent(_) => Membership::Out,
    };
    Ok(cogranular_split(Op::Strong, gran.granules(), set, &lower, &upper))
}

/// `(𝒪⁺, 𝒪⁻)` for an antichain `𝒪` of the σ-ideal family.
pub fn antichain_split(ideals: &SubsetFamily, antichain: &[Subset]) -> Result<(Vec<Subset>, Vec<Subset>)> {
    if let Some(c) = antichain.iter().find(|&&c| !ideals.contains(c)) {
        return Err(Error::InvalidAntichain(format!("{c:?} is not a σ-ideal")));
    }
    for (i, &a) in antichain.iter().enumerate() {
        for &b in &antichain[i + 1..] {
            if a.is_subset(b) || b.is_subset(a) {
                return Err(Error::InvalidAntichain(format!("{a:?} and {b:?} are comparable")));
            }
        }
    }
    let (plus, minus) = ideals
        .iter()
        .partition(|&b| antichain.iter().any(|&c| c.is_subset(b)));
    Ok((plus, minus))
}

/// `l_a`, `u_a`: membership tested against `𝒪⁻`.
pub fn approx_antichain(
    structure: &SigmaStructure,
    ideals: &SubsetFamily,
    gran: &Granulation,
    antichain: &[Subset],
    set: Subset,
) -> Result<ApproxResult> {
    check_sizes(structure, gran, set)?;
    let (_, minus) = antichain_split(ideals, antichain)?;
    Ok(cogranular(Op::Antichain, gran.granules(), set, |s| {
        Membership::from_bool(minus.contains(&s))
    }))
}
