//! Lattice ideals of explicit families of sets, ordered by inclusion.
//!
//! The join of two members is their union and the meet their intersection.
//! Ideals are nonempty; the empty family is never an ideal.

use std::fmt;

use crate::error::{Error, Result};
use crate::family::SubsetFamily;
use crate::universe::Subset;

/// Largest ambient family accepted by [`enumerate_lattice_ideals`].
pub const MAX_IDEAL_AMBIENT: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealViolation {
    Empty,
    OutsideAmbient(Subset),
    /// `below ⊆ member`, `below` in the ambient, but `below` is missing.
    NotDownClosed { member: Subset, below: Subset },
    /// The union of two members is missing.
    NotJoinClosed(Subset, Subset),
}

impl fmt::Display for IdealViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealViolation::Empty => write!(f, "the empty family is not an ideal"),
            IdealViolation::OutsideAmbient(s) => write!(f, "member {s:?} is outside the ambient"),
            IdealViolation::NotDownClosed { member, below } => {
                write!(f, "{below:?} ⊆ {member:?} but {below:?} is missing")
            }
            IdealViolation::NotJoinClosed(a, b) => write!(f, "join of {a:?} and {b:?} is missing"),
        }
    }
}

/// A validated lattice ideal of an ambient family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeIdeal {
    ambient: SubsetFamily,
    members: SubsetFamily,
}

pub fn check_lattice_ideal(
    ambient: &SubsetFamily,
    candidate: &SubsetFamily,
) -> std::result::Result<(), IdealViolation> {
    if candidate.is_empty() {
        return Err(IdealViolation::Empty);
    }
    if let Some(m) = candidate.iter().find(|&m| !ambient.contains(m)) {
        return Err(IdealViolation::OutsideAmbient(m));
    }
    for m in candidate.iter() {
        if let Some(below) = ambient
            .iter()
            .find(|&a| a.is_subset(m) && !candidate.contains(a))
        {
            return Err(IdealViolation::NotDownClosed { member: m, below });
        }
    }
    for a in candidate.iter() {
        for b in candidate.iter() {
            if !candidate.contains(a | b) {
                return Err(IdealViolation::NotJoinClosed(a, b));
            }
        }
    }
    Ok(())
}

pub fn is_lattice_ideal(ambient: &SubsetFamily, candidate: &SubsetFamily) -> bool {
    check_lattice_ideal(ambient, candidate).is_ok()
}

impl LatticeIdeal {
    pub fn new(ambient: SubsetFamily, members: SubsetFamily) -> Result<Self> {
        check_lattice_ideal(&ambient, &members).map_err(|v| Error::NotAnIdeal(v.to_string()))?;
        Ok(LatticeIdeal { ambient, members })
    }

    /// `↓top` inside the full power set of an `n`-element universe.
    pub fn principal_in_power_set(n: usize, top: Subset) -> Result<Self> {
        let ambient = SubsetFamily::power_set(n)?;
        let members = SubsetFamily::down_set(n, top)?;
        Self::new(ambient, members)
    }

    pub fn ambient(&self) -> &SubsetFamily {
        &self.ambient
    }

    pub fn members(&self) -> &SubsetFamily {
        &self.members
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.members.contains(s)
    }

    pub fn is_proper(&self) -> bool {
        self.members.len() < self.ambient.len()
    }

    /// `a ∩ b ∈ P → a ∈ P or b ∈ P` for all `a, b` in the ambient.
    pub fn check_prime(&self) -> std::result::Result<(), (Subset, Subset)> {
        for a in self.ambient.iter() {
            for b in self.ambient.iter() {
                if self.contains(a & b) && !self.contains(a) && !self.contains(b) {
                    return Err((a, b));
                }
            }
        }
        Ok(())
    }

    pub fn is_prime(&self) -> bool {
        self.check_prime().is_ok()
    }
}

/// Least ideal of `ambient` containing `seed`, by alternating down-closure and
/// pairwise-join closure until nothing changes.
pub fn generated_lattice_ideal(ambient: &SubsetFamily, seed: &SubsetFamily) -> Result<LatticeIdeal> {
    let flags = ambient.closure_flags();
    if ambient.is_empty() || !flags.union || !flags.intersection {
        return Err(Error::InvalidFamily(
            "ambient must be closed under union and intersection".into(),
        ));
    }
    if let Some(m) = seed.iter().find(|&m| !ambient.contains(m)) {
        return Err(Error::NotAnIdeal(format!("seed member {m:?} is outside the ambient")));
    }
    let mut current: Vec<Subset> = if seed.is_empty() {
        // the ambient's bottom: the meet of all members, present by meet-closure
        let bottom = ambient
            .iter()
            .fold(Subset::full(ambient.universe_size()), |acc, m| acc & m);
        vec![bottom]
    } else {
        seed.members().to_vec()
    };
    loop {
        let fam = SubsetFamily::new(ambient.universe_size(), current.iter().copied())?;
        let mut next: Vec<Subset> = ambient
            .iter()
            .filter(|&a| fam.iter().any(|m| a.is_subset(m)))
            .collect();
        let snapshot = next.clone();
        for &a in &snapshot {
            for &b in &snapshot {
                next.push(a | b);
            }
        }
        let next_fam = SubsetFamily::new(ambient.universe_size(), next)?;
        if next_fam == fam {
            return LatticeIdeal::new(ambient.clone(), fam);
        }
        current = next_fam.members().to_vec();
    }
}

/// Every ideal of `ambient`, in canonical order of their member lists.
///
/// Down-closed families are enumerated by backtracking over the ambient in
/// canonical (cardinality-first) order, so a member can be included only once
/// all of its ambient subsets are; join closure is filtered afterwards.
pub fn enumerate_lattice_ideals(ambient: &SubsetFamily) -> Result<Vec<LatticeIdeal>> {
    if ambient.len() > MAX_IDEAL_AMBIENT {
        return Err(Error::GuardExceeded {
            what: "lattice ideal enumeration ambient",
            limit: MAX_IDEAL_AMBIENT,
            found: ambient.len(),
        });
    }
    let members = ambient.members();
    let below: Vec<u32> = members
        .iter()
        .map(|&m| {
            members
                .iter()
                .enumerate()
                .filter(|&(_, &a)| a.is_proper_subset(m))
                .fold(0u32, |acc, (i, _)| acc | 1 << i)
        })
        .collect();

    fn walk(i: usize, chosen: u32, below: &[u32], out: &mut Vec<u32>) {
        if i == below.len() {
            if chosen != 0 {
                out.push(chosen);
            }
            return;
        }
        walk(i + 1, chosen, below, out);
        if below[i] & !chosen == 0 {
            walk(i + 1, chosen | 1 << i, below, out);
        }
    }

    let mut down_sets = Vec::new();
    walk(0, 0, &below, &mut down_sets);

    let mut ideals: Vec<LatticeIdeal> = Vec::new();
    for sel in down_sets {
        let fam = SubsetFamily::new(
            ambient.universe_size(),
            (0..members.len())
                .filter(|&i| sel >> i & 1 == 1)
                .map(|i| members[i]),
        )?;
        let join_closed = fam
            .iter()
            .all(|a| fam.iter().all(|b| fam.contains(a | b)));
        if join_closed {
            ideals.push(LatticeIdeal {
                ambient: ambient.clone(),
                members: fam,
            });
        }
    }
    ideals.sort_by(|a, b| a.members.members().cmp(b.members.members()));
    Ok(ideals)
}

/// Whether a collection of ideals, ordered by inclusion, has all binary meets and joins.
pub fn ideals_form_lattice(ideals: &[LatticeIdeal]) -> bool {
    let le = |a: &LatticeIdeal, b: &LatticeIdeal| a.members.is_subfamily_of(&b.members);
    let has_bound = |a: &LatticeIdeal, b: &LatticeIdeal, upper: bool| {
        let bounds: Vec<&LatticeIdeal> = ideals
            .iter()
            .filter(|c| {
                if upper {
                    le(a, c) && le(b, c)
                } else {
                    le(c, a) && le(c, b)
                }
            })
            .collect();
        bounds.iter().any(|c| {
            bounds
                .iter()
                .all(|d| if upper { le(c, d) } else { le(d, c) })
        })
    };
    ideals
        .iter()
        .all(|a| ideals.iter().all(|b| has_bound(a, b, true) && has_bound(a, b, false)))
}
