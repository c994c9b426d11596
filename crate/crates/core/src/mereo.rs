//! Discrete contact structures with actual points, their clans, and the
//! clan-mediated approximations.
//!
//! Regions are the subsets of `X`, so region `r` is the subset with mask `r`.
//! A family of regions is itself stored as a [`Subset`] over the `2^n` region
//! indices, which caps `X` at six points.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::approx::{cogranular, ApproxResult, Membership, Op};
use crate::error::{Error, Result};
use crate::universe::{BinaryRelation, EmptyMeet, Subset, Universe};

pub const MAX_MEREO_UNIVERSE: usize = 6;
pub const MAX_CLAN_ULTRAFILTERS: usize = 12;

fn region(r: usize) -> Subset {
    Subset::from_bits(r as u64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscreteSpace {
    universe: Universe,
    actual: Subset,
}

impl DiscreteSpace {
    /// Requires `∅ ⊂ X_a ⊂ X`.
    pub fn new(universe: Universe, actual: Subset) -> Result<Self> {
        let n = universe.len();
        if n > MAX_MEREO_UNIVERSE {
            return Err(Error::GuardExceeded {
                what: "discrete space",
                limit: MAX_MEREO_UNIVERSE,
                found: n,
            });
        }
        if actual.is_empty() || !actual.is_proper_subset(universe.full()) {
            return Err(Error::InvalidSpace(
                "actual points must form a nonempty proper subset".into(),
            ));
        }
        Ok(DiscreteSpace { universe, actual })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn actual(&self) -> Subset {
        self.actual
    }

    pub fn size(&self) -> usize {
        self.universe.len()
    }
}

/// Power-set algebra with contact `C`, actual contact `Cᵃ` and actual existence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactStructure {
    n: usize,
    contact: Vec<Subset>,
    actual_contact: Vec<Subset>,
    existing: Subset,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AxiomBlock {
    C,
    Ca,
    #[serde(rename = "AE")]
    Ae,
}

impl fmt::Display for AxiomBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AxiomBlock::C => "C",
            AxiomBlock::Ca => "Ca",
            AxiomBlock::Ae => "AE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub id: &'static str,
    /// Regions of the first failing instance.
    pub witness: Option<Vec<Subset>>,
}

impl AxiomResult {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub block: AxiomBlock,
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(AxiomResult::holds)
    }
}

fn first_failure<const K: usize>(m: usize, law: impl Fn([usize; K]) -> bool) -> Option<Vec<Subset>> {
    let total = m.pow(K as u32);
    (0..total).find_map(|mut code| {
        let mut idx = [0usize; K];
        for slot in idx.iter_mut() {
            *slot = code % m;
            code /= m;
        }
        (!law(idx)).then(|| idx.iter().map(|&r| region(r)).collect())
    })
}

impl ContactStructure {
    /// `C H F` iff `H ∩ F ≠ ∅`; `Cᵃ H F` iff `H ∩ F ∩ X_a ≠ ∅`; `AE(H)` iff `H ∩ X_a ≠ ∅`.
    pub fn discrete(space: &DiscreteSpace) -> Self {
        let n = space.size();
        let xa = space.actual();
        let m = 1usize << n;
        let rows = |pred: &dyn Fn(Subset, Subset) -> bool| -> Vec<Subset> {
            (0..m)
                .map(|h| (0..m).filter(|&f| pred(region(h), region(f))).collect())
                .collect()
        };
        ContactStructure {
            n,
            contact: rows(&|h, f| h.intersects(f)),
            actual_contact: rows(&|h, f| (h & f).intersects(xa)),
            existing: (0..m).filter(|&h| region(h).intersects(xa)).collect(),
        }
    }

    /// Arbitrary relations over the regions of an `n`-point universe.
    pub fn from_parts(n: usize, contact: Vec<Subset>, actual_contact: Vec<Subset>, existing: Subset) -> Result<Self> {
        if n > MAX_MEREO_UNIVERSE {
            return Err(Error::GuardExceeded {
                what: "contact structure",
                limit: MAX_MEREO_UNIVERSE,
                found: n,
            });
        }
        let m = 1usize << n;
        if contact.len() != m || actual_contact.len() != m {
            return Err(Error::SizeMismatch {
                expected: m,
                found: contact.len().min(actual_contact.len()),
            });
        }
        Ok(ContactStructure {
            n,
            contact,
            actual_contact,
            existing,
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn region_count(&self) -> usize {
        1 << self.n
    }

    pub fn c(&self, h: usize, f: usize) -> bool {
        self.contact[h].contains(f)
    }

    pub fn ca(&self, h: usize, f: usize) -> bool {
        self.actual_contact[h].contains(f)
    }

    pub fn ae(&self, h: usize) -> bool {
        self.existing.contains(h)
    }

    /// `Cᵃ` restricted to singletons, as a relation on points.
    pub fn point_actual_relation(&self) -> BinaryRelation {
        BinaryRelation::from_fn(self.n, |x, y| self.ca(1 << x, 1 << y))
    }

    pub fn check_axioms(&self, block: AxiomBlock, ca1_literal: bool) -> AxiomReport {
        let m = self.region_count();
        let top = m - 1;
        let le = |a: usize, b: usize| a & !b == 0;
        let results = match block {
            AxiomBlock::C => {
                let c = |a, b| self.c(a, b);
                vec![
                    ("C1", first_failure(m, |[a, b]| !c(a, b) || (a != 0 && b != 0))),
                    ("C2", first_failure(m, |[a, b]| !c(a, b) || c(b, a))),
                    ("C3", first_failure(m, |[a, b, e]| !(c(a, b) && le(b, e)) || c(a, e))),
                    ("C4", first_failure(m, |[a, b, e]| !c(a, b | e) || c(a, b) || c(a, e))),
                    ("C5", first_failure(m, |[a, b]| a & b == 0 || c(a, b))),
                    ("C-join", first_failure(m, |[a, b, e]| c(a | b, e) == (c(a, e) || c(b, e)))),
                    (
                        "C-monotone",
                        first_failure(m, |[a, b, u, v]| !(c(a, b) && le(a, u) && le(b, v)) || c(u, v)),
                    ),
                ]
            }
            AxiomBlock::Ca => {
                let ca = |a, b| self.ca(a, b);
                let ca1 = if ca1_literal {
                    ca(top, top) && ca(0, 0)
                } else {
                    ca(top, top) && !ca(0, 0)
                };
                vec![
                    ("Ca1", (!ca1).then(|| vec![region(top), region(0)])),
                    ("Ca2", first_failure(m, |[x, b]| !ca(x, b) || ca(b, x))),
                    ("Ca3", first_failure(m, |[x, b]| !ca(x, b) || ca(x, x))),
                    ("Ca4", first_failure(m, |[x, b, z]| !(ca(x, b) && le(b, z)) || ca(x, z))),
                    ("Ca5", first_failure(m, |[x, b, e]| !ca(x, b | e) || ca(x, b) || ca(x, e))),
                    ("Ca-AE", first_failure(m, |[x]| ca(x, x) == self.ae(x))),
                ]
            }
            AxiomBlock::Ae => {
                let ae = |a| self.ae(a);
                vec![
                    ("AE1", (!(ae(top) && !ae(0))).then(|| vec![region(top), region(0)])),
                    ("AE2", first_failure(m, |[a, b]| !(ae(a) && le(a, b)) || ae(b))),
                    ("AE3", first_failure(m, |[a, b]| !ae(a | b) || ae(a) || ae(b))),
                ]
            }
        };
        AxiomReport {
            block,
            results: results
                .into_iter()
                .map(|(id, witness)| AxiomResult { id, witness })
                .collect(),
        }
    }

    /// One principal ultrafilter `{H : x ∈ H}` per point.
    pub fn ultrafilters(&self) -> Vec<Subset> {
        (0..self.n)
            .map(|x| (0..self.region_count()).filter(|&h| region(h).contains(x)).collect())
            .collect()
    }

    pub fn canonical_relations(&self) -> CanonicalRelations {
        let ufs = self.ultrafilters();
        let k = ufs.len();
        let related = |rel: &dyn Fn(usize, usize) -> bool, u: Subset, v: Subset| {
            u.iter().all(|h| v.iter().all(|f| rel(h, f)))
        };
        let r = BinaryRelation::from_fn(k, |i, j| related(&|h, f| self.c(h, f), ufs[i], ufs[j]));
        let r_a = BinaryRelation::from_fn(k, |i, j| related(&|h, f| self.ca(h, f), ufs[i], ufs[j]));
        let reflexive = (0..k).filter(|&i| r_a.contains(i, i)).collect();
        CanonicalRelations {
            ultrafilters: ufs,
            r,
            r_a,
            reflexive,
        }
    }

    pub fn is_grill(&self, fam: Subset) -> bool {
        let m = self.region_count();
        let top = m - 1;
        fam.contains(top)
            && !fam.contains(0)
            && fam
                .iter()
                .all(|a| (0..m).filter(|&b| a & !b == 0).all(|b| fam.contains(b)))
            && (0..m).all(|a| {
                (0..m).all(|b| !fam.contains(a | b) || fam.contains(a) || fam.contains(b))
            })
    }

    pub fn is_clan(&self, fam: Subset, kind: ClanKind) -> bool {
        self.is_grill(fam)
            && fam.iter().all(|a| {
                fam.iter().all(|b| match kind {
                    ClanKind::Clan => self.c(a, b),
                    ClanKind::Actual => self.ca(a, b),
                })
            })
    }

    /// Unions of nonempty sets of mutually related ultrafilters that pass the
    /// grill and pairwise-contact checks, canonically ordered.
    pub fn clans(&self, kind: ClanKind) -> Result<Vec<Subset>> {
        let canon = self.canonical_relations();
        let k = canon.ultrafilters.len();
        if k > MAX_CLAN_ULTRAFILTERS {
            return Err(Error::GuardExceeded {
                what: "clan enumeration ultrafilters",
                limit: MAX_CLAN_ULTRAFILTERS,
                found: k,
            });
        }
        let rel = match kind {
            ClanKind::Clan => &canon.r,
            ClanKind::Actual => &canon.r_a,
        };
        let mut out: Vec<Subset> = Subset::full(k)
            .subsets()
            .filter(|s| !s.is_empty())
            .filter(|s| s.iter().all(|i| s.iter().all(|j| rel.contains(i, j))))
            .map(|s| {
                s.iter()
                    .fold(Subset::EMPTY, |acc, i| acc | canon.ultrafilters[i])
            })
            .filter(|&fam| self.is_clan(fam, kind))
            .collect();
        out.sort();
        out.dedup();
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClanKind {
    Clan,
    Actual,
}

/// Canonical relations on ultrafilter indices (index `i` is the ultrafilter at point `i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalRelations {
    pub ultrafilters: Vec<Subset>,
    pub r: BinaryRelation,
    pub r_a: BinaryRelation,
    pub reflexive: Subset,
}

impl CanonicalRelations {
    /// `R U V` iff `Rᵃ U V` or `U = V`.
    pub fn first_bullet_holds(&self) -> bool {
        let k = self.ultrafilters.len();
        (0..k).all(|i| (0..k).all(|j| self.r.contains(i, j) == (self.r_a.contains(i, j) || i == j)))
    }
}

/// Whether a family of regions is an ultrafilter of the power-set algebra.
pub fn is_ultrafilter(n: usize, fam: Subset) -> bool {
    let m = 1usize << n;
    let top = m - 1;
    !fam.contains(0)
        && fam.contains(top)
        && fam.iter().all(|a| fam.iter().all(|b| fam.contains(a & b)))
        && fam
            .iter()
            .all(|a| (0..m).filter(|&b| a & !b == 0).all(|b| fam.contains(b)))
        && (0..m).all(|a| fam.contains(a) || fam.contains(top & !a))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Scheme {
    #[default]
    #[serde(rename = "CG")]
    Cg,
    #[serde(rename = "G")]
    G,
    Clan,
}

impl Scheme {
    pub fn op(self) -> Op {
        match self {
            Scheme::Cg => Op::MereoCg,
            Scheme::G => Op::MereoG,
            Scheme::Clan => Op::MereoClan,
        }
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Scheme> {
        match s {
            "CG" | "cg" => Ok(Scheme::Cg),
            "G" | "g" => Ok(Scheme::G),
            "Clan" | "clan" => Ok(Scheme::Clan),
            _ => Err(Error::Unknown {
                kind: "scheme",
                name: s.to_string(),
            }),
        }
    }
}

/// Source of the granule map `γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GammaChoice {
    /// `<x>` of the given relation, or of point-level `Cᵃ` when none is given.
    Min(Option<BinaryRelation>),
    /// `[x]_{Cᵃ} = {b : Cᵃ b x}` at the point level.
    Ca,
    Explicit(Vec<Subset>),
}

pub fn gamma_for(space: &DiscreteSpace, structure: &ContactStructure, choice: &GammaChoice) -> Result<Vec<Subset>> {
    let n = space.size();
    match choice {
        GammaChoice::Min(rel) => {
            let rel = rel.clone().unwrap_or_else(|| structure.point_actual_relation());
            if rel.size() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    found: rel.size(),
                });
            }
            Ok(rel.min_neighborhoods(EmptyMeet::Empty))
        }
        GammaChoice::Ca => {
            let rel = structure.point_actual_relation();
            Ok((0..n).map(|x| rel.successor_neighborhood(x)).collect())
        }
        GammaChoice::Explicit(g) => {
            if g.len() != n {
                return Err(Error::NotTotal(format!("γ has {} entries for {} points", g.len(), n)));
            }
            if let Some(x) = (0..n).find(|&x| !g[x].is_subset(space.actual())) {
                return Err(Error::GammaRange {
                    point: space.universe().label(x).to_string(),
                });
            }
            Ok(g.clone())
        }
    }
}

/// CG, G and Clan approximations for a fixed actual clan `K`.
///
/// Point tests record membership in the complement of `K` (an ideal of regions),
/// so `In` means "not in `K`". Under the Clan scheme `H` ranges over all regions.
pub fn mereo_approx(
    structure: &ContactStructure,
    gamma: &[Subset],
    clan: Subset,
    set: Subset,
    scheme: Scheme,
) -> Result<ApproxResult> {
    if !structure.is_clan(clan, ClanKind::Actual) {
        return Err(Error::NotActualClan(format!("{clan:?}")));
    }
    let n = structure.size();
    if gamma.len() != n {
        return Err(Error::NotTotal(format!("γ has {} entries for {} points", gamma.len(), n)));
    }
    let full = Subset::full(n);
    if !set.is_subset(full) {
        return Err(Error::RankOutOfRange {
            rank: 63 - set.bits().leading_zeros() as usize,
            size: n,
        });
    }
    let in_k = |s: Subset| clan.contains(s.bits() as usize);
    let mut res = cogranular(scheme.op(), gamma, set, |s| Membership::from_bool(!in_k(s)));
    match scheme {
        Scheme::Cg => {}
        Scheme::G => {
            let lower_union = gamma
                .iter()
                .filter(|&&g| !in_k(g - set))
                .fold(Subset::EMPTY, |a, &g| a | g);
            let upper_union = gamma
                .iter()
                .filter(|&&g| in_k(g & set))
                .fold(Subset::EMPTY, |a, &g| a | g);
            res.lower = lower_union & set;
            res.upper = upper_union | set;
        }
        Scheme::Clan => {
            let regions = (0..structure.region_count()).map(region);
            let lower_union = regions
                .clone()
                .filter(|&h| !in_k(h - set))
                .fold(Subset::EMPTY, |a, h| a | h);
            let upper_union = regions
                .filter(|&h| in_k(h) && h.intersects(set))
                .fold(Subset::EMPTY, |a, h| a | h);
            res.lower = lower_union & set;
            res.upper = upper_union | set;
            res.provenance.clear();
        }
    }
    Ok(res)
}

/// Outcome of one law of the inverse-problem list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawOutcome {
    pub law: &'static str,
    pub holds: bool,
    /// Masks of the first failing arguments.
    pub witness: Option<Vec<u64>>,
}

/// The five laws listed for candidate `(l, u)` maps, given extensionally by mask.
pub fn inverse_problem_laws(n: usize, lower: &[Subset], upper: &[Subset]) -> Result<Vec<LawOutcome>> {
    let m = 1usize << n;
    if lower.len() != m || upper.len() != m {
        return Err(Error::NotTotal(format!(
            "maps must have {m} entries, found {} and {}",
            lower.len(),
            upper.len()
        )));
    }
    let full = Subset::full(n);
    let all = || (0..m).map(|z| (z, Subset::from_bits(z as u64)));
    let first = |f: &dyn Fn(usize, Subset) -> bool| all().find(|&(z, s)| !f(z, s)).map(|(z, _)| vec![z as u64]);
    let idx = |s: Subset| s.bits() as usize;
    let outcomes = vec![
        ("inclusion", first(&|z, s| lower[z].is_subset(s) && s.is_subset(upper[z]))),
        (
            "bounds",
            (!(upper[0].is_empty() && lower[0].is_empty() && lower[m - 1] == full && upper[m - 1] == full))
                .then(|| vec![0, (m - 1) as u64]),
        ),
        (
            "monotonicity",
            all().find_map(|(z, s)| {
                all()
                    .find(|&(v, t)| {
                        s.is_proper_subset(t)
                            && !(lower[z].is_subset(lower[v]) && upper[z].is_subset(upper[v]))
                    })
                    .map(|(v, _)| vec![z as u64, v as u64])
            }),
        ),
        ("lower-idempotence", first(&|z, _| lower[idx(lower[z])] == lower[z])),
        ("upper-expansion", first(&|z, _| upper[z].is_subset(upper[idx(upper[z])]))),
    ];
    Ok(outcomes
        .into_iter()
        .map(|(law, witness)| LawOutcome {
            law,
            holds: witness.is_none(),
            witness,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(n: usize, actual: &[usize]) -> DiscreteSpace {
        DiscreteSpace::new(Universe::numbered(n).unwrap(), Subset::from_ranks(actual.iter().copied())).unwrap()
    }

    #[test]
    fn space_invariants() {
        let u = Universe::numbered(2).unwrap();
        assert!(DiscreteSpace::new(u.clone(), Subset::EMPTY).is_err());
        assert!(DiscreteSpace::new(u.clone(), u.full()).is_err());
        assert!(DiscreteSpace::new(Universe::numbered(7).unwrap(), Subset::singleton(0)).is_err());
    }

    #[test]
    fn actual_existence_examples() {
        let cs = ContactStructure::discrete(&space(2, &[0]));
        assert!(!cs.ae(0b10));
        assert!(cs.ae(0b11));
        assert!(cs.ae(3) && !cs.ae(0));
        assert!(!cs.ca(0, 0));
    }

    #[test]
    fn discrete_structure_passes_all_blocks() {
        for n in 1..=4 {
            for xa in 1..(1u64 << n) - 1 {
                let cs = ContactStructure::discrete(&space(n, &Subset::from_bits(xa).iter().collect::<Vec<_>>()));
                for block in [AxiomBlock::C, AxiomBlock::Ca, AxiomBlock::Ae] {
                    let rep = cs.check_axioms(block, false);
                    assert!(rep.passed(), "n={n} xa={xa} {block}: {:?}", rep.results);
                }
                let lit = cs.check_axioms(AxiomBlock::Ca, true);
                assert!(!lit.results[0].holds());
            }
        }
    }

    #[test]
    fn empty_contact_fails_c5() {
        let m = 8;
        let cs = ContactStructure::from_parts(3, vec![Subset::EMPTY; m], vec![Subset::EMPTY; m], Subset::EMPTY).unwrap();
        let rep = cs.check_axioms(AxiomBlock::C, false);
        let c5 = rep.results.iter().find(|r| r.id == "C5").unwrap();
        let w = c5.witness.as_ref().unwrap();
        assert!(w[0].intersects(w[1]));
        assert!(rep.results.iter().filter(|r| r.id != "C5").all(AxiomResult::holds));
    }

    #[test]
    fn ultrafilters_match_brute_force_at_two_points() {
        let cs = ContactStructure::discrete(&space(2, &[1]));
        let brute: Vec<Subset> = (0..1u64 << 4)
            .map(Subset::from_bits)
            .filter(|&f| is_ultrafilter(2, f))
            .collect();
        let mut ufs = cs.ultrafilters();
        ufs.sort();
        assert_eq!(brute, ufs);
        let cs3 = ContactStructure::discrete(&space(3, &[0]));
        let ufs = cs3.ultrafilters();
        assert_eq!(ufs.len(), 3);
        assert!(ufs.iter().all(|u| u.len() == 4 && !u.contains(0)));
    }

    #[test]
    fn canonical_relation_examples() {
        let cs = ContactStructure::discrete(&space(2, &[0]));
        let canon = cs.canonical_relations();
        assert_eq!(canon.reflexive, Subset::singleton(0));
        assert!(canon.r.is_reflexive() && canon.r.is_symmetric());
        assert!(canon.r_a.is_quasi_reflexive() && canon.r_a.is_symmetric());
        assert!(canon.r_a.pair_count() > 0);
        assert!(canon.first_bullet_holds());
    }

    #[test]
    fn clans_match_blind_oracle_at_two_points() {
        for xa in [&[0][..], &[1]] {
            let cs = ContactStructure::discrete(&space(2, xa));
            for kind in [ClanKind::Clan, ClanKind::Actual] {
                let brute: Vec<Subset> = (0..1u64 << 4)
                    .map(Subset::from_bits)
                    .filter(|&f| cs.is_clan(f, kind))
                    .collect();
                let mut brute = brute;
                brute.sort();
                assert_eq!(cs.clans(kind).unwrap(), brute);
            }
            let actual = cs.clans(ClanKind::Actual).unwrap();
            let clans = cs.clans(ClanKind::Clan).unwrap();
            assert!(actual.iter().all(|k| clans.contains(k)));
        }
    }

    #[test]
    fn grills_are_unions_of_ultrafilters() {
        let cs = ContactStructure::discrete(&space(3, &[0, 2]));
        let ufs = cs.ultrafilters();
        for f in 0..1u64 << 8 {
            let fam = Subset::from_bits(f);
            if cs.is_grill(fam) {
                let union = ufs.iter().filter(|u| u.is_subset(fam)).fold(Subset::EMPTY, |a, &u| a | u);
                assert_eq!(union, fam);
            }
        }
    }

    #[test]
    fn gamma_choices() {
        let sp = space(3, &[0, 1]);
        let cs = ContactStructure::discrete(&sp);
        let min = gamma_for(&sp, &cs, &GammaChoice::Min(None)).unwrap();
        assert_eq!(min, vec![Subset::singleton(0), Subset::singleton(1), Subset::EMPTY]);
        assert_eq!(gamma_for(&sp, &cs, &GammaChoice::Ca).unwrap(), min);
        let bad = GammaChoice::Explicit(vec![Subset::singleton(2), Subset::EMPTY, Subset::EMPTY]);
        assert!(matches!(gamma_for(&sp, &cs, &bad), Err(Error::GammaRange { .. })));
    }

    #[test]
    fn cg_boundary_examples() {
        let sp = space(3, &[0, 1]);
        let cs = ContactStructure::discrete(&sp);
        let clans = cs.clans(ClanKind::Actual).unwrap();
        assert_eq!(clans.len(), 2);
        for choice in [GammaChoice::Min(None), GammaChoice::Ca] {
            let g = gamma_for(&sp, &cs, &choice).unwrap();
            for &k in &clans {
                let r = mereo_approx(&cs, &g, k, Subset::EMPTY, Scheme::Cg).unwrap();
                assert_eq!((r.lower, r.upper), (Subset::EMPTY, Subset::EMPTY));
                let r = mereo_approx(&cs, &g, k, Subset::full(3), Scheme::Cg).unwrap();
                assert_eq!(r.lower, Subset::full(3));
            }
        }
        assert!(matches!(
            mereo_approx(&cs, &[Subset::EMPTY; 3], Subset::EMPTY, Subset::EMPTY, Scheme::Cg),
            Err(Error::NotActualClan(_))
        ));
    }

    #[test]
    fn clan_scheme_over_regions() {
        let sp = space(3, &[0]);
        let cs = ContactStructure::discrete(&sp);
        let k = cs.clans(ClanKind::Actual).unwrap()[0];
        let g = gamma_for(&sp, &cs, &GammaChoice::Min(None)).unwrap();
        let a = Subset::from_ranks([1]);
        let r = mereo_approx(&cs, &g, k, a, Scheme::Clan).unwrap();
        assert_eq!((r.lower, r.upper), (a, Subset::full(3)));
        assert!(r.provenance.is_empty());
    }

    #[test]
    fn inverse_problem_examples() {
        let n = 2;
        let id: Vec<Subset> = (0..4).map(Subset::from_bits).collect();
        assert!(inverse_problem_laws(n, &id, &id).unwrap().iter().all(|l| l.holds));
        let top = vec![Subset::full(2); 4];
        let rep = inverse_problem_laws(n, &id, &top).unwrap();
        let failing: Vec<&str> = rep.iter().filter(|l| !l.holds).map(|l| l.law).collect();
        assert_eq!(failing, vec!["bounds"]);
        assert!(inverse_problem_laws(n, &id[..3], &id).is_err());

        let sp = space(2, &[0]);
        let cs = ContactStructure::discrete(&sp);
        let g = gamma_for(&sp, &cs, &GammaChoice::Min(None)).unwrap();
        let k = cs.clans(ClanKind::Actual).unwrap()[0];
        let (mut lo, mut up) = (Vec::new(), Vec::new());
        for a in 0..4 {
            let r = mereo_approx(&cs, &g, k, Subset::from_bits(a), Scheme::Cg).unwrap();
            lo.push(r.lower);
            up.push(r.upper);
        }
        assert!(inverse_problem_laws(n, &lo, &up).unwrap().iter().all(|l| l.holds));
    }
}
