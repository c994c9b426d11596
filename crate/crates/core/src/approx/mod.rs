//! Approximation operators.
//!
//! Every operator here is co-granular: a point's membership is decided by a
//! test on `γ(x) ∖ A` (lower) or `γ(x) ∩ A` (upper) against some family. The
//! shared engine is [`cogranular`]; the submodules supply the granules and
//! the membership test for each operator.

pub mod cogranular;
pub mod pointwise;
pub mod rough;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::reference::Deviation;
use crate::universe::{Subset, Universe};

pub use cogranular::{
    antichain_split, approx_antichain, approx_gosi, approx_gosi_with_family, approx_gosih,
    approx_strong, gosih_hypotheses, GosihHypotheses,
};
pub use pointwise::{definite_sets_topology, Neighborhood, PointwiseSpace, TopologyReport};
pub use rough::{rough_compare, RoughOrder};

/// Operator tag carried by every result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Op {
    Kappa,
    Iad,
    IadPrime,
    Iasd,
    Gosi,
    Gosih,
    Strong,
    Antichain,
    MereoCg,
    MereoG,
    MereoClan,
}

impl Op {
    pub const ALL: [Op; 11] = [
        Op::Kappa,
        Op::Iad,
        Op::IadPrime,
        Op::Iasd,
        Op::Gosi,
        Op::Gosih,
        Op::Strong,
        Op::Antichain,
        Op::MereoCg,
        Op::MereoG,
        Op::MereoClan,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Op::Kappa => "kappa",
            Op::Iad => "iad",
            Op::IadPrime => "iad_prime",
            Op::Iasd => "iasd",
            Op::Gosi => "gosi",
            Op::Gosih => "gosih",
            Op::Strong => "strong",
            Op::Antichain => "antichain",
            Op::MereoCg => "mereo_cg",
            Op::MereoG => "mereo_g",
            Op::MereoClan => "mereo_clan",
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Op {
    type Err = Error;

    fn from_str(s: &str) -> Result<Op> {
        Op::ALL
            .into_iter()
            .find(|op| op.as_str() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "operator",
                name: s.to_string(),
            })
    }
}

/// A total map from points to granules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Granulation {
    gamma: Vec<Subset>,
}

impl Granulation {
    pub fn new(n: usize, gamma: Vec<Subset>) -> Result<Self> {
        if gamma.len() != n {
            return Err(Error::NotTotal(format!(
                "granulation has {} entries for {} points",
                gamma.len(),
                n
            )));
        }
        let full = Subset::full(n);
        if let Some(g) = gamma.iter().find(|g| !g.is_subset(full)) {
            return Err(Error::InvalidFamily(format!(
                "granule {g:?} exceeds a universe of size {n}"
            )));
        }
        Ok(Granulation { gamma })
    }

    pub fn size(&self) -> usize {
        self.gamma.len()
    }

    pub fn get(&self, x: usize) -> Subset {
        self.gamma[x]
    }

    pub fn granules(&self) -> &[Subset] {
        &self.gamma
    }

    /// `⋃ γ(x) = S`.
    pub fn covers(&self) -> bool {
        self.gamma.iter().fold(Subset::EMPTY, |a, &g| a | g) == Subset::full(self.size())
    }

    /// `a ∈ γ(a)` for every point.
    pub fn is_reflexive(&self) -> bool {
        self.gamma.iter().enumerate().all(|(x, g)| g.contains(x))
    }

    /// Every member of `granules` is the image of some point.
    pub fn is_surjective_onto(&self, granules: &[Subset]) -> bool {
        granules.iter().all(|g| self.gamma.contains(g))
    }

    pub fn flags(&self) -> GranulationFlags {
        GranulationFlags {
            covers: self.covers(),
            reflexive: self.is_reflexive(),
            surjective: true,
        }
    }
}

/// Surjectivity holds by construction when the granule set is the image of `γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GranulationFlags {
    pub covers: bool,
    pub reflexive: bool,
    pub surjective: bool,
}

/// Outcome of a membership test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Membership {
    In,
    Out,
    /// Outside the ambient family; treated as not in the ideal.
    OutsideAmbient,
}

impl Membership {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Membership::In
        } else {
            Membership::Out
        }
    }

    pub fn is_in(self) -> bool {
        self == Membership::In
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Test {
    pub tested: Subset,
    pub verdict: Membership,
}

/// How a single point was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PointRecord {
    pub point: usize,
    pub granule: Subset,
    /// Present only for points of the input set.
    pub lower: Option<Test>,
    pub upper: Test,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxResult {
    pub op: Op,
    pub set: Subset,
    pub lower: Subset,
    pub upper: Subset,
    pub provenance: Vec<PointRecord>,
    pub deviations: Vec<Deviation>,
}

impl ApproxResult {
    pub fn to_json(&self, u: &Universe) -> Value {
        let test = |t: &Test| {
            json!({
                "tested": u.names(t.tested),
                "verdict": t.verdict,
            })
        };
        let provenance: Vec<Value> = self
            .provenance
            .iter()
            .map(|r| {
                json!({
                    "point": u.label(r.point),
                    "granule": u.names(r.granule),
                    "lower_test": r.lower.as_ref().map(test),
                    "upper_test": test(&r.upper),
                })
            })
            .collect();
        json!({
            "op": self.op,
            "set": u.names(self.set),
            "lower": u.names(self.lower),
            "upper": u.names(self.upper),
            "provenance": provenance,
            "deviations": self.deviations,
        })
    }
}

/// Shared co-granular engine.
///
/// `lower = {x ∈ A : test(γ(x) ∖ A) = In}`,
/// `upper = {x : test(γ(x) ∩ A) ≠ In} ∪ A`.
pub fn cogranular(
    op: Op,
    gamma: &[Subset],
    set: Subset,
    test: impl Fn(Subset) -> Membership,
) -> ApproxResult {
    cogranular_split(op, gamma, set, &test, &test)
}

/// [`cogranular`] with separate tests for the lower and the upper side.
pub fn cogranular_split(
    op: Op,
    gamma: &[Subset],
    set: Subset,
    lower_test: &dyn Fn(Subset) -> Membership,
    upper_test: &dyn Fn(Subset) -> Membership,
) -> ApproxResult {
    let mut lower = Subset::EMPTY;
    let mut upper = set;
    let mut provenance = Vec::with_capacity(gamma.len());
    for (x, &g) in gamma.iter().enumerate() {
        let lo = set.contains(x).then(|| {
            let tested = g - set;
            Test {
                tested,
                verdict: lower_test(tested),
            }
        });
        if lo.is_some_and(|t| t.verdict.is_in()) {
            lower = lower.with(x);
        }
        let tested = g & set;
        let up = Test {
            tested,
            verdict: upper_test(tested),
        };
        if !up.verdict.is_in() {
            upper = upper.with(x);
        }
        provenance.push(PointRecord {
            point: x,
            granule: g,
            lower: lo,
            upper: up,
        });
    }
    ApproxResult {
        op,
        set,
        lower,
        upper,
        provenance,
        deviations: Vec::new(),
    }
}

/// Whether `target` is a union of granules.
pub fn union_representable(granules: &[Subset], target: Subset) -> bool {
    granules
        .iter()
        .filter(|g| g.is_subset(target))
        .fold(Subset::EMPTY, |a, &g| a | g)
        == target
}

/// Whether `target` is a Boolean combination (∪, ∩, complement in `S`) of granules:
/// equivalently, a union of the atoms of the partition the granules induce.
pub fn boolean_term_representable(n: usize, granules: &[Subset], target: Subset) -> bool {
    let signature = |x: usize| -> Vec<bool> { granules.iter().map(|g| g.contains(x)).collect() };
    (0..n).all(|x| {
        (0..n)
            .filter(|&y| signature(y) == signature(x))
            .all(|y| target.contains(y) == target.contains(x))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference;

    #[test]
    fn op_tags_round_trip() {
        for op in Op::ALL {
            assert_eq!(op.as_str().parse::<Op>().unwrap(), op);
            assert_eq!(serde_json::to_value(op).unwrap(), op.as_str());
        }
        assert!("nope".parse::<Op>().is_err());
    }

    #[test]
    fn granulation_flags() {
        let inst = reference::s6_instance();
        let g = Granulation::new(6, inst.gamma.clone()).unwrap();
        assert!(g.covers());
        assert!(!g.is_reflexive());
        assert!(Granulation::new(5, inst.gamma).is_err());
        let id = Granulation::new(3, (0..3).map(Subset::singleton).collect()).unwrap();
        assert!(id.covers() && id.is_reflexive());
    }

    #[test]
    fn engine_inclusion_holds_for_any_test() {
        let gamma = [Subset::from_ranks([0, 1]), Subset::from_ranks([2]), Subset::EMPTY];
        for a in 0..8u64 {
            let set = Subset::from_bits(a);
            for t in 0..2 {
                let r = cogranular(Op::Gosi, &gamma, set, |s| Membership::from_bool((s.bits() + t) % 2 == 0));
                assert!(r.lower.is_subset(set) && set.is_subset(r.upper));
                assert_eq!(r.provenance.len(), 3);
            }
        }
    }

    #[test]
    fn reference_lower_is_not_a_union_of_granules() {
        let inst = reference::s6_instance();
        let ab = inst.set;
        assert!(!union_representable(&inst.gamma, ab));
        assert!(boolean_term_representable(6, &inst.gamma, ab));
        let b = inst.universe.subset(["b"]).unwrap();
        assert!(union_representable(&inst.gamma, b));
    }
}
