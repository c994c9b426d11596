//! Built-in reference instance and its recorded reference values.
//!
//! Where a recorded reference value disagrees with what the definitions compute,
//! operations attach a [`Deviation`] instead of silently reproducing either side.

use serde::Serialize;

use crate::universe::{BinaryRelation, Subset, Universe};

/// A disagreement between a computed value and a recorded reference value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Deviation {
    pub id: &'static str,
    pub quantity: String,
    pub computed: String,
    pub reference: String,
    pub note: &'static str,
}

/// The six-point example: carrier, relation, granulation and test set.
#[derive(Clone, Debug)]
pub struct ReferenceInstance {
    pub universe: Universe,
    pub relation: BinaryRelation,
    pub gamma: Vec<Subset>,
    pub set: Subset,
}

pub const S6_LABELS: [&str; 6] = ["a", "b", "c", "e", "f", "g"];

pub const S6_PAIRS: [(&str, &str); 8] = [
    ("a", "c"),
    ("a", "e"),
    ("b", "c"),
    ("b", "e"),
    ("c", "c"),
    ("c", "b"),
    ("e", "a"),
    ("f", "f"),
];

pub const S6_GAMMA: [(&str, &[&str]); 6] = [
    ("a", &["b"]),
    ("b", &["g"]),
    ("c", &["c", "a"]),
    ("e", &["e"]),
    ("f", &["f"]),
    ("g", &["g", "b", "c"]),
];

pub fn s6_instance() -> ReferenceInstance {
    let universe = Universe::new(S6_LABELS).expect("static labels");
    let el = |l: &str| universe.element(l).expect("static label");
    let relation = BinaryRelation::from_pairs(6, S6_PAIRS.iter().map(|&(a, b)| (el(a), el(b))))
        .expect("static pairs");
    let gamma = S6_GAMMA
        .iter()
        .map(|(_, g)| universe.subset(g.iter()).expect("static granule"))
        .collect();
    let set = universe.subset(["a", "b"]).expect("static set");
    ReferenceInstance {
        universe,
        relation,
        gamma,
        set,
    }
}

/// True when `(universe, relation)` is the six-point reference structure up to label identity.
pub fn is_s6(universe: &Universe, relation: &BinaryRelation) -> bool {
    let inst = s6_instance();
    universe.labels() == inst.universe.labels() && *relation == inst.relation
}

fn names(u: &Universe, sets: &[Subset]) -> String {
    let parts: Vec<String> = sets.iter().map(|&s| u.format(s)).collect();
    format!("[{}]", parts.join(", "))
}

/// Recorded nontrivial σ-ideals versus the enumerated family (weak mode).
pub fn ideals_deviation(universe: &Universe, relation: &BinaryRelation, family: &[Subset]) -> Option<Deviation> {
    if !is_s6(universe, relation) {
        return None;
    }
    let reference: Vec<Subset> = [&["a", "b", "c", "e"][..], &["a", "b", "c", "e", "f"]]
        .iter()
        .map(|l| universe.subset(l.iter()).expect("static"))
        .collect();
    let nontrivial: Vec<Subset> = family.iter().copied().filter(|s| !s.is_empty()).collect();
    if nontrivial == reference {
        return None;
    }
    Some(Deviation {
        id: "sigma-ideals-s6",
        quantity: "nontrivial σ-ideals".into(),
        computed: names(universe, &nontrivial),
        reference: names(universe, &reference),
        note: "the weak clause also admits {g}, {f, g} and {a, b, c, e, g}; the strict clause rejects {a, b, c, e} because U(a, e) is empty",
    })
}

/// Recorded lower approximation of `{a, b}` on the reference instance versus the computed one.
pub fn gosi_lower_deviation(
    universe: &Universe,
    relation: &BinaryRelation,
    gamma: &[Subset],
    set: Subset,
    lower: Subset,
) -> Option<Deviation> {
    let inst = s6_instance();
    if !is_s6(universe, relation) || gamma != inst.gamma.as_slice() || set != inst.set {
        return None;
    }
    let reference = universe.subset(["b"]).expect("static");
    (lower != reference).then(|| Deviation {
        id: "gosi-lower-s6",
        quantity: "lower approximation of {a, b}".into(),
        computed: universe.format(lower),
        reference: universe.format(reference),
        note: "γ(a) ∩ Aᶜ = ∅ is a σ-ideal when the empty ideal is admitted, so a enters the lower approximation",
    })
}

/// Recorded diagonal bounds `U(x, x)`, `L(x, x)` on the reference structure that
/// disagree with the relation.
pub fn neighborhood_deviations(universe: &Universe, relation: &BinaryRelation) -> Vec<Deviation> {
    if !is_s6(universe, relation) {
        return Vec::new();
    }
    let e = universe.element("e").expect("static");
    let computed = relation.upper_bounds(e, e);
    let reference = universe.subset(["c"]).expect("static");
    if computed == reference {
        return Vec::new();
    }
    vec![Deviation {
        id: "upper-bounds-e-s6",
        quantity: "U(e, e)".into(),
        computed: universe.format(computed),
        reference: universe.format(reference),
        note: "σ contains (e, a) and not (e, c); the recorded L(a, a) = {e} needs the same pair",
    }]
}
