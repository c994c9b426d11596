//! JSON instance documents.
//!
//! ```json
//! {"version": "1",
//!  "universe": ["a", "b"],
//!  "relation": [["a", "b"]],
//!  "granulation": {"a": ["b"], "b": []},
//!  "sets": {"A": ["a"]}}
//! ```
//!
//! Optional keys: `relation`, `granulation`, `powerset_relation` (pairs of label
//! lists), `actual_points`, `sets`, `families` (named lists of label lists).
//! Unknown keys are rejected.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::approx::Granulation;
use crate::error::{Error, Result};
use crate::universe::{BinaryRelation, Subset, Universe};

pub const SCHEMA_VERSION: &str = "1";

type Labels = Vec<String>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub version: String,
    pub universe: Labels,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub granulation: Option<IndexMap<String, Labels>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub powerset_relation: Option<Vec<(Labels, Labels)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub actual_points: Option<Labels>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub sets: IndexMap<String, Labels>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub families: IndexMap<String, Vec<Labels>>,
}

/// A document with every label resolved against its universe.
#[derive(Clone, Debug)]
pub struct Instance {
    pub universe: Universe,
    pub relation: Option<BinaryRelation>,
    pub granulation: Option<Granulation>,
    pub powerset_relation: Option<BinaryRelation>,
    pub actual_points: Option<Subset>,
    pub sets: IndexMap<String, Subset>,
    pub families: IndexMap<String, Vec<Subset>>,
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema {
        path: path.into(),
        message: message.into(),
    }
}

impl InstanceDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            schema(
                format!("line {} column {}", e.line(), e.column()),
                e.to_string(),
            )
        })
    }

    /// Builds a document from resolved parts, labelling subsets by the universe.
    pub fn from_parts(
        universe: &Universe,
        relation: Option<&BinaryRelation>,
        gamma: Option<&[Subset]>,
        sets: &[(&str, Subset)],
    ) -> Self {
        InstanceDocument {
            version: SCHEMA_VERSION.to_string(),
            universe: universe.labels().to_vec(),
            relation: relation.map(|r| {
                r.pairs()
                    .map(|(a, b)| (universe.label(a).to_string(), universe.label(b).to_string()))
                    .collect()
            }),
            granulation: gamma.map(|g| {
                g.iter()
                    .enumerate()
                    .map(|(x, &s)| (universe.label(x).to_string(), universe.names(s)))
                    .collect()
            }),
            sets: sets
                .iter()
                .map(|&(k, s)| (k.to_string(), universe.names(s)))
                .collect(),
            ..Default::default()
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("document serializes")
    }

    pub fn resolve(&self) -> Result<Instance> {
        if self.version != SCHEMA_VERSION {
            return Err(schema(
                "version",
                format!("expected \"{SCHEMA_VERSION}\", found \"{}\"", self.version),
            ));
        }
        let universe = Universe::new(self.universe.iter().cloned()).map_err(|e| schema("universe", e.to_string()))?;
        let el = |path: String, l: &str| universe.element(l).map_err(|e| schema(path, e.to_string()));
        let subset = |path: String, labels: &[String]| -> Result<Subset> {
            labels
                .iter()
                .enumerate()
                .map(|(i, l)| el(format!("{path}[{i}]"), l))
                .collect()
        };
        let n = universe.len();

        let relation = match &self.relation {
            Some(pairs) => {
                let mut ranks = Vec::with_capacity(pairs.len());
                for (i, (a, b)) in pairs.iter().enumerate() {
                    ranks.push((el(format!("relation[{i}][0]"), a)?, el(format!("relation[{i}][1]"), b)?));
                }
                Some(BinaryRelation::from_pairs(n, ranks)?)
            }
            None => None,
        };

        let granulation = match &self.granulation {
            Some(map) => {
                let mut gamma = vec![None; n];
                for (k, v) in map {
                    let x = el(format!("granulation.{k}"), k)?;
                    gamma[x] = Some(subset(format!("granulation.{k}"), v)?);
                }
                if let Some(x) = gamma.iter().position(Option::is_none) {
                    return Err(schema(
                        "granulation",
                        format!("no granule for `{}`", universe.label(x)),
                    ));
                }
                Some(Granulation::new(n, gamma.into_iter().map(Option::unwrap).collect())?)
            }
            None => None,
        };

        let powerset_relation = match &self.powerset_relation {
            Some(pairs) => {
                let carrier = universe.power_set().map_err(|e| schema("powerset_relation", e.to_string()))?;
                let mut ranks = Vec::with_capacity(pairs.len());
                for (i, (a, b)) in pairs.iter().enumerate() {
                    let a = subset(format!("powerset_relation[{i}][0]"), a)?;
                    let b = subset(format!("powerset_relation[{i}][1]"), b)?;
                    ranks.push((a.bits() as usize, b.bits() as usize));
                }
                Some(BinaryRelation::from_pairs(carrier.len(), ranks)?)
            }
            None => None,
        };

        let actual_points = self
            .actual_points
            .as_ref()
            .map(|l| subset("actual_points".into(), l))
            .transpose()?;

        let mut sets = IndexMap::new();
        for (k, v) in &self.sets {
            sets.insert(k.clone(), subset(format!("sets.{k}"), v)?);
        }
        let mut families = IndexMap::new();
        for (k, fam) in &self.families {
            let members = fam
                .iter()
                .enumerate()
                .map(|(i, m)| subset(format!("families.{k}[{i}]"), m))
                .collect::<Result<Vec<_>>>()?;
            families.insert(k.clone(), members);
        }

        Ok(Instance {
            universe,
            relation,
            granulation,
            powerset_relation,
            actual_points,
            sets,
            families,
        })
    }
}

impl Instance {
    pub fn parse(text: &str) -> Result<Self> {
        InstanceDocument::parse(text)?.resolve()
    }

    pub fn relation(&self) -> Result<&BinaryRelation> {
        self.relation
            .as_ref()
            .ok_or_else(|| Error::MissingInput("relation".into()))
    }

    pub fn granulation(&self) -> Result<&Granulation> {
        self.granulation
            .as_ref()
            .ok_or_else(|| Error::MissingInput("granulation".into()))
    }

    /// A named set, or a brace-free comma list of labels such as `a,b`.
    pub fn set(&self, name: &str) -> Result<Subset> {
        if let Some(&s) = self.sets.get(name) {
            return Ok(s);
        }
        if name.is_empty() {
            return Ok(Subset::EMPTY);
        }
        self.universe
            .subset(name.split(',').map(str::trim))
            .map_err(|_| Error::MissingInput(format!("set `{name}`")))
    }

    pub fn family(&self, name: &str) -> Result<&[Subset]> {
        self.families
            .get(name)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::MissingInput(format!("family `{name}`")))
    }
}
