//! Law-verification harness: suites of asserted and searched laws run over
//! exhaustive or seeded instance streams, with a byte-stable JSON report.

pub mod generators;
pub mod oracle;
mod suites;

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::reference::Deviation;
use crate::sigma::Directedness;

pub use oracle::{oracle_enumerate_downclosed, oracle_sigma_ideals, MAX_ORACLE_CARRIER};

/// Counterexamples kept per law.
pub const MAX_ARCHIVED_PER_LAW: usize = 3;

/// Asserted laws fail the run when violated; searched laws only archive witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LawStatus {
    Asserted,
    Searched,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Generator {
    Exhaustive,
    Seeded { seed: u64, count: usize },
}

impl Generator {
    fn name(self) -> &'static str {
        match self {
            Generator::Exhaustive => "exhaustive",
            Generator::Seeded { .. } => "seeded",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LawSpec {
    pub id: &'static str,
    pub status: LawStatus,
    pub clause: &'static str,
}

/// Which generators a suite accepts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Support {
    ExhaustiveOnly,
    SeededOnly,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawSuite {
    pub id: String,
    pub laws: Vec<LawSpec>,
    pub generator: Generator,
    pub mode: Directedness,
    pub allow_empty: bool,
}

impl LawSuite {
    /// Identifiers of the built-in suites.
    pub fn ids() -> &'static [&'static str] {
        suites::IDS
    }

    /// A built-in suite with its full law catalog and default conventions.
    pub fn named(id: &str, generator: Generator) -> Result<Self> {
        let laws = suites::catalog(id).ok_or_else(|| Error::Unknown {
            kind: "suite",
            name: id.to_string(),
        })?;
        Ok(LawSuite {
            id: id.to_string(),
            laws: laws.to_vec(),
            generator,
            mode: Directedness::default(),
            allow_empty: true,
        })
    }

    /// A suite with no laws; running it yields an empty report.
    pub fn empty(id: &str) -> Self {
        LawSuite {
            id: id.to_string(),
            laws: Vec::new(),
            generator: Generator::Exhaustive,
            mode: Directedness::default(),
            allow_empty: true,
        }
    }

    pub fn with_conventions(mut self, mode: Directedness, allow_empty: bool) -> Self {
        self.mode = mode;
        self.allow_empty = allow_empty;
        self
    }

    /// Keeps only the listed laws.
    pub fn restricted_to(mut self, ids: &[&str]) -> Result<Self> {
        if let Some(bad) = ids.iter().find(|id| !self.laws.iter().any(|l| l.id == **id)) {
            return Err(Error::Unknown {
                kind: "law",
                name: bad.to_string(),
            });
        }
        self.laws.retain(|l| ids.contains(&l.id));
        Ok(self)
    }

    pub fn support(id: &str) -> Option<Support> {
        suites::support(id)
    }

    /// Exhaustive when the suite only supports that, otherwise seeded with the
    /// suite's default count unless one is given.
    pub fn default_generator(id: &str, seed: u64, count: Option<usize>) -> Result<Generator> {
        match suites::support(id) {
            None => Err(Error::Unknown {
                kind: "suite",
                name: id.to_string(),
            }),
            Some(Support::ExhaustiveOnly) => Ok(Generator::Exhaustive),
            Some(_) => Ok(Generator::Seeded {
                seed,
                count: count.unwrap_or_else(|| suites::default_count(id)),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawTally {
    pub status: LawStatus,
    pub clause: &'static str,
    pub checked: u64,
    pub violations: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub law: String,
    pub detail: String,
    pub instance: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub generator: Generator,
    pub mode: Directedness,
    pub allow_empty: bool,
    pub instances: u64,
    pub passed: bool,
    pub laws: BTreeMap<String, LawTally>,
    pub counterexamples: Vec<Counterexample>,
    pub deviations: Vec<Deviation>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.passed
    }

    /// Asserted laws with at least one violation.
    pub fn failed_laws(&self) -> Vec<&str> {
        self.laws
            .iter()
            .filter(|(_, t)| t.status == LawStatus::Asserted && t.violations > 0)
            .map(|(k, _)| k.as_str())
            .collect()
    }

    pub fn tally(&self, law: &str) -> Option<&LawTally> {
        self.laws.get(law)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Collects law outcomes while a suite runs.
pub struct Recorder {
    tallies: BTreeMap<String, LawTally>,
    archived: BTreeMap<String, usize>,
    counterexamples: Vec<Counterexample>,
    deviations: Vec<Deviation>,
    notes: Vec<String>,
    instances: u64,
}

impl Recorder {
    fn new(laws: &[LawSpec]) -> Self {
        Recorder {
            tallies: laws
                .iter()
                .map(|l| {
                    (
                        l.id.to_string(),
                        LawTally {
                            status: l.status,
                            clause: l.clause,
                            checked: 0,
                            violations: 0,
                        },
                    )
                })
                .collect(),
            archived: BTreeMap::new(),
            counterexamples: Vec::new(),
            deviations: Vec::new(),
            notes: Vec::new(),
            instances: 0,
        }
    }

    pub fn instance(&mut self) {
        self.instances += 1;
    }

    /// Whether `law` is part of the run.
    pub fn wants(&self, law: &str) -> bool {
        self.tallies.contains_key(law)
    }

    /// Records one evaluation; `witness` is called only for archived failures.
    pub fn check(&mut self, law: &str, holds: bool, witness: impl FnOnce() -> (String, Value)) {
        let Some(t) = self.tallies.get_mut(law) else {
            return;
        };
        t.checked += 1;
        if holds {
            return;
        }
        t.violations += 1;
        let kept = self.archived.entry(law.to_string()).or_insert(0);
        if *kept < MAX_ARCHIVED_PER_LAW {
            *kept += 1;
            let (detail, instance) = witness();
            self.counterexamples.push(Counterexample {
                law: law.to_string(),
                detail,
                instance,
            });
        }
    }

    fn counterexample_count(&self) -> usize {
        self.counterexamples.len()
    }

    /// Prepends `prefix` to the details of counterexamples archived after `since`.
    fn prefix_details_since(&mut self, since: usize, prefix: &str) {
        if prefix.is_empty() {
            return;
        }
        for c in &mut self.counterexamples[since..] {
            c.detail.insert_str(0, prefix);
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn deviation(&mut self, d: Deviation) {
        if !self.deviations.contains(&d) {
            self.deviations.push(d);
        }
    }
}

/// Runs every law of `suite` over its generator.
pub fn run_suite(suite: &LawSuite) -> Result<VerificationReport> {
    let mut rec = Recorder::new(&suite.laws);
    if !suite.laws.is_empty() {
        let catalog = suites::catalog(&suite.id).ok_or_else(|| Error::Unknown {
            kind: "suite",
            name: suite.id.clone(),
        })?;
        if let Some(l) = suite.laws.iter().find(|l| !catalog.contains(l)) {
            return Err(Error::Unknown {
                kind: "law",
                name: format!("{} in suite {}", l.id, suite.id),
            });
        }
        let ok = matches!(
            (suites::support(&suite.id), suite.generator),
            (Some(Support::Both), _)
                | (Some(Support::ExhaustiveOnly), Generator::Exhaustive)
                | (Some(Support::SeededOnly), Generator::Seeded { .. })
        );
        if !ok {
            return Err(Error::UnsupportedGenerator {
                suite: suite.id.clone(),
                generator: suite.generator.name(),
            });
        }
        suites::run(suite, &mut rec)?;
        for (id, t) in &rec.tallies {
            if t.status == LawStatus::Searched && t.checked > 0 && t.violations == 0 {
                rec.notes.push(format!(
                    "searched law `{id}`: no counterexample in {} evaluations",
                    t.checked
                ));
            }
        }
    }
    let passed = rec
        .tallies
        .values()
        .all(|t| t.status == LawStatus::Searched || t.violations == 0);
    Ok(VerificationReport {
        suite: suite.id.clone(),
        generator: suite.generator,
        mode: suite.mode,
        allow_empty: suite.allow_empty,
        instances: rec.instances,
        passed,
        laws: rec.tallies,
        counterexamples: rec.counterexamples,
        deviations: rec.deviations,
        notes: rec.notes,
    })
}
