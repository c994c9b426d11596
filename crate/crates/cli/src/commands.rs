use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};

use idealrough::approx::{
    approx_antichain, approx_gosi, approx_gosih, approx_strong, ApproxResult, Op, PointwiseSpace,
};
use idealrough::harness::{run_suite, Generator, LawStatus, LawSuite, VerificationReport};
use idealrough::instance::Instance;
use idealrough::mereo::{gamma_for, mereo_approx, AxiomBlock, ClanKind, ContactStructure, DiscreteSpace, GammaChoice, Scheme};
use idealrough::reference::{ideals_deviation, neighborhood_deviations};
use idealrough::{Error, LatticeIdeal, Result, SigmaStructure, Subset, SubsetFamily, Universe};

use crate::{GammaArg, Global, Output};

fn load(path: &Path) -> Result<Instance> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::MissingInput(format!("cannot read {}: {e}", path.display())))?;
    Instance::parse(&text)
}

fn json_only(json: Value) -> Output {
    Output {
        json,
        text: None,
        laws_hold: true,
    }
}

fn structure(g: &Global, inst: &Instance) -> Result<SigmaStructure> {
    Ok(SigmaStructure::new(inst.universe.clone(), inst.relation()?.clone())?
        .with_mode(g.directedness())
        .with_allow_empty(!g.no_empty))
}

/// Left-aligned columns; widths count characters, not bytes.
fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let mut line = String::new();
        for (c, cell) in r.iter().enumerate() {
            line.push_str(cell);
            if c + 1 < r.len() {
                line.push_str(&" ".repeat(widths[c] - cell.chars().count() + 2));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn inspect(g: &Global, path: &Path, as_json: bool) -> Result<Output> {
    let inst = load(path)?;
    let u = &inst.universe;
    let rel = inst.relation()?;
    let n = u.len();
    let meet = g.meet();
    let props = rel.properties(meet);
    let deviations = neighborhood_deviations(u, rel);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (x + 1..n).map(move |z| (x, z))).collect();
    let json = json!({
        "universe": u.labels(),
        "properties": props,
        "empty_meet": meet,
        "bounds": pairs.iter().map(|&(x, z)| json!({
            "pair": [u.label(x), u.label(z)],
            "upper": u.names(rel.upper_bounds(x, z)),
            "lower": u.names(rel.lower_bounds(x, z)),
        })).collect::<Vec<_>>(),
        "neighborhoods": (0..n).map(|x| json!({
            "x": u.label(x),
            "upper": u.names(rel.upper_bounds(x, x)),
            "lower": u.names(rel.lower_bounds(x, x)),
            "min": u.names(rel.min_neighborhood_with(x, meet)),
        })).collect::<Vec<_>>(),
        "deviations": &deviations,
    });
    if as_json {
        return Ok(json_only(json));
    }
    let yn = |b: bool| if b { "yes" } else { "no" };
    let mut text = String::new();
    let _ = writeln!(
        text,
        "relation: reflexive {}, symmetric {}, transitive {}, quasi-order {}, antisymmetric {}, quasi-reflexive {}, weakly antisymmetric {}",
        yn(props.reflexive),
        yn(props.symmetric),
        yn(props.transitive),
        yn(props.quasi_order),
        yn(props.antisymmetric),
        yn(props.quasi_reflexive),
        yn(props.weakly_antisymmetric),
    );
    let _ = writeln!(text, "empty meet: {}", if meet == idealrough::EmptyMeet::Empty { "empty" } else { "universe" });
    text.push('\n');
    let mut rows = vec![vec!["pair".to_string(), "U(x,z)".into(), "L(x,z)".into()]];
    for &(x, z) in &pairs {
        rows.push(vec![
            format!("({}, {})", u.label(x), u.label(z)),
            u.format(rel.upper_bounds(x, z)),
            u.format(rel.lower_bounds(x, z)),
        ]);
    }
    text.push_str(&table(&rows));
    text.push('\n');
    let mut rows = vec![vec!["x".to_string(), "U(x,x)".into(), "L(x,x)".into(), "<x>".into()]];
    for x in 0..n {
        rows.push(vec![
            u.label(x).to_string(),
            u.format(rel.upper_bounds(x, x)),
            u.format(rel.lower_bounds(x, x)),
            u.format(rel.min_neighborhood_with(x, meet)),
        ]);
    }
    text.push_str(&table(&rows));
    for d in &deviations {
        let _ = writeln!(text, "\ndeviation {}: {} computed {}, recorded {}", d.id, d.quantity, d.computed, d.reference);
    }
    Ok(Output {
        json,
        text: Some(text),
        laws_hold: true,
    })
}

pub fn ideals(g: &Global, path: &Path) -> Result<Output> {
    let inst = load(path)?;
    let st = structure(g, &inst)?;
    let u = st.carrier();
    let fam = st.enumerate_ideals()?;
    let full = u.full();
    let audit: Vec<Value> = fam
        .iter()
        .map(|k| {
            json!({
                "set": u.names(k),
                "admitted": st.allow_empty() || !k.is_empty(),
                "proper": k != full,
                "down_closed": st.is_down_closed(k),
                "u_directed": st.is_u_directed(k),
                "convex": st.is_convex(k),
            })
        })
        .collect();
    let deviations: Vec<_> = ideals_deviation(u, st.sigma(), fam.members()).into_iter().collect();
    Ok(json_only(json!({
        "mode": st.mode(),
        "allow_empty": st.allow_empty(),
        "ideals": fam.iter().map(|k| u.names(k)).collect::<Vec<_>>(),
        "audit": audit,
        "deviations": deviations,
    })))
}

pub struct ApproxArgs<'a> {
    pub op: &'a str,
    pub set: &'a str,
    pub ideal: Option<&'a str>,
    pub antichain: Option<&'a str>,
    pub algebra: Option<&'a str>,
}

fn required<'a>(value: Option<&'a str>, flag: &str, op: Op) -> Result<&'a str> {
    value.ok_or_else(|| Error::MissingInput(format!("--{flag} is required for operator {op}")))
}

fn lattice_ideal(inst: &Instance, ambient: SubsetFamily, name: &str) -> Result<LatticeIdeal> {
    let n = inst.universe.len();
    LatticeIdeal::new(ambient, SubsetFamily::new(n, inst.family(name)?.iter().copied())?)
}

pub fn approx(g: &Global, path: &Path, args: &ApproxArgs<'_>) -> Result<Output> {
    let inst = load(path)?;
    let op: Op = args.op.parse()?;
    let u = &inst.universe;
    let n = u.len();
    let set = inst.set(args.set)?;
    let res: ApproxResult = match op {
        Op::Kappa | Op::Iad | Op::IadPrime | Op::Iasd => {
            let space = PointwiseSpace::new(inst.relation()?.clone())?;
            let ring = match args.algebra {
                Some(name) => SubsetFamily::new(n, inst.family(name)?.iter().copied())?,
                None => SubsetFamily::power_set(n)?,
            };
            let ideal = lattice_ideal(&inst, ring.clone(), required(args.ideal, "ideal", op)?)?;
            match op {
                Op::Kappa => space.kappa(&ideal, set)?,
                Op::Iad => space.iad(&ring, &ideal, set)?,
                Op::IadPrime => space.iad_prime(&ring, &ideal, set)?,
                _ => space.iasd(&ring, &ideal, set)?,
            }
        }
        Op::Gosi => approx_gosi(&structure(g, &inst)?, inst.granulation()?, set)?,
        Op::Strong => approx_strong(&structure(g, &inst)?, inst.granulation()?, set)?,
        Op::Antichain => {
            let st = structure(g, &inst)?;
            let fam = st.enumerate_ideals()?;
            let chain = inst.family(required(args.antichain, "antichain", op)?)?;
            approx_antichain(&st, &fam, inst.granulation()?, chain, set)?
        }
        Op::Gosih => {
            let rel = inst
                .powerset_relation
                .clone()
                .ok_or_else(|| Error::MissingInput("powerset_relation".into()))?;
            let st = SigmaStructure::new(u.power_set()?, rel)?
                .with_mode(g.directedness())
                .with_allow_empty(!g.no_empty);
            let fixed: Subset = inst
                .family(required(args.ideal, "ideal", op)?)?
                .iter()
                .map(|s| s.bits() as usize)
                .collect();
            approx_gosih(&st, inst.granulation()?, fixed, set)?
        }
        Op::MereoCg | Op::MereoG | Op::MereoClan => {
            return Err(Error::Unknown {
                kind: "operator for approx (use the mereo command)",
                name: op.to_string(),
            })
        }
    };
    let mut json = res.to_json(u);
    json["conventions"] = json!({"mode": g.directedness(), "allow_empty": !g.no_empty});
    Ok(json_only(json))
}

pub struct MereoArgs<'a> {
    pub actual_points: Option<&'a str>,
    pub scheme: &'a str,
    pub gamma: GammaArg,
    pub set: Option<&'a str>,
    pub clan: Option<&'a str>,
}

fn region_names(u: &Universe, family: Subset) -> Vec<Vec<String>> {
    family.iter().map(|h| u.names(Subset::from_bits(h as u64))).collect()
}

pub fn mereo(g: &Global, path: &Path, args: &MereoArgs<'_>) -> Result<Output> {
    let inst = load(path)?;
    let u = &inst.universe;
    let scheme: Scheme = args.scheme.parse()?;
    let xa = match args.actual_points {
        Some(list) => inst.set(list)?,
        None => inst
            .actual_points
            .ok_or_else(|| Error::MissingInput("actual_points".into()))?,
    };
    let space = DiscreteSpace::new(u.clone(), xa)?;
    let cs = ContactStructure::discrete(&space);
    let choice = match args.gamma {
        GammaArg::Min => GammaChoice::Min(inst.relation.clone()),
        GammaArg::Ca => GammaChoice::Ca,
        GammaArg::File => GammaChoice::Explicit(inst.granulation()?.granules().to_vec()),
    };
    let gamma = gamma_for(&space, &cs, &choice)?;

    let mut all_pass = true;
    let axioms: Vec<Value> = [AxiomBlock::C, AxiomBlock::Ca, AxiomBlock::Ae]
        .into_iter()
        .map(|block| {
            let rep = cs.check_axioms(block, g.ca1_literal);
            all_pass &= rep.passed();
            let failed: Vec<Value> = rep
                .results
                .iter()
                .filter(|r| !r.holds())
                .map(|r| {
                    json!({
                        "id": r.id,
                        "witness": r.witness.as_ref().map(|w| w.iter().map(|&s| u.names(s)).collect::<Vec<_>>()),
                    })
                })
                .collect();
            json!({"block": block, "passed": rep.passed(), "failed": failed})
        })
        .collect();

    let clans: Vec<Subset> = match args.clan {
        Some(name) => vec![inst.family(name)?.iter().map(|r| r.bits() as usize).collect()],
        None => cs.clans(ClanKind::Actual)?,
    };
    let mut results = Vec::new();
    if let Some(set) = args.set {
        let set = inst.set(set)?;
        for &k in &clans {
            let res = mereo_approx(&cs, &gamma, k, set, scheme)?;
            results.push(json!({"clan": region_names(u, k), "approximation": res.to_json(u)}));
        }
    }
    Ok(Output {
        json: json!({
            "actual_points": u.names(xa),
            "scheme": scheme,
            "gamma": (0..u.len()).map(|x| json!({"x": u.label(x), "granule": u.names(gamma[x])})).collect::<Vec<_>>(),
            "ca1_literal": g.ca1_literal,
            "axioms": axioms,
            "actual_clans": clans.iter().map(|&k| region_names(u, k)).collect::<Vec<_>>(),
            "results": results,
        }),
        text: None,
        laws_hold: all_pass,
    })
}

fn summary(r: &VerificationReport) -> String {
    let mut rows = Vec::new();
    for (id, t) in &r.laws {
        let verdict = match (t.status, t.violations) {
            (LawStatus::Asserted, 0) => "PASS",
            (LawStatus::Asserted, _) => "FAIL",
            (LawStatus::Searched, 0) => "none",
            (LawStatus::Searched, _) => "seen",
        };
        rows.push(vec![
            verdict.to_string(),
            id.clone(),
            format!("{}/{}", t.violations, t.checked),
        ]);
    }
    let mut text = format!(
        "suite {} ({}, mode {}, allow_empty {}): {} instances, {}\n",
        r.suite,
        match r.generator {
            Generator::Exhaustive => "exhaustive".to_string(),
            Generator::Seeded { seed, count } => format!("seed {seed}, count {count}"),
        },
        r.mode,
        r.allow_empty,
        r.instances,
        if r.passed() { "passed" } else { "FAILED" }
    );
    for line in table(&rows).lines() {
        let _ = writeln!(text, "  {line}");
    }
    for d in &r.deviations {
        let _ = writeln!(text, "  deviation {}: computed {}, recorded {}", d.id, d.computed, d.reference);
    }
    for c in &r.counterexamples {
        let _ = writeln!(text, "  counterexample {}: {}", c.law, c.detail);
    }
    text
}

pub fn verify(g: &Global, suite: &str, exhaustive: bool, count: Option<usize>, laws: &[String]) -> Result<Output> {
    let ids: Vec<&str> = if suite == "all" {
        if exhaustive {
            return Err(Error::UnsupportedGenerator {
                suite: "all".into(),
                generator: "exhaustive",
            });
        }
        LawSuite::ids().to_vec()
    } else {
        vec![suite]
    };
    let mut reports = Vec::new();
    for id in ids {
        let generator = if exhaustive {
            Generator::Exhaustive
        } else {
            LawSuite::default_generator(id, g.seed, count)?
        };
        let mut s = LawSuite::named(id, generator)?.with_conventions(g.directedness(), !g.no_empty);
        if !laws.is_empty() {
            let ids: Vec<&str> = laws.iter().map(String::as_str).collect();
            s = s.restricted_to(&ids)?;
        }
        reports.push(run_suite(&s)?);
    }
    let laws_hold = reports.iter().all(VerificationReport::passed);
    let text: String = reports.iter().map(summary).collect();
    let json = if reports.len() == 1 {
        serde_json::to_value(&reports[0])
    } else {
        serde_json::to_value(&reports)
    }
    .map_err(|e| Error::Internal(e.to_string()))?;
    Ok(Output {
        json,
        text: Some(text),
        laws_hold,
    })
}
