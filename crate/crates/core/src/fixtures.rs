//! The worked examples, embedded, with a runner that checks each against its
//! expected result.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use crate::abduction::{
    build_framework, entails, explain, AbductiveFramework, ExplainOptions, Explanation, Observation,
    Reasoning, Scope,
};
use crate::classify::{classify, ClassifyOptions, Relation};
use crate::frontend::{
    fact_names, parse_context, parse_literals, parse_observation, parse_program, subjects, to_json, ModelDoc,
    ReportDoc,
};
use crate::semantics::least_model;
use crate::syntax::{ground, TruthValue};

/// Embedded fixture files, keyed by path relative to the fixtures directory.
pub const EMBEDDED: [(&str, &str); 11] = [
    ("p_add.lp", include_str!("../fixtures/p_add.lp")),
    ("p_add_insp.lp", include_str!("../fixtures/p_add_insp.lp")),
    ("p_fire.lp", include_str!("../fixtures/p_fire.lp")),
    ("toy.lp", include_str!("../fixtures/toy.lp")),
    ("empty.lp", include_str!("../fixtures/empty.lp")),
    ("storm_lightning.ctx", include_str!("../fixtures/storm_lightning.ctx")),
    ("golden/side_effect.json", include_str!("../fixtures/golden/side_effect.json")),
    ("golden/contested.json", include_str!("../fixtures/golden/contested.json")),
    ("golden/relevant.json", include_str!("../fixtures/golden/relevant.json")),
    ("golden/joint.json", include_str!("../fixtures/golden/joint.json")),
    ("golden/smoke_after_storm.json", include_str!("../fixtures/golden/smoke_after_storm.json")),
];

/// The classification cases with checked-in golden reports:
/// (golden file, relation, O1, O2, expected labels).
pub const CLASSIFICATIONS: [(&str, Relation, &str, &str, &[&str]); 5] = [
    (
        "golden/side_effect.json",
        Relation::SideEffect,
        "storm, dry",
        "ffire",
        &["POSSIBLE", "STRICT_POSSIBLE"],
    ),
    (
        "golden/contested.json",
        Relation::Contested,
        "ffire",
        "rained",
        &["NECESSARILY_CONTESTED", "POSSIBLY_CONTESTED"],
    ),
    ("golden/relevant.json", Relation::Relevant, "storm", "ffire", &["POSSIBLE_RELEVANT"]),
    ("golden/joint.json", Relation::Joint, "smoke", "sirens", &["NECESSARILY_JOINT", "POSSIBLY_JOINT"]),
    ("golden/smoke_after_storm.json", Relation::SideEffect, "storm, dry", "smoke", &["NONE"]),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureSet {
    files: BTreeMap<String, String>,
}

impl FixtureSet {
    pub fn embedded() -> Self {
        FixtureSet { files: EMBEDDED.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect() }
    }

    /// Reads every fixture from `dir`, falling back to nothing: a missing
    /// file fails its rows.
    pub fn from_dir(dir: &Path) -> Self {
        FixtureSet {
            files: EMBEDDED
                .iter()
                .filter_map(|(k, _)| std::fs::read_to_string(dir.join(k)).ok().map(|v| (k.to_string(), v)))
                .collect(),
        }
    }

    pub fn get(&self, name: &str) -> Result<&str, String> {
        self.files.get(name).map(String::as_str).ok_or_else(|| format!("missing fixture {name}"))
    }

    pub fn framework(&self, name: &str, constants: &[&str]) -> Result<AbductiveFramework, String> {
        let parsed = parse_program(self.get(name)?).map_err(|e| format!("{name}:{e}"))?;
        let extra: BTreeSet<String> = constants.iter().map(|c| c.to_string()).collect();
        build_framework(&parsed.program, &parsed.ics, &extra, &BTreeSet::new()).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Row {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn row(name: &str, result: Result<String, String>) -> Row {
    match result {
        Ok(detail) => Row { name: name.to_string(), passed: true, detail },
        Err(detail) => Row { name: name.to_string(), passed: false, detail },
    }
}

fn expect<T: PartialEq + std::fmt::Debug>(got: T, want: T) -> Result<String, String> {
    if got == want {
        Ok(format!("{got:?}"))
    } else {
        Err(format!("got {got:?}, expected {want:?}"))
    }
}

fn obs(text: &str) -> Result<Observation, String> {
    parse_observation(text).map_err(|e| e.to_string())
}

fn explanations(fw: &AbductiveFramework, o: &str, ctx: &Explanation) -> Result<Vec<Vec<String>>, String> {
    let outcome = explain(fw, &obs(o)?, ctx, ExplainOptions::default()).map_err(|e| e.to_string())?;
    Ok(outcome.explanations.iter().map(fact_names).collect())
}

fn entail(fw: &AbductiveFramework, o: &str, q: &str, mode: Reasoning) -> Result<TruthValue, String> {
    let query = parse_literals(q).map_err(|e| e.to_string())?;
    entails(fw, &obs(o)?, &query, mode, ExplainOptions::default()).map_err(|e| e.to_string())
}

fn strings(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

/// Structured report for one classification case.
pub fn classification_json(
    set: &FixtureSet,
    relation: Relation,
    o1: &str,
    o2: &str,
) -> Result<String, String> {
    let fw = set.framework("p_fire.lp", &[])?;
    let report = classify(&fw, relation, &obs(o1)?, &obs(o2)?, ClassifyOptions::default())
        .map_err(|e| e.to_string())?;
    Ok(to_json(&ReportDoc::new(&report)))
}

pub fn run(set: &FixtureSet) -> Vec<Row> {
    let empty = Explanation::empty();
    let mut rows = Vec::new();

    rows.push(row(
        "p_add least model over {a}",
        (|| {
            let parsed = parse_program(set.get("p_add.lp")?).map_err(|e| e.to_string())?;
            let g = ground(&parsed.program, &BTreeSet::new()).map_err(|e| e.to_string())?;
            let m = least_model(&g).map_err(|e| e.to_string())?;
            let doc = ModelDoc::new(&m, &g.atoms());
            expect(
                (doc.true_atoms, doc.false_atoms),
                (strings(&["ab1(a)", "add(a)", "cig(a)", "inex(a)"]), strings(&["ab2(a)", "nadd(a)"])),
            )
        })(),
    ));

    rows.push(row(
        "p_add explains add(b) two ways",
        (|| {
            let fw = set.framework("p_add.lp", &["b"])?;
            expect(
                explanations(&fw, "add(b)", &empty)?,
                vec![strings(&["cig(b) = false"]), strings(&["cig(b) = true"])],
            )
        })(),
    ));

    rows.push(row(
        "p_add entailment of cig(b)",
        (|| {
            let fw = set.framework("p_add.lp", &["b"])?;
            expect(
                (
                    entail(&fw, "add(b)", "not cig(b)", Reasoning::Credulous)?,
                    entail(&fw, "add(b)", "cig(b)", Reasoning::Skeptical)?,
                ),
                (TruthValue::True, TruthValue::Unknown),
            )
        })(),
    ));

    rows.push(row(
        "p_add_insp explains add(b) one way",
        (|| {
            let fw = set.framework("p_add_insp.lp", &["b"])?;
            expect(explanations(&fw, "add(b)", &empty)?, vec![strings(&["cig(b) = false"])])
        })(),
    ));

    rows.push(row(
        "p_add_insp skeptical add(b), not cig(b)",
        (|| {
            let fw = set.framework("p_add_insp.lp", &["b"])?;
            expect(entail(&fw, "add(b)", "add(b), not cig(b)", Reasoning::Skeptical)?, TruthValue::True)
        })(),
    ));

    rows.push(row(
        "p_add_insp model signs for b",
        (|| {
            let fw = set.framework("p_add_insp.lp", &["b"])?;
            let e = parse_context("cig(b) = false.").map_err(|e| e.to_string())?;
            let m = fw.model(&e, Scope::Context(&empty));
            let doc = ModelDoc::new(&m, &subjects(&fw));
            let of_b = |v: &[String]| v.iter().filter(|s| s.contains("(b)")).cloned().collect::<Vec<_>>();
            expect(
                (of_b(&doc.true_atoms), of_b(&doc.false_atoms)),
                (
                    strings(&["add(b)"]),
                    strings(&["ab1(b)", "ab2(b)", "cig(b)", "inspect(cig(b))", "inex(b)", "nadd(b)"]),
                ),
            )
        })(),
    ));

    rows.push(row(
        "toy explains a two ways, b and c unknown",
        (|| {
            let fw = set.framework("toy.lp", &[])?;
            expect(
                (
                    explanations(&fw, "a", &empty)?,
                    entail(&fw, "a", "b", Reasoning::Skeptical)?,
                    entail(&fw, "a", "c", Reasoning::Skeptical)?,
                ),
                (
                    vec![strings(&["b = true"]), strings(&["c = true"])],
                    TruthValue::Unknown,
                    TruthValue::Unknown,
                ),
            )
        })(),
    ));

    rows.push(row(
        "empty program has an empty model",
        (|| {
            let parsed = parse_program(set.get("empty.lp")?).map_err(|e| e.to_string())?;
            let m = least_model(&parsed.program).map_err(|e| e.to_string())?;
            expect(ModelDoc::new(&m, &parsed.program.atoms()).text(), "⟨{}, {}, {}⟩".to_string())
        })(),
    ));

    rows.push(row(
        "p_fire explains storm, dry",
        (|| {
            let fw = set.framework("p_fire.lp", &[])?;
            expect(
                explanations(&fw, "storm, dry", &empty)?,
                vec![
                    strings(&["dry = true", "lightning = true"]),
                    strings(&["dry = true", "tempest = true"]),
                ],
            )
        })(),
    ));

    rows.push(row(
        "p_fire explains ffire after storm_lightning.ctx",
        (|| {
            let fw = set.framework("p_fire.lp", &[])?;
            let ctx = parse_context(set.get("storm_lightning.ctx")?).map_err(|e| e.to_string())?;
            let got = explanations(&fw, "ffire", &ctx)?;
            let want = strings(&["dry = true", "inspect(lightning) = true"]);
            if got.contains(&want) {
                Ok(format!("{got:?}"))
            } else {
                Err(format!("{want:?} missing from {got:?}"))
            }
        })(),
    ));

    for (file, relation, o1, o2, labels) in CLASSIFICATIONS {
        let name = format!("p_fire {relation} ({o1}; {o2})");
        rows.push(row(
            &name,
            (|| {
                let json = classification_json(set, relation, o1, o2)?;
                let doc: serde_json::Value = serde_json::from_str(&json).map_err(|e| e.to_string())?;
                expect(doc["labels"].clone(), serde_json::json!(labels))?;
                let golden = set.get(file)?;
                if json == golden {
                    Ok(format!("{labels:?}, matches {file}"))
                } else {
                    Err(format!("output differs from {file}"))
                }
            })(),
        ));
    }
    rows
}
