//! Text and structured (JSON) renderings of models, explanations and reports.

use std::collections::BTreeSet;
use std::fmt::Write;

use serde::Serialize;

use crate::abduction::{AbductiveFramework, ExplainOutcome, Explanation, Scope};
use crate::classify::{ClassificationReport, Grounding, Witness};
use crate::syntax::{Interpretation, Subject};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "structured" | "json" => Ok(Format::Structured),
            other => Err(format!("unknown format `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModelDoc {
    #[serde(rename = "true")]
    pub true_atoms: Vec<String>,
    #[serde(rename = "false")]
    pub false_atoms: Vec<String>,
    pub unknown: Vec<String>,
}

impl ModelDoc {
    /// Splits `base` (plus anything `interp` assigns) into the three values.
    pub fn new(interp: &Interpretation, base: &BTreeSet<Subject>) -> Self {
        let names = |set: &BTreeSet<Subject>| set.iter().map(ToString::to_string).collect();
        ModelDoc {
            true_atoms: names(interp.true_set()),
            false_atoms: names(interp.false_set()),
            unknown: names(&interp.unknown_in(base)),
        }
    }

    pub fn text(&self) -> String {
        format!(
            "⟨{{{}}}, {{{}}}, {{{}}}⟩",
            self.true_atoms.join(", "),
            self.false_atoms.join(", "),
            self.unknown.join(", ")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExplanationDoc {
    pub facts: Vec<String>,
    pub model: ModelDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExplanationsDoc {
    pub explanations: Vec<ExplanationDoc>,
    pub already_entailed: bool,
}

impl ExplanationsDoc {
    pub fn new(fw: &AbductiveFramework, outcome: &ExplainOutcome, scope: Scope<'_>) -> Self {
        let base = subjects(fw);
        ExplanationsDoc {
            explanations: outcome
                .explanations
                .iter()
                .map(|e| ExplanationDoc {
                    facts: fact_names(e),
                    model: ModelDoc::new(&fw.model(e, scope), &base),
                })
                .collect(),
            already_entailed: outcome.already_entailed,
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        if self.explanations.is_empty() {
            out.push_str("no explanation\n");
        }
        for (i, e) in self.explanations.iter().enumerate() {
            writeln!(out, "E{} = {{{}}}", i + 1, e.facts.join(", ")).unwrap();
            writeln!(out, "  model {}", e.model.text()).unwrap();
        }
        if self.already_entailed {
            out.push_str("(already entailed by the program)\n");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroundingDoc {
    pub consumer: String,
    pub producer: String,
    pub forced: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessDoc {
    pub label: String,
    pub e1: Vec<String>,
    pub e2: Vec<String>,
    pub grounding: Vec<GroundingDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportDoc {
    pub relation: String,
    pub labels: Vec<String>,
    pub witnesses: Vec<WitnessDoc>,
}

impl ReportDoc {
    pub fn new(report: &ClassificationReport) -> Self {
        ReportDoc {
            relation: report.relation.to_string(),
            labels: report.label_names().into_iter().map(String::from).collect(),
            witnesses: report.witnesses.iter().map(witness_doc).collect(),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("{}: {}\n", self.relation, self.labels.join(", "));
        for w in &self.witnesses {
            writeln!(out, "  {}: E1 = {{{}}}, E2 = {{{}}}", w.label, w.e1.join(", "), w.e2.join(", "))
                .unwrap();
            for g in &w.grounding {
                let how = if g.forced { "forced by" } else { "consumes" };
                writeln!(out, "    {} {how} {}", g.consumer, g.producer).unwrap();
            }
        }
        out
    }
}

fn witness_doc(w: &Witness) -> WitnessDoc {
    WitnessDoc {
        label: w.label.to_string(),
        e1: fact_names(&w.e1),
        e2: fact_names(&w.e2),
        grounding: w.grounding.iter().map(grounding_doc).collect(),
    }
}

fn grounding_doc(g: &Grounding) -> GroundingDoc {
    GroundingDoc { consumer: g.consumer.to_string(), producer: g.producer.to_string(), forced: g.forced }
}

pub fn fact_names(e: &Explanation) -> Vec<String> {
    e.facts().map(ToString::to_string).collect()
}

/// Subjects reported in models: every indexed subject of the framework.
pub fn subjects(fw: &AbductiveFramework) -> BTreeSet<Subject> {
    fw.program().atoms().into_iter().chain(fw.pool().iter().cloned()).collect()
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}
