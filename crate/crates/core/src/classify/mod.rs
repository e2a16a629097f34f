//! Contextual relations between two observations: side-effects, contested
//! side-effects, relevant consequences and jointly supported consequences.

mod contested;
mod joint;
mod relevant;
mod side_effect;

use std::fmt;

use serde::Serialize;

pub use contested::{classify_contested, is_rebuttal};
pub use joint::classify_jointly_supported;
pub use relevant::classify_relevant_consequence;
pub use side_effect::classify_side_effect;

use crate::abduction::{
    explain, AbducibleFact, AbductionError, AbductiveFramework, ExplainOptions, Explanation, Observation,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    SideEffect,
    Contested,
    Relevant,
    Joint,
}

impl Relation {
    pub const ALL: [Relation; 4] =
        [Relation::SideEffect, Relation::Contested, Relation::Relevant, Relation::Joint];

    pub fn name(self) -> &'static str {
        match self {
            Relation::SideEffect => "side-effect",
            Relation::Contested => "contested",
            Relation::Relevant => "relevant",
            Relation::Joint => "joint",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Relation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Relation::ALL.into_iter().find(|r| r.name() == s).ok_or_else(|| format!("unknown relation `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Label {
    Necessary,
    StrictNecessary,
    Possible,
    StrictPossible,
    NecessarilyContested,
    PossiblyContested,
    Rebuttal,
    NecessaryRelevant,
    PossibleRelevant,
    NecessarilyJoint,
    PossiblyJoint,
}

impl Label {
    pub fn name(self) -> &'static str {
        match self {
            Label::Necessary => "NECESSARY",
            Label::StrictNecessary => "STRICT_NECESSARY",
            Label::Possible => "POSSIBLE",
            Label::StrictPossible => "STRICT_POSSIBLE",
            Label::NecessarilyContested => "NECESSARILY_CONTESTED",
            Label::PossiblyContested => "POSSIBLY_CONTESTED",
            Label::Rebuttal => "REBUTTAL",
            Label::NecessaryRelevant => "NECESSARY_RELEVANT",
            Label::PossibleRelevant => "POSSIBLE_RELEVANT",
            Label::NecessarilyJoint => "NECESSARILY_JOINT",
            Label::PossiblyJoint => "POSSIBLY_JOINT",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A consumer in one explanation and the producer from the other explanation
/// that grounds it. `forced` marks a false inspection fact grounded by a
/// producer contradicting the inspected polarity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Grounding {
    pub consumer: AbducibleFact,
    pub producer: AbducibleFact,
    pub forced: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub label: Label,
    pub e1: Explanation,
    pub e2: Explanation,
    pub grounding: Vec<Grounding>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub relation: Relation,
    /// Labels in declaration order; empty means no relation holds.
    pub labels: Vec<Label>,
    pub witnesses: Vec<Witness>,
}

impl ClassificationReport {
    pub fn has(&self, label: Label) -> bool {
        self.labels.contains(&label)
    }

    pub fn is_none(&self) -> bool {
        self.labels.is_empty()
    }

    /// Label names, with `NONE` standing for the empty set.
    pub fn label_names(&self) -> Vec<&'static str> {
        if self.labels.is_empty() {
            vec!["NONE"]
        } else {
            self.labels.iter().map(|l| l.name()).collect()
        }
    }

    fn new(relation: Relation, mut witnesses: Vec<Witness>, extra: &[Label]) -> Self {
        let mut labels: Vec<Label> = witnesses.iter().map(|w| w.label).chain(extra.iter().copied()).collect();
        labels.sort();
        labels.dedup();
        witnesses.sort_by(|a, b| (a.label, &a.e1, &a.e2).cmp(&(b.label, &b.e1, &b.e2)));
        ClassificationReport { relation, labels, witnesses }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassifyOptions {
    pub explain: ExplainOptions,
    /// Read strict possibility as requiring necessity too.
    pub literal_strict_possible: bool,
}

pub fn classify(
    fw: &AbductiveFramework,
    relation: Relation,
    o1: &Observation,
    o2: &Observation,
    opts: ClassifyOptions,
) -> Result<ClassificationReport, AbductionError> {
    match relation {
        Relation::SideEffect => classify_side_effect(fw, o1, o2, opts),
        Relation::Contested => classify_contested(fw, o1, o2, opts),
        Relation::Relevant => classify_relevant_consequence(fw, o1, o2, opts),
        Relation::Joint => classify_jointly_supported(fw, o1, o2, opts),
    }
}

/// Context-free explanations of the primary observation.
fn primary(
    fw: &AbductiveFramework,
    o1: &Observation,
    opts: ExplainOptions,
) -> Result<Vec<Explanation>, AbductionError> {
    let es = explain(fw, o1, &Explanation::empty(), opts)?.explanations;
    if es.is_empty() {
        return Err(AbductionError::NoPrimaryExplanation(o1.to_string()));
    }
    Ok(es)
}

/// Consumers of `e2` whose producer is missing from `e2` but present in `e1`.
pub fn matched_by(e2: &Explanation, e1: &Explanation) -> Vec<Grounding> {
    e2.consumers()
        .filter_map(|c| {
            let p = c.matching_producer()?;
            (!e2.contains(&p) && e1.contains(&p)).then(|| Grounding {
                consumer: c.clone(),
                producer: p,
                forced: false,
            })
        })
        .collect()
}

/// Producer completion: `e2` with each grounded consumer replaced by its
/// producer.
pub fn producer_completion(e2: &Explanation, grounding: &[Grounding]) -> Vec<AbducibleFact> {
    let consumers: Vec<&AbducibleFact> = grounding.iter().map(|g| &g.consumer).collect();
    let mut out: Vec<AbducibleFact> = e2.facts().filter(|f| !consumers.contains(f)).cloned().collect();
    out.extend(grounding.iter().map(|g| g.producer.clone()));
    out
}
