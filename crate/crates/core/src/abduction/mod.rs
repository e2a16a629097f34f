//! Abduction under weak completion with inspection points.

mod entail;
mod explanation;
mod framework;
mod oracle;
mod search;

pub use entail::{entails, Reasoning};
pub use explanation::{AbducibleFact, Explanation, Observation};
pub use framework::{
    build_framework, check_explanation, validate_inspection, validate_inspection_open, AbductiveFramework,
    Scope,
};
pub use oracle::{oracle_explain, ORACLE_LIMIT};
pub use search::{
    dominates, explain, explain_open, sort_explanations, ExplainOptions, ExplainOutcome, Minimality,
};

use crate::semantics::SemanticsError;
use crate::syntax::SyntaxError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AbductionError {
    #[error("`{0}` is defined by the program and cannot be made non-abducible")]
    NonAbducibleDefined(String),
    #[error("`{0}` is not ground")]
    NotGround(String),
    #[error("`{0}` is assigned both true and false")]
    Inconsistent(String),
    #[error("no explanation for primary observation `{0}`")]
    NoPrimaryExplanation(String),
    #[error("observation `{0}` has no explanation")]
    NoExplanation(String),
    #[error("pool of {subjects} subjects exceeds the oracle limit of {limit}")]
    PoolTooLarge { subjects: usize, limit: usize },
    #[error("observation is empty")]
    EmptyObservation,
    #[error("inspection wrapper `{0}` cannot be observed")]
    InspectionInObservation(String),
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
}
