//! Datalog syntax: terms, atoms with inspection wrappers, clauses, programs,
//! interpretations, grounding and three-valued formula evaluation.

mod atom;
mod formula;
mod ground;
mod interpretation;
mod negation;
mod program;
mod truth;

pub use atom::{Atom, InspectKind, Literal, Subject, Substitution, Term};
pub use formula::{evaluate, Formula};
pub use ground::{ground, ground_constraints, ground_with_pool};
pub use interpretation::Interpretation;
pub use negation::{encode_negative_head, primed_name, NegativeHead, NegativeHeadEncoder};
pub use program::{Body, Clause, IntegrityConstraint, Program};
pub use truth::TruthValue;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SyntaxError {
    #[error("no constants to ground over")]
    NoConstants,
    #[error("`{0}` is already an auxiliary negation predicate")]
    DoublePrime(String),
    #[error("`{0}` is both true and false")]
    Overlap(String),
}
