//! Weak completion semantics: completion, the Φ operator, least models and
//! integrity-constraint checking.

mod completion;
mod constraints;
mod fixpoint;
mod indexed;

pub use completion::{weak_complete, Equivalence, WeakCompletion};
pub use constraints::{satisfies, satisfies_ics, violated};
pub use fixpoint::{least_model, phi_iterates, phi_step};
pub use indexed::{IndexedBody, IndexedProgram};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SemanticsError {
    #[error("internal error: Φ did not reach a fixpoint within {0} applications")]
    NoConvergence(usize),
}
