//! The Φ operator and least models of weakly completed programs.

use std::collections::{BTreeMap, BTreeSet};

use super::completion::weak_complete;
use super::indexed::IndexedProgram;
use super::SemanticsError;
use crate::syntax::{Body, Interpretation, Program, Subject, TruthValue};

/// Φ_P(I) = ⟨J⊤, J⊥⟩: a head is true if some body is true under `interp`,
/// false if it has clauses and all of their bodies are false.
pub fn phi_step(program: &Program, interp: &Interpretation) -> Interpretation {
    let mut bodies: BTreeMap<&Subject, Vec<TruthValue>> = BTreeMap::new();
    for c in program.clauses() {
        let v = match &c.body {
            Body::True => TruthValue::True,
            Body::False => TruthValue::False,
            Body::Conj(lits) => interp.conjunction(lits),
        };
        bodies.entry(&c.head).or_default().push(v);
    }
    let mut t = BTreeSet::new();
    let mut f = BTreeSet::new();
    for (head, vals) in bodies {
        if vals.iter().any(|v| v.is_true()) {
            t.insert(head.clone());
        } else if vals.iter().all(|v| v.is_false()) {
            f.insert(head.clone());
        }
    }
    Interpretation::new(t, f).expect("a head cannot be both true and false")
}

/// Iterates Φ from ⟨∅, ∅⟩ to its least fixpoint, the least model of the
/// weak completion.
pub fn least_model(program: &Program) -> Result<Interpretation, SemanticsError> {
    let indexed = IndexedProgram::new(program);
    let (values, _) = indexed.fixpoint(&[])?;
    let model = indexed.interpretation(&values);
    debug_assert!(weak_complete(program).is_model(&model), "least model must satisfy the weak completion");
    Ok(model)
}

/// The Φ iterates I₀ = ⟨∅,∅⟩, I₁, …, ending at the fixpoint (which appears
/// once). Uses the set-based `phi_step`, independent of `least_model`.
pub fn phi_iterates(program: &Program) -> Result<Vec<Interpretation>, SemanticsError> {
    let cap = program.atoms().len() + 1;
    let mut seq = vec![Interpretation::empty()];
    for _ in 0..cap {
        let next = phi_step(program, seq.last().unwrap());
        if &next == seq.last().unwrap() {
            return Ok(seq);
        }
        seq.push(next);
    }
    Err(SemanticsError::NoConvergence(cap))
}
