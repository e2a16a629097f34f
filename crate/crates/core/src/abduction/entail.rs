use super::explanation::{Explanation, Observation};
use super::framework::{AbductiveFramework, Scope};
use super::search::{explain, ExplainOptions};
use super::AbductionError;
use crate::syntax::{Literal, TruthValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reasoning {
    Skeptical,
    Credulous,
}

/// Value of the conjunction `query` across the minimal explanations of `o`.
///
/// Skeptical: ⊤ if every explanation makes it ⊤, ⊥ if every one makes it ⊥.
/// Credulous: ⊤ if some explanation makes it ⊤, else ⊥ if some makes it ⊥.
/// Otherwise unknown.
pub fn entails(
    fw: &AbductiveFramework,
    o: &Observation,
    query: &[Literal],
    mode: Reasoning,
    opts: ExplainOptions,
) -> Result<TruthValue, AbductionError> {
    let empty = Explanation::empty();
    let outcome = explain(fw, o, &empty, opts)?;
    if outcome.explanations.is_empty() {
        return Err(AbductionError::NoExplanation(o.to_string()));
    }
    let values: Vec<TruthValue> =
        outcome.explanations.iter().map(|e| fw.model(e, Scope::Context(&empty)).conjunction(query)).collect();
    let all = |v: TruthValue| values.iter().all(|x| *x == v);
    let any = |v: TruthValue| values.contains(&v);
    Ok(match mode {
        Reasoning::Skeptical if all(TruthValue::True) => TruthValue::True,
        Reasoning::Skeptical if all(TruthValue::False) => TruthValue::False,
        Reasoning::Credulous if any(TruthValue::True) => TruthValue::True,
        Reasoning::Credulous if any(TruthValue::False) => TruthValue::False,
        _ => TruthValue::Unknown,
    })
}
