use super::{matched_by, primary, ClassificationReport, ClassifyOptions, Label, Relation, Witness};
use crate::abduction::{explain, AbductionError, AbductiveFramework, Explanation, Observation};

/// Every `e2` explaining `o2` in some context `e1` must have an `e1` whose
/// producers it consumes; `e2` may bring ordinary facts of its own.
pub fn classify_relevant_consequence(
    fw: &AbductiveFramework,
    o1: &Observation,
    o2: &Observation,
    opts: ClassifyOptions,
) -> Result<ClassificationReport, AbductionError> {
    let e1s = primary(fw, o1, opts.explain)?;
    let mut universe: Vec<Explanation> = Vec::new();
    let mut pairs = Vec::new();
    for e1 in &e1s {
        for e2 in explain(fw, o2, e1, opts.explain)?.explanations {
            let g = matched_by(&e2, e1);
            if !g.is_empty() && e1.is_consistent_with(&e2) {
                pairs.push((e1.clone(), e2.clone(), g));
            }
            if !universe.contains(&e2) {
                universe.push(e2);
            }
        }
    }
    let necessary = !universe.is_empty() && universe.iter().all(|e2| pairs.iter().any(|(_, w, _)| w == e2));

    let labels: &[Label] = match (pairs.is_empty(), necessary) {
        (true, _) => &[],
        (false, false) => &[Label::PossibleRelevant],
        (false, true) => &[Label::NecessaryRelevant, Label::PossibleRelevant],
    };
    let mut witnesses = Vec::new();
    for &label in labels {
        for (e1, e2, g) in &pairs {
            witnesses.push(Witness { label, e1: e1.clone(), e2: e2.clone(), grounding: g.clone() });
        }
    }
    Ok(ClassificationReport::new(Relation::Relevant, witnesses, &[]))
}
