use super::{ClassificationReport, ClassifyOptions, Grounding, Label, Relation, Witness};
use crate::abduction::{explain_open, AbductionError, AbductiveFramework, Explanation, Observation};

/// Groundings of all pending consumers of `a` by producers of `b`, or `None`
/// if some pending consumer stays unmatched or there is none.
fn supported_by(a: &Explanation, b: &Explanation) -> Option<Vec<Grounding>> {
    let pending = a.pending_consumers();
    if pending.is_empty() {
        return None;
    }
    pending
        .into_iter()
        .map(|c| {
            let p = c.matching_producer()?;
            b.contains(&p).then(|| Grounding { consumer: c.clone(), producer: p, forced: false })
        })
        .collect()
}

/// Each observation's explanations wait on producers the other supplies.
pub fn classify_jointly_supported(
    fw: &AbductiveFramework,
    o1: &Observation,
    o2: &Observation,
    opts: ClassifyOptions,
) -> Result<ClassificationReport, AbductionError> {
    let e1s = explain_open(fw, o1, opts.explain)?.explanations;
    if e1s.is_empty() {
        return Err(AbductionError::NoPrimaryExplanation(o1.to_string()));
    }
    let e2s = explain_open(fw, o2, opts.explain)?.explanations;
    let mut pairs = Vec::new();
    for e1 in &e1s {
        for e2 in &e2s {
            if !e1.is_consistent_with(e2) {
                continue;
            }
            if let (Some(mut g), Some(g2)) = (supported_by(e1, e2), supported_by(e2, e1)) {
                g.extend(g2);
                pairs.push((e1.clone(), e2.clone(), g));
            }
        }
    }
    let necessary = !e2s.is_empty()
        && e1s.iter().all(|e1| pairs.iter().any(|(a, _, _)| a == e1))
        && e2s.iter().all(|e2| pairs.iter().any(|(_, b, _)| b == e2));

    let labels: &[Label] = match (pairs.is_empty(), necessary) {
        (true, _) => &[],
        (false, false) => &[Label::PossiblyJoint],
        (false, true) => &[Label::NecessarilyJoint, Label::PossiblyJoint],
    };
    let mut witnesses = Vec::new();
    for &label in labels {
        for (e1, e2, g) in &pairs {
            witnesses.push(Witness { label, e1: e1.clone(), e2: e2.clone(), grounding: g.clone() });
        }
    }
    Ok(ClassificationReport::new(Relation::Joint, witnesses, &[]))
}
