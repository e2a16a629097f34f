use super::{
    matched_by, primary, producer_completion, ClassificationReport, ClassifyOptions, Grounding, Label,
    Relation, Witness,
};
use crate::abduction::{explain, AbductionError, AbductiveFramework, Explanation, Observation};

/// A qualifying `e2` consumes at least one producer of `e1` and adds no
/// ordinary facts outside `e1`.
pub(super) fn qualifying(e1: &Explanation, e2: &Explanation) -> Option<Vec<Grounding>> {
    let g = matched_by(e2, e1);
    (!g.is_empty() && e2.non_inspection().iter().all(|f| e1.contains(f))).then_some(g)
}

fn is_strict(e1: &Explanation, e2: &Explanation, g: &[Grounding]) -> bool {
    let completion = producer_completion(e2, g);
    e1.facts().all(|f| completion.contains(f))
}

pub fn classify_side_effect(
    fw: &AbductiveFramework,
    o1: &Observation,
    o2: &Observation,
    opts: ClassifyOptions,
) -> Result<ClassificationReport, AbductionError> {
    let e1s = primary(fw, o1, opts.explain)?;
    let mut pairs = Vec::new();
    let mut every_e1 = true;
    let mut every_e1_strict = true;
    for e1 in &e1s {
        let mut any = false;
        let mut any_strict = false;
        for e2 in explain(fw, o2, e1, opts.explain)?.explanations {
            if let Some(g) = qualifying(e1, &e2) {
                let strict = is_strict(e1, &e2, &g);
                any = true;
                any_strict |= strict;
                pairs.push((e1.clone(), e2, g, strict));
            }
        }
        every_e1 &= any;
        every_e1_strict &= any_strict;
    }

    let mut witnesses = Vec::new();
    let mut push = |label: Label, strict_only: bool| {
        for (e1, e2, g, strict) in &pairs {
            if !strict_only || *strict {
                witnesses.push(Witness { label, e1: e1.clone(), e2: e2.clone(), grounding: g.clone() });
            }
        }
    };
    let possible = !pairs.is_empty();
    let strict_possible = pairs.iter().any(|p| p.3) && (!opts.literal_strict_possible || every_e1);
    if possible {
        push(Label::Possible, false);
    }
    if strict_possible {
        push(Label::StrictPossible, true);
    }
    if every_e1 {
        push(Label::Necessary, false);
    }
    if every_e1 && every_e1_strict {
        push(Label::StrictNecessary, true);
    }
    Ok(ClassificationReport::new(Relation::SideEffect, witnesses, &[]))
}
