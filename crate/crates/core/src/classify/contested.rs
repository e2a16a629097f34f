use super::{
    matched_by, primary, ClassificationReport, ClassifyOptions, Grounding, Label, Relation, Witness,
};
use crate::abduction::{explain, AbductionError, AbductiveFramework, Explanation, Observation, Scope};
use crate::syntax::{Body, Literal, Subject};

/// Groundings of an explanation `e2` of `not_o2` in context `e1`: consumers
/// matched by `e1`, plus false inspection facts (explicit or from the
/// closure) whose inspected polarity is contradicted by a producer of `e1`.
fn groundings(
    fw: &AbductiveFramework,
    e1: &Explanation,
    e2: &Explanation,
    not_o2: &Observation,
) -> Vec<Grounding> {
    let mut g = matched_by(e2, e1);
    let falsified = e2.facts().filter(|f| f.is_inspection() && !f.value).cloned().chain(fw.closure_facts(
        e2,
        Scope::Context(e1),
        not_o2,
    ));
    for w in falsified {
        let p = w.opposing_producer().expect("inspection fact");
        if e1.contains(&p) && !e2.contains(&p) {
            g.push(Grounding { consumer: w, producer: p, forced: true });
        }
    }
    g.sort();
    g.dedup();
    g
}

/// `l2` is the negation of `l1`, directly or through a bridge clause
/// `p ← ¬p′` linking their atoms.
fn negates(fw: &AbductiveFramework, l1: &Literal, l2: &Literal) -> bool {
    if *l2 == l1.negated() {
        return true;
    }
    if !(l1.positive && l2.positive) {
        return false;
    }
    let bridge = |p: &Subject, q: &Subject| {
        fw.program()
            .clauses()
            .iter()
            .any(|c| &c.head == p && c.body == Body::Conj(vec![Literal::neg(q.clone())]))
    };
    bridge(&l1.subject, &l2.subject) || bridge(&l2.subject, &l1.subject)
}

/// `o2` is literal-wise the negation of `o1` and each of its atoms is the
/// head of some clause.
pub fn is_rebuttal(fw: &AbductiveFramework, o1: &Observation, o2: &Observation) -> bool {
    let all_defined = o2.literals().all(|l| fw.program().is_defined(&l.subject));
    all_defined
        && o2.literals().all(|l2| o1.literals().any(|l1| negates(fw, l1, l2)))
        && o1.literals().all(|l1| o2.literals().any(|l2| negates(fw, l1, l2)))
}

pub fn classify_contested(
    fw: &AbductiveFramework,
    o1: &Observation,
    o2: &Observation,
    opts: ClassifyOptions,
) -> Result<ClassificationReport, AbductionError> {
    let e1s = primary(fw, o1, opts.explain)?;
    let not_o2 = o2.negated();
    let mut pairs = Vec::new();
    let mut every_e1 = true;
    for e1 in &e1s {
        let mut any = false;
        for e2 in explain(fw, &not_o2, e1, opts.explain)?.explanations {
            let consume_only = e2.non_inspection().iter().all(|f| e1.contains(f));
            let g = groundings(fw, e1, &e2, &not_o2);
            if consume_only && !g.is_empty() {
                any = true;
                pairs.push((e1.clone(), e2, g));
            }
        }
        every_e1 &= any;
    }

    let mut witnesses = Vec::new();
    let labels: &[Label] = match (pairs.is_empty(), every_e1) {
        (true, _) => &[],
        (false, false) => &[Label::PossiblyContested],
        (false, true) => &[Label::NecessarilyContested, Label::PossiblyContested],
    };
    for &label in labels {
        for (e1, e2, g) in &pairs {
            witnesses.push(Witness { label, e1: e1.clone(), e2: e2.clone(), grounding: g.clone() });
        }
    }
    let extra: &[Label] = if is_rebuttal(fw, o1, o2) { &[Label::Rebuttal] } else { &[] };
    Ok(ClassificationReport::new(Relation::Contested, witnesses, extra))
}
