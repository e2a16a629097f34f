//! Levelwise search for minimal explanations.

use super::explanation::{AbducibleFact, Explanation, Observation};
use super::framework::{AbductiveFramework, Scope};
use super::AbductionError;
use crate::syntax::Subject;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Minimality {
    /// Subset-minimal on ordinary facts, then on inspection facts.
    #[default]
    Subset,
    /// Fewest ordinary facts, then fewest inspection facts.
    Cardinality,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ExplainOptions {
    pub criterion: Minimality,
    /// Refuse to explain observations the program already entails.
    pub strict_def1: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExplainOutcome {
    pub explanations: Vec<Explanation>,
    /// The program alone makes the observation true.
    pub already_entailed: bool,
}

/// `e` dominates `f` if its ordinary facts are a proper subset of `f`'s, or
/// equal with a proper subset of inspection facts.
pub fn dominates(e: &Explanation, f: &Explanation) -> bool {
    let (ne, nf) = (e.non_inspection(), f.non_inspection());
    if ne.len() < nf.len() && ne.is_subset(&nf) {
        return true;
    }
    if ne != nf {
        return false;
    }
    let (ie, i_f) = (e.inspection(), f.inspection());
    ie.len() < i_f.len() && ie.is_subset(&i_f)
}

/// Canonical output order: ordinary-fact count, then the facts themselves.
pub fn sort_explanations(es: &mut [Explanation]) {
    es.sort_by(|a, b| {
        (a.non_inspection().len(), a.facts().collect::<Vec<_>>())
            .cmp(&(b.non_inspection().len(), b.facts().collect::<Vec<_>>()))
    });
}

/// Minimal explanations of `o` in context `ctx`.
pub fn explain(
    fw: &AbductiveFramework,
    o: &Observation,
    ctx: &Explanation,
    opts: ExplainOptions,
) -> Result<ExplainOutcome, AbductionError> {
    search(fw, o, Scope::Context(ctx), opts)
}

/// Minimal explanations of `o` whose positive inspection facts may wait for
/// producers from elsewhere.
pub fn explain_open(
    fw: &AbductiveFramework,
    o: &Observation,
    opts: ExplainOptions,
) -> Result<ExplainOutcome, AbductionError> {
    search(fw, o, Scope::Open, opts)
}

fn search(
    fw: &AbductiveFramework,
    o: &Observation,
    scope: Scope<'_>,
    opts: ExplainOptions,
) -> Result<ExplainOutcome, AbductionError> {
    let base = fw.values_for(&[]);
    let entailed = fw.observation_value(&base, o).is_true();
    if opts.strict_def1 && entailed {
        return Ok(ExplainOutcome { explanations: Vec::new(), already_entailed: true });
    }

    let (producers, wrappers) = relevant_pool(fw, o);
    let fixed = |s: &Subject| match scope {
        Scope::Context(c) => c.value_of(s),
        Scope::Open => None,
    };
    // Facts allowed for each subject. A subject the context fixes can only
    // repeat the context's value. A negative inspection fact is never needed:
    // when it validates, the closure already assigns the same value.
    let producer_choices: Vec<Vec<AbducibleFact>> = producers
        .iter()
        .map(|s| match fixed(s) {
            Some(v) => vec![AbducibleFact::new(s.clone(), v)],
            None => vec![AbducibleFact::new(s.clone(), true), AbducibleFact::new(s.clone(), false)],
        })
        .collect();
    let wrapper_facts: Vec<AbducibleFact> = match scope {
        Scope::Context(c) if c.is_empty() => Vec::new(),
        _ => wrappers
            .iter()
            .filter(|s| fixed(s) != Some(false))
            .map(|s| AbducibleFact::new(s.clone(), true))
            .collect(),
    };

    let mut found: Vec<Explanation> = Vec::new();
    for k in 0..=producer_choices.len() {
        let before = found.len();
        for combo in combinations(producer_choices.len(), k) {
            for assignment in assignments(&combo, &producer_choices) {
                // A found set with fewer ordinary facts dominates every
                // extension of this one.
                if found.iter().any(|e| {
                    let n = e.non_inspection();
                    n.len() < assignment.len() && n.iter().all(|f| assignment.contains(f))
                }) {
                    continue;
                }
                level_inspections(fw, o, scope, &assignment, &wrapper_facts, &mut found);
            }
        }
        if opts.criterion == Minimality::Cardinality && found.len() > before {
            break;
        }
    }
    if opts.criterion == Minimality::Cardinality {
        if let Some(min) = found.iter().map(|e| e.inspection().len()).min() {
            found.retain(|e| e.inspection().len() == min);
        }
    }
    sort_explanations(&mut found);
    let already_entailed = entailed && found.iter().any(Explanation::is_empty);
    Ok(ExplainOutcome { explanations: found, already_entailed })
}

/// Tries inspection subsets of increasing size on top of a fixed set of
/// ordinary facts.
fn level_inspections(
    fw: &AbductiveFramework,
    o: &Observation,
    scope: Scope<'_>,
    ordinary: &[AbducibleFact],
    wrapper_facts: &[AbducibleFact],
    found: &mut Vec<Explanation>,
) {
    let Ok(base) = Explanation::new(ordinary.iter().cloned()) else {
        return;
    };
    for j in 0..=wrapper_facts.len() {
        for combo in combinations(wrapper_facts.len(), j) {
            let Ok(e) = Explanation::new(
                base.facts().cloned().chain(combo.iter().map(|&i| wrapper_facts[i].clone())),
            ) else {
                continue;
            };
            if found.iter().any(|s| dominates(s, &e)) {
                continue;
            }
            if fw.check(&e, o, scope) {
                found.push(e);
            }
        }
    }
}

/// Pool subjects that can influence the observation or a constraint, split
/// into ordinary atoms and wrappers.
fn relevant_pool(fw: &AbductiveFramework, o: &Observation) -> (Vec<Subject>, Vec<Subject>) {
    let idx = fw.indexed();
    let mut roots: Vec<usize> = o.literals().filter_map(|l| idx.id(&l.subject)).collect();
    for ic in fw.ics() {
        roots.extend(ic.body.iter().filter_map(|l| idx.id(&l.subject)));
    }
    let cone = idx.cone(roots);
    let mut producers = Vec::new();
    let mut wrappers = Vec::new();
    for s in fw.pool() {
        let id = idx.id(s).expect("pool is indexed");
        if !cone[id] {
            continue;
        }
        if s.is_inspection() {
            wrappers.push(s.clone());
        } else {
            producers.push(s.clone());
        }
    }
    (producers, wrappers)
}

/// All `k`-element index subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Every choice of one fact per selected subject.
fn assignments(combo: &[usize], choices: &[Vec<AbducibleFact>]) -> Vec<Vec<AbducibleFact>> {
    let mut out = vec![Vec::new()];
    for &i in combo {
        let mut next = Vec::new();
        for partial in &out {
            for f in &choices[i] {
                let mut p = partial.clone();
                p.push(f.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}
