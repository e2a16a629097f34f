//! Shared helpers: fixture loading, seeded random programs and a
//! brute-force classifier over oracle explanations.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wcs_core::abduction::{
    build_framework, oracle_explain, AbducibleFact, AbductiveFramework, ExplainOptions, Explanation,
    Observation, Scope,
};
use wcs_core::classify::Relation;
use wcs_core::frontend::{parse_program, ParsedProgram};
use wcs_core::syntax::{
    Atom, Body, Clause, InspectKind, IntegrityConstraint, Literal, Program, Subject, Term,
};

pub fn fixture(name: &str) -> String {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

pub fn parsed(name: &str) -> ParsedProgram {
    parse_program(&fixture(name)).unwrap()
}

pub fn framework(name: &str, constants: &[&str]) -> AbductiveFramework {
    let p = parsed(name);
    let extra: BTreeSet<String> = constants.iter().map(|c| c.to_string()).collect();
    build_framework(&p.program, &p.ics, &extra, &BTreeSet::new()).unwrap()
}

pub fn obs(atoms: &[&str]) -> Observation {
    Observation::atoms(atoms)
}

pub fn fact(name: &str, value: bool) -> AbducibleFact {
    AbducibleFact::new(Atom::prop(name), value)
}

pub fn inspect(kind: InspectKind, name: &str, value: bool) -> AbducibleFact {
    AbducibleFact::new(Subject::Inspect(kind, Atom::prop(name)), value)
}

pub fn expl(facts: &[AbducibleFact]) -> Explanation {
    Explanation::new(facts.iter().cloned()).unwrap()
}

pub fn names(es: &[Explanation]) -> Vec<String> {
    es.iter().map(ToString::to_string).collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random ground propositional instance within the oracle's bounds.
#[derive(Debug, Clone)]
pub struct Instance {
    pub program: Program,
    pub ics: Vec<IntegrityConstraint>,
    pub framework: AbductiveFramework,
    /// Atoms worth observing: every head and leaf.
    pub atoms: Vec<Atom>,
}

const HEADS: [&str; 4] = ["h0", "h1", "h2", "h3"];
const LEAVES: [&str; 4] = ["a0", "a1", "a2", "a3"];

fn random_subject(r: &mut ChaCha8Rng) -> Subject {
    let roll = r.gen_range(0..10);
    if roll < 4 {
        Atom::prop(*HEADS.choose(r).unwrap()).into()
    } else if roll < 8 {
        Atom::prop(*LEAVES.choose(r).unwrap()).into()
    } else {
        let kind = if r.gen_bool(0.6) { InspectKind::Positive } else { InspectKind::Negative };
        Subject::Inspect(kind, Atom::prop(*LEAVES.choose(r).unwrap()))
    }
}

fn random_body(r: &mut ChaCha8Rng, max: usize) -> Vec<Literal> {
    let n = r.gen_range(1..=max);
    let mut lits: Vec<Literal> = Vec::new();
    while lits.len() < n {
        let s = random_subject(r);
        if lits.iter().any(|l| l.subject == s) {
            continue;
        }
        lits.push(Literal { subject: s, positive: r.gen_bool(0.7) });
    }
    lits
}

/// Draws instances until one has at most `max_pool` abducible subjects.
pub fn random_instance(r: &mut ChaCha8Rng, max_pool: usize) -> Instance {
    loop {
        let n = r.gen_range(1..=12);
        let mut program = Program::new();
        for _ in 0..n {
            let head = Atom::prop(*HEADS.choose(r).unwrap());
            let body = match r.gen_range(0..10) {
                0 => Body::True,
                1 => Body::False,
                _ => Body::Conj(random_body(r, 3)),
            };
            program.push(Clause::new(head, body));
        }
        let ics: Vec<IntegrityConstraint> =
            (0..r.gen_range(0..=2)).map(|_| IntegrityConstraint::new(random_body(r, 2))).collect();
        let ics: Vec<IntegrityConstraint> = ics
            .into_iter()
            .map(|ic| {
                IntegrityConstraint::new(ic.body.into_iter().filter(|l| !l.subject.is_inspection()).collect())
            })
            .filter(|ic| !ic.body.is_empty())
            .collect();
        let fw = build_framework(&program, &ics, &BTreeSet::new(), &BTreeSet::new()).unwrap();
        if fw.pool().len() > max_pool {
            continue;
        }
        let atoms = HEADS.iter().chain(LEAVES.iter()).map(|n| Atom::prop(*n)).collect();
        return Instance { program, ics, framework: fw, atoms };
    }
}

/// A random observation of one or two literals over the instance's atoms.
pub fn random_observation(r: &mut ChaCha8Rng, inst: &Instance) -> Observation {
    let n = r.gen_range(1..=2);
    Observation::new(
        inst.atoms
            .choose_multiple(r, n)
            .map(|a| Literal { subject: a.clone().into(), positive: r.gen_bool(0.75) }),
    )
    .unwrap()
}

const CONSTANTS: [&str; 3] = ["a", "b", "c"];
const VARIABLES: [&str; 2] = ["X", "Y"];
const PREDICATES: [&str; 5] = ["p", "q", "r", "s", "t"];

fn random_term(r: &mut ChaCha8Rng) -> Term {
    if r.gen_bool(0.5) {
        Term::constant(*CONSTANTS.choose(r).unwrap())
    } else {
        Term::variable(*VARIABLES.choose(r).unwrap())
    }
}

fn random_atom(r: &mut ChaCha8Rng) -> Atom {
    let arity = r.gen_range(0..=2);
    Atom::new(*PREDICATES.choose(r).unwrap(), (0..arity).map(|_| random_term(r)).collect())
}

/// A random non-ground program with denials, for syntax-level properties.
pub fn random_syntax(r: &mut ChaCha8Rng) -> (Program, Vec<IntegrityConstraint>) {
    let mut program = Program::new();
    for _ in 0..r.gen_range(0..=10) {
        let head = random_atom(r);
        let body = match r.gen_range(0..6) {
            0 => Body::True,
            1 => Body::False,
            _ => Body::Conj(
                (0..r.gen_range(1..=3))
                    .map(|_| {
                        let a = random_atom(r);
                        let s = match r.gen_range(0..5) {
                            0 => Subject::Inspect(InspectKind::Positive, a),
                            1 => Subject::Inspect(InspectKind::Negative, a),
                            _ => Subject::Atom(a),
                        };
                        Literal { subject: s, positive: r.gen_bool(0.6) }
                    })
                    .collect(),
            ),
        };
        program.push(Clause::new(head, body));
    }
    let ics = (0..r.gen_range(0..=2))
        .map(|_| {
            IntegrityConstraint::new(
                (0..r.gen_range(1..=2))
                    .map(|_| Literal { subject: random_atom(r).into(), positive: r.gen_bool(0.5) })
                    .collect(),
            )
        })
        .collect();
    (program, ics)
}

fn oracle(fw: &AbductiveFramework, o: &Observation, ctx: Option<&Explanation>) -> Vec<Explanation> {
    oracle_explain(fw, o, ctx, ExplainOptions::default()).unwrap()
}

fn consumed(e2: &Explanation, e1: &Explanation) -> bool {
    e2.facts().any(|f| {
        f.value
            && f.is_inspection()
            && f.matching_producer().is_some_and(|p| !e2.contains(&p) && e1.contains(&p))
    })
}

fn ordinary_within(e2: &Explanation, e1: &Explanation) -> bool {
    e2.facts().filter(|f| !f.is_inspection()).all(|f| e1.contains(f))
}

fn strict(e1: &Explanation, e2: &Explanation) -> bool {
    e1.facts().all(|f| {
        e2.contains(f)
            || e2.facts().any(|c| {
                c.value && c.is_inspection() && c.matching_producer().as_ref() == Some(f) && !e2.contains(f)
            })
    })
}

fn forced(fw: &AbductiveFramework, e1: &Explanation, e2: &Explanation, not_o2: &Observation) -> bool {
    let mut false_wrappers: Vec<AbducibleFact> =
        e2.facts().filter(|f| f.is_inspection() && !f.value).cloned().collect();
    false_wrappers.extend(fw.closure_facts(e2, Scope::Context(e1), not_o2));
    false_wrappers.iter().any(|w| {
        let p = w.opposing_producer().unwrap();
        e1.contains(&p) && !e2.contains(&p)
    })
}

fn mutual(e1: &Explanation, e2: &Explanation) -> bool {
    let covers = |a: &Explanation, b: &Explanation| {
        let pending: Vec<AbducibleFact> = a
            .facts()
            .filter(|f| f.value && f.is_inspection())
            .filter(|f| !a.contains(&f.matching_producer().unwrap()))
            .cloned()
            .collect();
        !pending.is_empty() && pending.iter().all(|c| b.contains(&c.matching_producer().unwrap()))
    };
    e1.is_consistent_with(e2) && covers(e1, e2) && covers(e2, e1)
}

/// Labels by direct quantifier evaluation over oracle explanations, or
/// `None` when the primary observation has no explanation.
pub fn brute_labels(
    fw: &AbductiveFramework,
    relation: Relation,
    o1: &Observation,
    o2: &Observation,
) -> Option<Vec<&'static str>> {
    let empty = Explanation::empty();
    let mut labels = Vec::new();
    if relation == Relation::Joint {
        let e1s = oracle(fw, o1, None);
        if e1s.is_empty() {
            return None;
        }
        let e2s = oracle(fw, o2, None);
        let possible = e1s.iter().any(|a| e2s.iter().any(|b| mutual(a, b)));
        let necessary = !e2s.is_empty()
            && e1s.iter().all(|a| e2s.iter().any(|b| mutual(a, b)))
            && e2s.iter().all(|b| e1s.iter().any(|a| mutual(a, b)));
        if necessary {
            labels.push("NECESSARILY_JOINT");
        }
        if possible {
            labels.push("POSSIBLY_JOINT");
        }
        return Some(labels);
    }
    let e1s = oracle(fw, o1, Some(&empty));
    if e1s.is_empty() {
        return None;
    }
    match relation {
        Relation::SideEffect => {
            let per_e1: Vec<(bool, bool)> = e1s
                .iter()
                .map(|e1| {
                    let q: Vec<Explanation> = oracle(fw, o2, Some(e1))
                        .into_iter()
                        .filter(|e2| consumed(e2, e1) && ordinary_within(e2, e1))
                        .collect();
                    (!q.is_empty(), q.iter().any(|e2| strict(e1, e2)))
                })
                .collect();
            let necessary = per_e1.iter().all(|p| p.0);
            if necessary {
                labels.push("NECESSARY");
            }
            if necessary && per_e1.iter().all(|p| p.1) {
                labels.push("STRICT_NECESSARY");
            }
            if per_e1.iter().any(|p| p.0) {
                labels.push("POSSIBLE");
            }
            if per_e1.iter().any(|p| p.1) {
                labels.push("STRICT_POSSIBLE");
            }
        }
        Relation::Contested => {
            let not_o2 = o2.negated();
            let per_e1: Vec<bool> = e1s
                .iter()
                .map(|e1| {
                    oracle(fw, &not_o2, Some(e1)).iter().any(|e2| {
                        ordinary_within(e2, e1) && (consumed(e2, e1) || forced(fw, e1, e2, &not_o2))
                    })
                })
                .collect();
            if per_e1.iter().all(|b| *b) {
                labels.push("NECESSARILY_CONTESTED");
            }
            if per_e1.iter().any(|b| *b) {
                labels.push("POSSIBLY_CONTESTED");
            }
        }
        Relation::Relevant => {
            let by_e1: Vec<(Explanation, Vec<Explanation>)> =
                e1s.iter().map(|e1| (e1.clone(), oracle(fw, o2, Some(e1)))).collect();
            let universe: BTreeSet<Explanation> =
                by_e1.iter().flat_map(|(_, e2s)| e2s.iter().cloned()).collect();
            let good = |e2: &Explanation| by_e1.iter().any(|(e1, e2s)| e2s.contains(e2) && consumed(e2, e1));
            if !universe.is_empty() && universe.iter().all(good) {
                labels.push("NECESSARY_RELEVANT");
            }
            if universe.iter().any(good) {
                labels.push("POSSIBLE_RELEVANT");
            }
        }
        Relation::Joint => unreachable!(),
    }
    Some(labels)
}
