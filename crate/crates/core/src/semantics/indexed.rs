//! Dense, index-based form of a ground program for repeated fixpoint runs.

use std::collections::{BTreeSet, HashMap};

use super::SemanticsError;
use crate::syntax::{Body, Interpretation, Literal, Program, Subject, TruthValue};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndexedBody {
    True,
    False,
    Conj(Vec<(usize, bool)>),
}

#[derive(Debug, Clone)]
pub struct IndexedProgram {
    subjects: Vec<Subject>,
    index: HashMap<Subject, usize>,
    defs: Vec<Vec<IndexedBody>>,
    wrapped: Vec<Option<usize>>,
    atom_count: usize,
}

impl IndexedProgram {
    pub fn new(program: &Program) -> Self {
        Self::with_subjects(program, std::iter::empty())
    }

    /// Indexes `atoms(program)` plus any extra subjects (IC or observation
    /// atoms that the program never mentions).
    pub fn with_subjects(program: &Program, extra: impl IntoIterator<Item = Subject>) -> Self {
        let atoms = program.atoms();
        let atom_count = atoms.len();
        let mut all: BTreeSet<Subject> = atoms;
        for s in extra {
            if let Subject::Inspect(_, a) = &s {
                all.insert(Subject::Atom(a.clone()));
            }
            all.insert(s);
        }
        let subjects: Vec<Subject> = all.into_iter().collect();
        let index: HashMap<Subject, usize> =
            subjects.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let mut defs = vec![Vec::new(); subjects.len()];
        for c in program.clauses() {
            let body = match &c.body {
                Body::True => IndexedBody::True,
                Body::False => IndexedBody::False,
                Body::Conj(lits) => {
                    IndexedBody::Conj(lits.iter().map(|l| (index[&l.subject], l.positive)).collect())
                }
            };
            defs[index[&c.head]].push(body);
        }
        let wrapped = subjects
            .iter()
            .map(|s| match s {
                Subject::Inspect(_, a) => index.get(&Subject::Atom(a.clone())).copied(),
                Subject::Atom(_) => None,
            })
            .collect();
        IndexedProgram { subjects, index, defs, wrapped, atom_count }
    }

    pub fn len(&self) -> usize {
        self.subjects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subjects.is_empty()
    }

    /// Size of `atoms(P)` of the indexed program.
    pub fn atom_count(&self) -> usize {
        self.atom_count
    }

    pub fn id(&self, s: &Subject) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn subject(&self, id: usize) -> &Subject {
        &self.subjects[id]
    }

    pub fn subjects(&self) -> &[Subject] {
        &self.subjects
    }

    pub fn is_defined(&self, id: usize) -> bool {
        !self.defs[id].is_empty()
    }

    /// One application of Φ with extra facts `A ← ⊤/⊥` added to the program.
    pub fn step(&self, cur: &[TruthValue], facts: &[Option<bool>]) -> Vec<TruthValue> {
        (0..self.subjects.len())
            .map(|i| {
                let mut any_true = false;
                let mut all_false = true;
                let mut has_body = false;
                if let Some(v) = facts.get(i).copied().flatten() {
                    has_body = true;
                    any_true |= v;
                    all_false &= !v;
                }
                for body in &self.defs[i] {
                    has_body = true;
                    let v = match body {
                        IndexedBody::True => TruthValue::True,
                        IndexedBody::False => TruthValue::False,
                        IndexedBody::Conj(lits) => lits.iter().fold(TruthValue::True, |acc, &(j, pos)| {
                            acc.and(if pos { cur[j] } else { !cur[j] })
                        }),
                    };
                    any_true |= v.is_true();
                    all_false &= v.is_false();
                }
                if any_true {
                    TruthValue::True
                } else if has_body && all_false {
                    TruthValue::False
                } else {
                    TruthValue::Unknown
                }
            })
            .collect()
    }

    /// Least fixpoint of Φ from the empty interpretation, with the number of
    /// Φ applications it took (including the one confirming the fixpoint).
    pub fn fixpoint(&self, facts: &[(usize, bool)]) -> Result<(Vec<TruthValue>, usize), SemanticsError> {
        let mut fact_of = vec![None; self.subjects.len()];
        for &(i, v) in facts {
            fact_of[i] = Some(v);
        }
        let cap = self.subjects.len() + 1;
        let mut cur = vec![TruthValue::Unknown; self.subjects.len()];
        for applied in 1..=cap {
            let next = self.step(&cur, &fact_of);
            if next == cur {
                return Ok((cur, applied));
            }
            cur = next;
        }
        Err(SemanticsError::NoConvergence(cap))
    }

    pub fn interpretation(&self, values: &[TruthValue]) -> Interpretation {
        let mut t = BTreeSet::new();
        let mut f = BTreeSet::new();
        for (s, v) in self.subjects.iter().zip(values) {
            match v {
                TruthValue::True => {
                    t.insert(s.clone());
                }
                TruthValue::False => {
                    f.insert(s.clone());
                }
                TruthValue::Unknown => {}
            }
        }
        Interpretation::new(t, f).expect("Φ never assigns both values")
    }

    pub fn literal_value(&self, values: &[TruthValue], l: &Literal) -> TruthValue {
        let v = self.id(&l.subject).map_or(TruthValue::Unknown, |i| values[i]);
        if l.positive {
            v
        } else {
            !v
        }
    }

    pub fn conjunction(&self, values: &[TruthValue], lits: &[Literal]) -> TruthValue {
        lits.iter().fold(TruthValue::True, |acc, l| acc.and(self.literal_value(values, l)))
    }

    /// Ids reachable from `roots` through clause bodies, following each
    /// inspection wrapper to its wrapped atom as well.
    pub fn cone(&self, roots: impl IntoIterator<Item = usize>) -> Vec<bool> {
        let mut seen = vec![false; self.subjects.len()];
        let mut stack: Vec<usize> = roots.into_iter().collect();
        while let Some(i) = stack.pop() {
            if std::mem::replace(&mut seen[i], true) {
                continue;
            }
            if let Some(w) = self.wrapped[i] {
                stack.push(w);
            }
            for body in &self.defs[i] {
                if let IndexedBody::Conj(lits) = body {
                    stack.extend(lits.iter().map(|&(j, _)| j));
                }
            }
        }
        seen
    }
}
