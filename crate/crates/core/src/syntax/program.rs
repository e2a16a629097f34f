use std::collections::BTreeSet;
use std::fmt;

use super::atom::{Literal, Subject, Substitution};

/// Clause body: a conjunction of literals, or one of the constants ⊤ / ⊥.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Body {
    True,
    False,
    Conj(Vec<Literal>),
}

impl Body {
    pub fn literals(&self) -> &[Literal] {
        match self {
            Body::Conj(lits) => lits,
            Body::True | Body::False => &[],
        }
    }

    pub fn substitute(&self, subst: &Substitution) -> Body {
        match self {
            Body::Conj(lits) => Body::Conj(lits.iter().map(|l| l.substitute(subst)).collect()),
            other => other.clone(),
        }
    }
}

impl fmt::Display for Body {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Body::True => f.write_str("true"),
            Body::False => f.write_str("false"),
            Body::Conj(lits) => write_conj(f, lits),
        }
    }
}

fn write_conj(f: &mut fmt::Formatter<'_>, lits: &[Literal]) -> fmt::Result {
    for (i, l) in lits.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{l}")?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clause {
    pub head: Subject,
    pub body: Body,
}

impl Clause {
    pub fn new(head: impl Into<Subject>, body: Body) -> Self {
        Clause { head: head.into(), body }
    }

    pub fn fact(head: impl Into<Subject>, value: bool) -> Self {
        Clause::new(head, if value { Body::True } else { Body::False })
    }

    pub fn rule(head: impl Into<Subject>, body: Vec<Literal>) -> Self {
        Clause::new(head, Body::Conj(body))
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.head.atom().collect_variables(&mut out);
        for l in self.body.literals() {
            l.subject.atom().collect_variables(&mut out);
        }
        out
    }

    pub fn is_ground(&self) -> bool {
        self.head.is_ground() && self.body.literals().iter().all(|l| l.subject.is_ground())
    }

    pub fn substitute(&self, subst: &Substitution) -> Clause {
        Clause { head: self.head.substitute(subst), body: self.body.substitute(subst) }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.body {
            Body::True => write!(f, "{}.", self.head),
            body => write!(f, "{} :- {body}.", self.head),
        }
    }
}

/// A denial `U ← body`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegrityConstraint {
    pub body: Vec<Literal>,
}

impl IntegrityConstraint {
    pub fn new(body: Vec<Literal>) -> Self {
        IntegrityConstraint { body }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for l in &self.body {
            l.subject.atom().collect_variables(&mut out);
        }
        out
    }

    pub fn is_ground(&self) -> bool {
        self.body.iter().all(|l| l.subject.is_ground())
    }

    pub fn substitute(&self, subst: &Substitution) -> Self {
        IntegrityConstraint { body: self.body.iter().map(|l| l.substitute(subst)).collect() }
    }
}

impl fmt::Display for IntegrityConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(":- ")?;
        write_conj(f, &self.body)?;
        f.write_str(".")
    }
}

/// A finite set of clauses. Insertion order is kept; duplicates are dropped.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Program {
    clauses: Vec<Clause>,
}

impl Program {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_clauses(clauses: impl IntoIterator<Item = Clause>) -> Self {
        let mut p = Program::new();
        for c in clauses {
            p.push(c);
        }
        p
    }

    /// Adds a clause unless already present. Returns whether it was new.
    pub fn push(&mut self, clause: Clause) -> bool {
        if self.clauses.contains(&clause) {
            return false;
        }
        self.clauses.push(clause);
        true
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn is_ground(&self) -> bool {
        self.clauses.iter().all(Clause::is_ground)
    }

    /// Constants occurring anywhere in the program.
    pub fn constants(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for c in &self.clauses {
            c.head.atom().collect_constants(&mut out);
            for l in c.body.literals() {
                l.subject.atom().collect_constants(&mut out);
            }
        }
        out
    }

    pub fn heads(&self) -> BTreeSet<Subject> {
        self.clauses.iter().map(|c| c.head.clone()).collect()
    }

    /// All subjects occurring in the program, heads and bodies. A wrapper in a
    /// body contributes the wrapper and the wrapped atom.
    pub fn atoms(&self) -> BTreeSet<Subject> {
        let mut out = self.heads();
        for c in &self.clauses {
            for l in c.body.literals() {
                add_occurrence(&mut out, &l.subject);
            }
        }
        out
    }

    /// Subjects occurring in some body but in no head.
    pub fn undefined_atoms(&self) -> BTreeSet<Subject> {
        let heads = self.heads();
        let mut body = BTreeSet::new();
        for c in &self.clauses {
            for l in c.body.literals() {
                add_occurrence(&mut body, &l.subject);
            }
        }
        body.retain(|s| !heads.contains(s));
        body
    }

    pub fn is_defined(&self, subject: &Subject) -> bool {
        self.clauses.iter().any(|c| &c.head == subject)
    }

    /// Union with another program's clauses.
    pub fn extended(&self, extra: impl IntoIterator<Item = Clause>) -> Program {
        let mut p = self.clone();
        for c in extra {
            p.push(c);
        }
        p
    }
}

fn add_occurrence(out: &mut BTreeSet<Subject>, s: &Subject) {
    if let Subject::Inspect(_, a) = s {
        out.insert(Subject::Atom(a.clone()));
    }
    out.insert(s.clone());
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}
