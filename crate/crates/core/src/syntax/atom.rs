use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A datalog term. Constants start lowercase, variables uppercase.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Constant(String),
    Variable(String),
}

impl Term {
    pub fn constant(name: impl Into<String>) -> Self {
        Term::Constant(name.into())
    }

    pub fn variable(name: impl Into<String>) -> Self {
        Term::Variable(name.into())
    }

    pub fn is_ground(&self) -> bool {
        matches!(self, Term::Constant(_))
    }

    pub fn name(&self) -> &str {
        match self {
            Term::Constant(n) | Term::Variable(n) => n,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Variable bindings used during grounding.
pub type Substitution = BTreeMap<String, String>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub predicate: String,
    pub args: Vec<Term>,
}

impl Atom {
    pub fn new(predicate: impl Into<String>, args: Vec<Term>) -> Self {
        Atom { predicate: predicate.into(), args }
    }

    /// A zero-arity atom.
    pub fn prop(predicate: impl Into<String>) -> Self {
        Atom::new(predicate, Vec::new())
    }

    /// Shorthand for a ground atom over constants.
    pub fn ground(predicate: impl Into<String>, constants: &[&str]) -> Self {
        Atom::new(predicate, constants.iter().map(|c| Term::constant(*c)).collect())
    }

    pub fn arity(&self) -> usize {
        self.args.len()
    }

    pub fn is_ground(&self) -> bool {
        self.args.iter().all(Term::is_ground)
    }

    pub fn collect_variables(&self, out: &mut BTreeSet<String>) {
        for t in &self.args {
            if let Term::Variable(v) = t {
                out.insert(v.clone());
            }
        }
    }

    pub fn collect_constants(&self, out: &mut BTreeSet<String>) {
        for t in &self.args {
            if let Term::Constant(c) = t {
                out.insert(c.clone());
            }
        }
    }

    /// Replaces bound variables; unbound variables are left in place.
    pub fn substitute(&self, subst: &Substitution) -> Atom {
        let args = self
            .args
            .iter()
            .map(|t| match t {
                Term::Variable(v) => match subst.get(v) {
                    Some(c) => Term::Constant(c.clone()),
                    None => t.clone(),
                },
                Term::Constant(_) => t.clone(),
            })
            .collect();
        Atom { predicate: self.predicate.clone(), args }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.predicate)?;
        if !self.args.is_empty() {
            f.write_str("(")?;
            for (i, t) in self.args.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{t}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InspectKind {
    /// `inspect(A)`, consumes a producer `A ← ⊤`.
    Positive,
    /// `inspect_neg(A)`, consumes a producer `A ← ⊥`.
    Negative,
}

impl InspectKind {
    pub fn keyword(self) -> &'static str {
        match self {
            InspectKind::Positive => "inspect",
            InspectKind::Negative => "inspect_neg",
        }
    }

    /// Value of the wrapped atom's producer that this kind consumes.
    pub fn producer_value(self) -> bool {
        matches!(self, InspectKind::Positive)
    }
}

/// Anything that can carry a truth value: a plain atom or an inspection
/// wrapper around one. Wrappers are ordered right after their atom.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Subject {
    Atom(Atom),
    Inspect(InspectKind, Atom),
}

impl Subject {
    pub fn atom(&self) -> &Atom {
        match self {
            Subject::Atom(a) | Subject::Inspect(_, a) => a,
        }
    }

    pub fn is_inspection(&self) -> bool {
        matches!(self, Subject::Inspect(..))
    }

    pub fn inspect_kind(&self) -> Option<InspectKind> {
        match self {
            Subject::Atom(_) => None,
            Subject::Inspect(k, _) => Some(*k),
        }
    }

    pub fn is_ground(&self) -> bool {
        self.atom().is_ground()
    }

    pub fn substitute(&self, subst: &Substitution) -> Subject {
        match self {
            Subject::Atom(a) => Subject::Atom(a.substitute(subst)),
            Subject::Inspect(k, a) => Subject::Inspect(*k, a.substitute(subst)),
        }
    }

    fn rank(&self) -> u8 {
        match self {
            Subject::Atom(_) => 0,
            Subject::Inspect(InspectKind::Positive, _) => 1,
            Subject::Inspect(InspectKind::Negative, _) => 2,
        }
    }
}

impl From<Atom> for Subject {
    fn from(a: Atom) -> Self {
        Subject::Atom(a)
    }
}

impl Ord for Subject {
    fn cmp(&self, other: &Self) -> Ordering {
        self.atom().cmp(other.atom()).then(self.rank().cmp(&other.rank()))
    }
}

impl PartialOrd for Subject {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Atom(a) => write!(f, "{a}"),
            Subject::Inspect(k, a) => write!(f, "{}({a})", k.keyword()),
        }
    }
}

/// A possibly negated subject occurring in a clause body, a denial, an
/// observation or a query.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub subject: Subject,
    pub positive: bool,
}

impl Literal {
    pub fn pos(subject: impl Into<Subject>) -> Self {
        Literal { subject: subject.into(), positive: true }
    }

    pub fn neg(subject: impl Into<Subject>) -> Self {
        Literal { subject: subject.into(), positive: false }
    }

    pub fn negated(&self) -> Self {
        Literal { subject: self.subject.clone(), positive: !self.positive }
    }

    pub fn substitute(&self, subst: &Substitution) -> Literal {
        Literal { subject: self.subject.substitute(subst), positive: self.positive }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.positive {
            f.write_str("not ")?;
        }
        write!(f, "{}", self.subject)
    }
}
