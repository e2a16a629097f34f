use std::collections::BTreeSet;
use std::fmt;

use super::AbductionError;
use crate::syntax::{Atom, Literal, Subject};

/// An abduced fact `subject ← ⊤` or `subject ← ⊥`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbducibleFact {
    pub subject: Subject,
    pub value: bool,
}

impl AbducibleFact {
    pub fn new(subject: impl Into<Subject>, value: bool) -> Self {
        AbducibleFact { subject: subject.into(), value }
    }

    pub fn is_inspection(&self) -> bool {
        self.subject.is_inspection()
    }

    /// A positive-valued inspection fact: it consumes a producer.
    pub fn is_consumer(&self) -> bool {
        self.value && self.is_inspection()
    }

    /// For an inspection fact, the ordinary fact it consumes:
    /// `inspect(A)` ↦ `A ← ⊤`, `inspect_neg(A)` ↦ `A ← ⊥`.
    pub fn matching_producer(&self) -> Option<AbducibleFact> {
        match &self.subject {
            Subject::Inspect(kind, a) => {
                Some(AbducibleFact::new(Subject::Atom(a.clone()), kind.producer_value()))
            }
            Subject::Atom(_) => None,
        }
    }

    /// For an inspection fact, the producer that contradicts what it inspects
    /// (`A ← ⊥` for `inspect(A)`, `A ← ⊤` for `inspect_neg(A)`).
    pub fn opposing_producer(&self) -> Option<AbducibleFact> {
        self.matching_producer().map(|p| AbducibleFact::new(p.subject, !p.value))
    }
}

impl fmt::Display for AbducibleFact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.subject, self.value)
    }
}

/// A consistent set of abduced facts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Explanation {
    facts: BTreeSet<AbducibleFact>,
}

impl Explanation {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(facts: impl IntoIterator<Item = AbducibleFact>) -> Result<Self, AbductionError> {
        let facts: BTreeSet<AbducibleFact> = facts.into_iter().collect();
        for f in &facts {
            if f.value && facts.contains(&AbducibleFact::new(f.subject.clone(), false)) {
                return Err(AbductionError::Inconsistent(f.subject.to_string()));
            }
        }
        Ok(Explanation { facts })
    }

    pub fn facts(&self) -> impl Iterator<Item = &AbducibleFact> {
        self.facts.iter()
    }

    pub fn len(&self) -> usize {
        self.facts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facts.is_empty()
    }

    pub fn contains(&self, fact: &AbducibleFact) -> bool {
        self.facts.contains(fact)
    }

    pub fn value_of(&self, subject: &Subject) -> Option<bool> {
        if self.facts.contains(&AbducibleFact::new(subject.clone(), true)) {
            Some(true)
        } else if self.facts.contains(&AbducibleFact::new(subject.clone(), false)) {
            Some(false)
        } else {
            None
        }
    }

    /// Ordinary facts (producers).
    pub fn non_inspection(&self) -> BTreeSet<AbducibleFact> {
        self.facts.iter().filter(|f| !f.is_inspection()).cloned().collect()
    }

    pub fn inspection(&self) -> BTreeSet<AbducibleFact> {
        self.facts.iter().filter(|f| f.is_inspection()).cloned().collect()
    }

    /// Positive inspection facts.
    pub fn consumers(&self) -> impl Iterator<Item = &AbducibleFact> {
        self.facts.iter().filter(|f| f.is_consumer())
    }

    /// Consumers whose producer is not in this explanation.
    pub fn pending_consumers(&self) -> Vec<&AbducibleFact> {
        self.consumers().filter(|c| !self.contains(&c.matching_producer().expect("consumer"))).collect()
    }

    pub fn is_consistent_with(&self, other: &Explanation) -> bool {
        self.facts.iter().all(|f| !other.contains(&AbducibleFact::new(f.subject.clone(), !f.value)))
    }

    pub fn union(&self, other: &Explanation) -> Result<Explanation, AbductionError> {
        Explanation::new(self.facts.iter().chain(other.facts.iter()).cloned())
    }

    pub fn is_subset_of(&self, other: &Explanation) -> bool {
        self.facts.is_subset(&other.facts)
    }

    pub fn with(&self, fact: AbducibleFact) -> Result<Explanation, AbductionError> {
        Explanation::new(self.facts.iter().cloned().chain(std::iter::once(fact)))
    }
}

impl FromIterator<AbducibleFact> for Result<Explanation, AbductionError> {
    fn from_iter<I: IntoIterator<Item = AbducibleFact>>(iter: I) -> Self {
        Explanation::new(iter)
    }
}

impl fmt::Display for Explanation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, fact) in self.facts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{fact}")?;
        }
        f.write_str("}")
    }
}

/// A non-empty set of ground literals over plain atoms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Observation {
    literals: BTreeSet<Literal>,
}

impl Observation {
    pub fn new(literals: impl IntoIterator<Item = Literal>) -> Result<Self, AbductionError> {
        let literals: BTreeSet<Literal> = literals.into_iter().collect();
        if literals.is_empty() {
            return Err(AbductionError::EmptyObservation);
        }
        for l in &literals {
            if l.subject.is_inspection() {
                return Err(AbductionError::InspectionInObservation(l.subject.to_string()));
            }
            if !l.subject.is_ground() {
                return Err(AbductionError::NotGround(l.subject.to_string()));
            }
        }
        Ok(Observation { literals })
    }

    pub fn atoms(names: &[&str]) -> Self {
        Observation::new(names.iter().map(|n| Literal::pos(Atom::prop(*n)))).expect("non-empty list of atoms")
    }

    pub fn literals(&self) -> impl Iterator<Item = &Literal> {
        self.literals.iter()
    }

    pub fn to_vec(&self) -> Vec<Literal> {
        self.literals.iter().cloned().collect()
    }

    /// Literal-wise negation.
    pub fn negated(&self) -> Observation {
        Observation { literals: self.literals.iter().map(Literal::negated).collect() }
    }

    pub fn constants(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for l in &self.literals {
            l.subject.atom().collect_constants(&mut out);
        }
        out
    }
}

impl fmt::Display for Observation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.literals.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
