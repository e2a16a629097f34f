use std::collections::BTreeSet;
use std::fmt;

use super::atom::{Literal, Subject};
use super::truth::TruthValue;
use super::SyntaxError;

/// A three-valued interpretation ⟨I⊤, I⊥⟩. Subjects in neither set are unknown.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Interpretation {
    true_set: BTreeSet<Subject>,
    false_set: BTreeSet<Subject>,
}

impl Interpretation {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(true_set: BTreeSet<Subject>, false_set: BTreeSet<Subject>) -> Result<Self, SyntaxError> {
        if let Some(s) = true_set.intersection(&false_set).next() {
            return Err(SyntaxError::Overlap(s.to_string()));
        }
        Ok(Interpretation { true_set, false_set })
    }

    pub fn true_set(&self) -> &BTreeSet<Subject> {
        &self.true_set
    }

    pub fn false_set(&self) -> &BTreeSet<Subject> {
        &self.false_set
    }

    pub fn value(&self, s: &Subject) -> TruthValue {
        if self.true_set.contains(s) {
            TruthValue::True
        } else if self.false_set.contains(s) {
            TruthValue::False
        } else {
            TruthValue::Unknown
        }
    }

    pub fn literal(&self, l: &Literal) -> TruthValue {
        let v = self.value(&l.subject);
        if l.positive {
            v
        } else {
            !v
        }
    }

    /// Łukasiewicz conjunction of the literals; the empty conjunction is ⊤.
    pub fn conjunction<'a>(&self, lits: impl IntoIterator<Item = &'a Literal>) -> TruthValue {
        lits.into_iter().fold(TruthValue::True, |acc, l| acc.and(self.literal(l)))
    }

    /// Subjects of `base` assigned neither value.
    pub fn unknown_in(&self, base: &BTreeSet<Subject>) -> BTreeSet<Subject> {
        base.iter().filter(|s| !self.true_set.contains(*s) && !self.false_set.contains(*s)).cloned().collect()
    }

    /// Pointwise ⊆ in the knowledge ordering.
    pub fn is_subset_of(&self, other: &Interpretation) -> bool {
        self.true_set.is_subset(&other.true_set) && self.false_set.is_subset(&other.false_set)
    }

    pub fn intersection(&self, other: &Interpretation) -> Interpretation {
        Interpretation {
            true_set: self.true_set.intersection(&other.true_set).cloned().collect(),
            false_set: self.false_set.intersection(&other.false_set).cloned().collect(),
        }
    }
}

fn write_set(f: &mut fmt::Formatter<'_>, set: &BTreeSet<Subject>) -> fmt::Result {
    f.write_str("{")?;
    for (i, s) in set.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{s}")?;
    }
    f.write_str("}")
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("⟨")?;
        write_set(f, &self.true_set)?;
        f.write_str(", ")?;
        write_set(f, &self.false_set)?;
        f.write_str("⟩")
    }
}
