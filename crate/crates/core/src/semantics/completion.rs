//! Weak completion: merge clauses per head, keep undefined atoms open.

use std::collections::BTreeMap;
use std::fmt;

use crate::syntax::{evaluate, Body, Formula, Interpretation, Program, Subject, TruthValue};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equivalence {
    pub head: Subject,
    /// Disjuncts in clause order. A ⊥ body survives only when it is alone.
    pub definition: Vec<Body>,
}

impl Equivalence {
    pub fn formula(&self) -> Formula {
        let disjuncts = self
            .definition
            .iter()
            .map(|b| match b {
                Body::True => Formula::Const(TruthValue::True),
                Body::False => Formula::Const(TruthValue::False),
                Body::Conj(lits) => Formula::conj(lits),
            })
            .collect();
        Formula::iff(Formula::lit(crate::syntax::Literal::pos(self.head.clone())), Formula::Or(disjuncts))
    }

    pub fn evaluate(&self, interp: &Interpretation) -> TruthValue {
        evaluate(&self.formula(), interp)
    }
}

impl fmt::Display for Equivalence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <-> ", self.head)?;
        for (i, b) in self.definition.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeakCompletion {
    pub equivalences: Vec<Equivalence>,
}

impl WeakCompletion {
    pub fn get(&self, head: &Subject) -> Option<&Equivalence> {
        self.equivalences.iter().find(|e| &e.head == head)
    }

    pub fn len(&self) -> usize {
        self.equivalences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.equivalences.is_empty()
    }

    /// Whether `interp` maps every equivalence to ⊤.
    pub fn is_model(&self, interp: &Interpretation) -> bool {
        self.equivalences.iter().all(|e| e.evaluate(interp).is_true())
    }
}

/// Equivalences sorted by head. Undefined atoms get none.
pub fn weak_complete(program: &Program) -> WeakCompletion {
    let mut by_head: BTreeMap<&Subject, Vec<Body>> = BTreeMap::new();
    for c in program.clauses() {
        by_head.entry(&c.head).or_default().push(c.body.clone());
    }
    let equivalences = by_head
        .into_iter()
        .map(|(head, mut bodies)| {
            if bodies.len() > 1 {
                bodies.retain(|b| *b != Body::False);
            }
            Equivalence { head: head.clone(), definition: bodies }
        })
        .collect();
    WeakCompletion { equivalences }
}
