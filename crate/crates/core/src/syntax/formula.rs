//! Ground propositional formulas and their Łukasiewicz evaluation.

use super::atom::Literal;
use super::interpretation::Interpretation;
use super::truth::TruthValue;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    Const(TruthValue),
    Lit(Literal),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    /// `head ← body`
    If(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn lit(l: Literal) -> Self {
        Formula::Lit(l)
    }

    pub fn negation(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn implied_by(head: Formula, body: Formula) -> Self {
        Formula::If(Box::new(head), Box::new(body))
    }

    pub fn iff(a: Formula, b: Formula) -> Self {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn conj(lits: &[Literal]) -> Self {
        Formula::And(lits.iter().cloned().map(Formula::Lit).collect())
    }
}

/// Total on ground formulas. Empty conjunctions are ⊤, empty disjunctions ⊥.
pub fn evaluate(formula: &Formula, interp: &Interpretation) -> TruthValue {
    match formula {
        Formula::Const(v) => *v,
        Formula::Lit(l) => interp.literal(l),
        Formula::Not(f) => !evaluate(f, interp),
        Formula::And(fs) => fs.iter().fold(TruthValue::True, |acc, f| acc.and(evaluate(f, interp))),
        Formula::Or(fs) => fs.iter().fold(TruthValue::False, |acc, f| acc.or(evaluate(f, interp))),
        Formula::If(h, b) => evaluate(h, interp).implied_by(evaluate(b, interp)),
        Formula::Iff(a, b) => evaluate(a, interp).equiv(evaluate(b, interp)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::atom::{Atom, Subject};

    fn lit(name: &str) -> Formula {
        Formula::lit(Literal::pos(Atom::prop(name)))
    }

    #[test]
    fn implication_and_disjunction_differ_on_unknowns() {
        let i = Interpretation::empty();
        assert_eq!(evaluate(&Formula::implied_by(lit("a"), lit("b")), &i), TruthValue::True);
        let a_or_not_b = Formula::Or(vec![lit("a"), Formula::negation(lit("b"))]);
        assert_eq!(evaluate(&a_or_not_b, &i), TruthValue::Unknown);
    }

    #[test]
    fn negation_of_false_atom() {
        let a: Subject = Atom::prop("a").into();
        let i = Interpretation::new(Default::default(), [a].into()).unwrap();
        assert_eq!(evaluate(&Formula::negation(lit("a")), &i), TruthValue::True);
    }
}
