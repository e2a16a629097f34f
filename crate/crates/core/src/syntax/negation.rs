//! Auxiliary-predicate encoding of negative conclusions.
//!
//! A negative head `¬p(X)` is written as `p′(X)` together with the bridge
//! clause `p(X) ← ¬p′(X)` and the denial `U ← p(X) ∧ p′(X)`.

use std::collections::BTreeMap;

use super::atom::{Atom, Literal, Term};
use super::program::{Clause, IntegrityConstraint};
use super::SyntaxError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeHead {
    pub predicate: String,
    pub primed: String,
    pub bridge: Clause,
    pub constraint: IntegrityConstraint,
}

pub fn primed_name(predicate: &str) -> String {
    format!("n{predicate}")
}

/// Hands out encodings and remembers which names it generated, so that a
/// primed predicate is never primed again.
#[derive(Debug, Default, Clone)]
pub struct NegativeHeadEncoder {
    encoded: BTreeMap<(String, usize), NegativeHead>,
}

impl NegativeHeadEncoder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_generated(&self, predicate: &str) -> bool {
        self.encoded.values().any(|e| e.primed == predicate)
    }

    /// Returns the encoding and whether it is new to this encoder.
    pub fn encode(&mut self, predicate: &str, arity: usize) -> Result<(NegativeHead, bool), SyntaxError> {
        if self.is_generated(predicate) {
            return Err(SyntaxError::DoublePrime(predicate.to_string()));
        }
        let key = (predicate.to_string(), arity);
        if let Some(e) = self.encoded.get(&key) {
            return Ok((e.clone(), false));
        }
        let e = encode_negative_head(predicate, arity);
        self.encoded.insert(key, e.clone());
        Ok((e, true))
    }

    pub fn encodings(&self) -> impl Iterator<Item = &NegativeHead> {
        self.encoded.values()
    }
}

/// The schema for one predicate, over variables `X1..Xn`.
pub fn encode_negative_head(predicate: &str, arity: usize) -> NegativeHead {
    let args: Vec<Term> = match arity {
        1 => vec![Term::variable("X")],
        n => (1..=n).map(|i| Term::variable(format!("X{i}"))).collect(),
    };
    let primed = primed_name(predicate);
    let p = Atom::new(predicate, args.clone());
    let p_prime = Atom::new(primed.clone(), args);
    NegativeHead {
        predicate: predicate.to_string(),
        primed,
        bridge: Clause::rule(p.clone(), vec![Literal::neg(p_prime.clone())]),
        constraint: IntegrityConstraint::new(vec![Literal::pos(p), Literal::pos(p_prime)]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_becomes_nadd() {
        let e = encode_negative_head("add", 1);
        assert_eq!(e.primed, "nadd");
        assert_eq!(e.bridge.to_string(), "add(X) :- not nadd(X).");
        assert_eq!(e.constraint.to_string(), ":- add(X), nadd(X).");
    }

    #[test]
    fn zero_arity_schema() {
        let e = encode_negative_head("p", 0);
        assert_eq!(e.bridge.to_string(), "p :- not np.");
        assert_eq!(e.constraint.to_string(), ":- p, np.");
    }

    #[test]
    fn distinct_predicates_give_distinct_constraints() {
        let mut enc = NegativeHeadEncoder::new();
        let (a, _) = enc.encode("add", 1).unwrap();
        let (b, _) = enc.encode("cig", 1).unwrap();
        assert_ne!(a.constraint, b.constraint);
        assert_ne!(a.bridge, b.bridge);
    }

    #[test]
    fn primed_predicates_are_not_primed_again() {
        let mut enc = NegativeHeadEncoder::new();
        enc.encode("add", 1).unwrap();
        assert_eq!(enc.encode("nadd", 1), Err(SyntaxError::DoublePrime("nadd".into())));
        let (_, fresh) = enc.encode("add", 1).unwrap();
        assert!(!fresh);
    }
}
