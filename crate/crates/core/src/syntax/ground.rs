//! Grounding over a finite constant pool.

use std::collections::BTreeSet;

use super::atom::Substitution;
use super::program::{IntegrityConstraint, Program};
use super::SyntaxError;

/// Every substitution of `vars` by constants of `pool`, in lexicographic order.
fn substitutions(vars: &BTreeSet<String>, pool: &BTreeSet<String>) -> Vec<Substitution> {
    let mut out = vec![Substitution::new()];
    for v in vars {
        let mut next = Vec::with_capacity(out.len() * pool.len());
        for s in &out {
            for c in pool {
                let mut s = s.clone();
                s.insert(v.clone(), c.clone());
                next.push(s);
            }
        }
        out = next;
    }
    out
}

/// Instantiates every clause under all substitutions over the program's own
/// constants plus `extra`. Clause order is kept; each clause's instances
/// follow in lexicographic substitution order.
pub fn ground(program: &Program, extra: &BTreeSet<String>) -> Result<Program, SyntaxError> {
    let mut pool = program.constants();
    pool.extend(extra.iter().cloned());
    ground_with_pool(program, &pool)
}

/// Grounds over exactly `pool`.
pub fn ground_with_pool(program: &Program, pool: &BTreeSet<String>) -> Result<Program, SyntaxError> {
    let mut out = Program::new();
    for clause in program.clauses() {
        let vars = clause.variables();
        if vars.is_empty() {
            out.push(clause.clone());
            continue;
        }
        if pool.is_empty() {
            return Err(SyntaxError::NoConstants);
        }
        for s in substitutions(&vars, pool) {
            out.push(clause.substitute(&s));
        }
    }
    Ok(out)
}

pub fn ground_constraints(
    ics: &[IntegrityConstraint],
    pool: &BTreeSet<String>,
) -> Result<Vec<IntegrityConstraint>, SyntaxError> {
    let mut out: Vec<IntegrityConstraint> = Vec::new();
    for ic in ics {
        let vars = ic.variables();
        if !vars.is_empty() && pool.is_empty() {
            return Err(SyntaxError::NoConstants);
        }
        for s in substitutions(&vars, pool) {
            let g = ic.substitute(&s);
            if !out.contains(&g) {
                out.push(g);
            }
        }
    }
    Ok(out)
}
