use std::collections::BTreeSet;

use super::explanation::{AbducibleFact, Explanation, Observation};
use super::AbductionError;
use crate::semantics::IndexedProgram;
use crate::syntax::{
    ground_constraints, ground_with_pool, Atom, Clause, IntegrityConstraint, Interpretation, Literal,
    Program, Subject, TruthValue,
};

/// Where the producers visible to an explanation's inspection facts come from.
#[derive(Debug, Clone, Copy)]
pub enum Scope<'a> {
    /// The explanation itself plus a fixed context.
    Context(&'a Explanation),
    /// The explanation alone; positive inspection facts may stay pending.
    Open,
}

/// A ground program with its integrity constraints and abducible pool.
#[derive(Debug, Clone)]
pub struct AbductiveFramework {
    program: Program,
    ics: Vec<IntegrityConstraint>,
    pool: Vec<Subject>,
    non_abducibles: BTreeSet<Atom>,
    indexed: IndexedProgram,
    pool_ids: Vec<usize>,
}

/// Grounds `program` and `ics` over their constants plus `extra_constants`,
/// adds `A ← A` for each non-abducible atom and collects the abducible pool.
pub fn build_framework(
    program: &Program,
    ics: &[IntegrityConstraint],
    extra_constants: &BTreeSet<String>,
    non_abducibles: &BTreeSet<Atom>,
) -> Result<AbductiveFramework, AbductionError> {
    let mut constants = program.constants();
    for ic in ics {
        for l in &ic.body {
            l.subject.atom().collect_constants(&mut constants);
        }
    }
    for a in non_abducibles {
        if !a.is_ground() {
            return Err(AbductionError::NotGround(a.to_string()));
        }
        a.collect_constants(&mut constants);
    }
    constants.extend(extra_constants.iter().cloned());

    let mut ground = ground_with_pool(program, &constants)?;
    let ics = ground_constraints(ics, &constants)?;
    for a in non_abducibles {
        let s = Subject::Atom(a.clone());
        if ground.is_defined(&s) {
            return Err(AbductionError::NonAbducibleDefined(a.to_string()));
        }
        ground.push(Clause::rule(s.clone(), vec![Literal::pos(s)]));
    }

    let undefined = ground.undefined_atoms();
    let pool: Vec<Subject> = undefined
        .iter()
        .filter(|s| match s {
            Subject::Atom(_) => true,
            Subject::Inspect(_, a) => undefined.contains(&Subject::Atom(a.clone())),
        })
        .cloned()
        .collect();

    let ic_subjects = ics.iter().flat_map(|ic| ic.body.iter().map(|l| l.subject.clone()));
    let indexed = IndexedProgram::with_subjects(&ground, ic_subjects.chain(pool.iter().cloned()));
    let pool_ids = pool.iter().map(|s| indexed.id(s).expect("pool is indexed")).collect();
    Ok(AbductiveFramework {
        program: ground,
        ics,
        pool,
        non_abducibles: non_abducibles.clone(),
        indexed,
        pool_ids,
    })
}

impl AbductiveFramework {
    /// Framework with no constraints, extra constants or non-abducibles.
    pub fn from_program(program: &Program) -> Result<Self, AbductionError> {
        build_framework(program, &[], &BTreeSet::new(), &BTreeSet::new())
    }

    /// The ground program, including `A ← A` guards.
    pub fn program(&self) -> &Program {
        &self.program
    }

    pub fn ics(&self) -> &[IntegrityConstraint] {
        &self.ics
    }

    pub fn non_abducibles(&self) -> &BTreeSet<Atom> {
        &self.non_abducibles
    }

    /// Abducible subjects in canonical order. Each has two facts, `⊤` and `⊥`.
    pub fn pool(&self) -> &[Subject] {
        &self.pool
    }

    pub fn pool_facts(&self) -> Vec<AbducibleFact> {
        self.pool
            .iter()
            .flat_map(|s| [AbducibleFact::new(s.clone(), true), AbducibleFact::new(s.clone(), false)])
            .collect()
    }

    pub fn is_abducible(&self, subject: &Subject) -> bool {
        self.pool.binary_search(subject).is_ok()
    }

    pub(crate) fn indexed(&self) -> &IndexedProgram {
        &self.indexed
    }

    /// Facts that fill in pool wrappers left open by `e`: a wrapper with no
    /// matching producer in scope is false.
    pub(crate) fn closure(&self, e: &Explanation, scope: Scope<'_>) -> Vec<(usize, bool)> {
        let mut out = Vec::new();
        for (s, &id) in self.pool.iter().zip(&self.pool_ids) {
            if !s.is_inspection() || e.value_of(s).is_some() {
                continue;
            }
            let producer = AbducibleFact::new(s.clone(), true).matching_producer().expect("wrapper");
            let present =
                e.contains(&producer) || matches!(scope, Scope::Context(c) if c.contains(&producer));
            if !present {
                out.push((id, false));
            }
        }
        out
    }

    /// Closure facts as abducible facts, restricted to wrappers that can
    /// influence `o`.
    pub fn closure_facts(&self, e: &Explanation, scope: Scope<'_>, o: &Observation) -> Vec<AbducibleFact> {
        let cone = self.indexed.cone(o.literals().filter_map(|l| self.indexed.id(&l.subject)));
        self.closure(e, scope)
            .into_iter()
            .filter(|&(id, _)| cone[id])
            .map(|(id, v)| AbducibleFact::new(self.indexed.subject(id).clone(), v))
            .collect()
    }

    pub(crate) fn facts_with_closure(&self, e: &Explanation, scope: Scope<'_>) -> Vec<(usize, bool)> {
        let mut facts: Vec<(usize, bool)> =
            e.facts().filter_map(|f| self.indexed.id(&f.subject).map(|i| (i, f.value))).collect();
        facts.extend(self.closure(e, scope));
        facts
    }

    /// Least model of the program plus the given fact ids.
    pub(crate) fn values_for(&self, facts: &[(usize, bool)]) -> Vec<TruthValue> {
        // Φ on a finite ground program always converges within the cap.
        self.indexed.fixpoint(facts).expect("Φ converges on ground programs").0
    }

    pub(crate) fn values(&self, e: &Explanation, scope: Scope<'_>) -> Vec<TruthValue> {
        self.values_for(&self.facts_with_closure(e, scope))
    }

    /// Least model of P ∪ E plus the inspection closure under `scope`.
    pub fn model(&self, e: &Explanation, scope: Scope<'_>) -> Interpretation {
        self.indexed.interpretation(&self.values(e, scope))
    }

    /// Least model of the program alone.
    pub fn base_model(&self) -> Interpretation {
        self.indexed.interpretation(&self.values_for(&[]))
    }

    pub(crate) fn observation_value(&self, values: &[TruthValue], o: &Observation) -> TruthValue {
        o.literals().fold(TruthValue::True, |acc, l| acc.and(self.indexed.literal_value(values, l)))
    }

    pub(crate) fn ics_hold(&self, values: &[TruthValue]) -> bool {
        self.ics
            .iter()
            .all(|ic| TruthValue::Unknown.implied_by(self.indexed.conjunction(values, &ic.body)).is_true())
    }

    /// Whether `e` validates under `scope`: inspection facts are grounded.
    pub fn validate(&self, e: &Explanation, scope: Scope<'_>) -> bool {
        match scope {
            Scope::Context(c) => validate_inspection(e, c),
            Scope::Open => validate_inspection_open(e),
        }
    }

    /// The full explanation test: `e` is drawn from the pool, agrees with the
    /// context, its inspection facts are grounded, it makes `o` true and
    /// violates no constraint.
    pub fn check(&self, e: &Explanation, o: &Observation, scope: Scope<'_>) -> bool {
        if !e.facts().all(|f| self.is_abducible(&f.subject)) {
            return false;
        }
        if let Scope::Context(c) = scope {
            if !e.is_consistent_with(c) {
                return false;
            }
        }
        if !self.validate(e, scope) {
            return false;
        }
        let values = self.values(e, scope);
        self.observation_value(&values, o).is_true() && self.ics_hold(&values)
    }
}

/// Inspection facts in `e` against the producers of `e ∪ ctx`: a positive
/// fact needs its matching producer (and a non-empty context), a negative
/// fact must not have one.
pub fn validate_inspection(e: &Explanation, ctx: &Explanation) -> bool {
    e.facts().filter(|f| f.is_inspection()).all(|f| {
        let p = f.matching_producer().expect("inspection fact");
        let present = e.contains(&p) || ctx.contains(&p);
        if f.value {
            !ctx.is_empty() && present
        } else {
            !present
        }
    })
}

/// Like [`validate_inspection`] with no context yet: positive facts may be
/// pending, negative facts must not contradict producers in `e`.
pub fn validate_inspection_open(e: &Explanation) -> bool {
    e.facts()
        .filter(|f| f.is_inspection() && !f.value)
        .all(|f| !e.contains(&f.matching_producer().expect("inspection fact")))
}

/// Whether `e` explains `o` given context `ctx`.
pub fn check_explanation(
    fw: &AbductiveFramework,
    e: &Explanation,
    o: &Observation,
    ctx: &Explanation,
) -> bool {
    fw.check(e, o, Scope::Context(ctx))
}
