use crate::syntax::{IntegrityConstraint, Interpretation, TruthValue};

/// A denial `U ← body` is true iff its body is unknown or false.
pub fn satisfies(interp: &Interpretation, ic: &IntegrityConstraint) -> bool {
    TruthValue::Unknown.implied_by(interp.conjunction(&ic.body)).is_true()
}

pub fn satisfies_ics(interp: &Interpretation, ics: &[IntegrityConstraint]) -> bool {
    ics.iter().all(|ic| satisfies(interp, ic))
}

pub fn violated<'a>(interp: &Interpretation, ics: &'a [IntegrityConstraint]) -> Vec<&'a IntegrityConstraint> {
    ics.iter().filter(|ic| !satisfies(interp, ic)).collect()
}
