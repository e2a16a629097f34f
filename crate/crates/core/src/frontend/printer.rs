use std::fmt::Write;

use super::parser::ParsedProgram;
use crate::abduction::Explanation;
use crate::syntax::{IntegrityConstraint, Program};

/// Program text that parses back to the same clauses and denials.
pub fn print_program(program: &Program, ics: &[IntegrityConstraint]) -> String {
    let mut out = String::new();
    for c in program.clauses() {
        writeln!(out, "{c}").unwrap();
    }
    for ic in ics {
        writeln!(out, "{ic}").unwrap();
    }
    out
}

pub fn print_parsed(p: &ParsedProgram) -> String {
    print_program(&p.program, &p.ics)
}

/// Context file text, one `subject = value.` per line.
pub fn print_context(e: &Explanation) -> String {
    let mut out = String::new();
    for f in e.facts() {
        writeln!(out, "{f}.").unwrap();
    }
    out
}
