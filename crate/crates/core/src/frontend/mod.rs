//! Surface syntax for programs, observations and contexts, plus result
//! serialization.

mod lexer;
mod parser;
mod printer;
mod serialize;

use std::fmt;

pub use parser::{parse_context, parse_literals, parse_observation, parse_program, ParsedProgram};
pub use printer::{print_context, print_parsed, print_program};
pub use serialize::{
    fact_names, subjects, to_json, ExplanationDoc, ExplanationsDoc, Format, GroundingDoc, ModelDoc,
    ReportDoc, WitnessDoc,
};

/// A syntax error with its 1-based source location.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError { line, col, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}
