//! Contextual abductive reasoning under the weak completion semantics.
//!
//! Programs are sets of clauses over a three-valued Łukasiewicz logic with
//! inspection points. The crate computes least models, minimal explanations
//! of observations, and classifies how two observations relate through
//! their explanations.
//!
//! ```
//! use wcs_core::abduction::{build_framework, explain, Explanation};
//! use wcs_core::frontend::{parse_observation, parse_program};
//!
//! let p = parse_program("a :- b.\na :- c.").unwrap();
//! let fw = build_framework(&p.program, &p.ics, &Default::default(), &Default::default()).unwrap();
//! let o = parse_observation("a").unwrap();
//! let out = explain(&fw, &o, &Explanation::empty(), Default::default()).unwrap();
//! assert_eq!(out.explanations.len(), 2);
//! ```

pub mod abduction;
pub mod classify;
pub mod fixtures;
pub mod frontend;
pub mod semantics;
pub mod syntax;
