//! C ABI for the abduction engine.
//!
//! A program is parsed once into an opaque [`WcsProgram`] handle. Each query
//! grounds it over the program's constants, the constants given at load time
//! and those mentioned in the query, then returns a JSON document through an
//! out-parameter. Returned strings are owned by the caller and released with
//! [`wcs_string_free`]. On failure the message is available from
//! [`wcs_last_error`] on the same thread.

use std::cell::RefCell;
use std::collections::BTreeSet;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use wcs_core::abduction::{
    build_framework, entails, explain, AbductionError, AbductiveFramework, Explanation, Reasoning, Scope,
};
use wcs_core::classify::{classify, ClassifyOptions, Relation};
use wcs_core::frontend::{
    parse_context, parse_literals, parse_observation, parse_program, to_json, ExplanationsDoc, ModelDoc,
    ParsedProgram, ReportDoc,
};
use wcs_core::semantics::{least_model, violated};
use wcs_core::syntax::{ground_constraints, ground_with_pool, Literal};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WcsStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Program, observation, query or context text did not parse.
    ParseError = 3,
    /// The request is well formed but cannot be carried out.
    InvalidRequest = 4,
    /// The observation (or primary observation) has no explanation.
    NoExplanation = 5,
    /// The least model violates an integrity constraint. The model is
    /// still written.
    ConstraintViolated = 6,
    /// An internal error.
    Internal = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WcsReasoning {
    Skeptical = 0,
    Credulous = 1,
}

/// A parsed program with its extra grounding constants.
pub struct WcsProgram {
    parsed: ParsedProgram,
    constants: BTreeSet<String>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure {
    status: WcsStatus,
    message: String,
}

impl Failure {
    fn new(status: WcsStatus, message: impl Into<String>) -> Self {
        Failure { status, message: message.into() }
    }
}

impl From<AbductionError> for Failure {
    fn from(e: AbductionError) -> Self {
        let status = match e {
            AbductionError::NoExplanation(_) | AbductionError::NoPrimaryExplanation(_) => {
                WcsStatus::NoExplanation
            }
            _ => WcsStatus::InvalidRequest,
        };
        Failure::new(status, e.to_string())
    }
}

fn set_error(message: Option<String>) {
    let c = message.map(|m| CString::new(m.replace('\0', " ")).expect("no interior nul"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

/// Runs `f`, records its error and maps panics to `Internal`.
fn guard(f: impl FnOnce() -> Result<WcsStatus, Failure>) -> WcsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => {
            if status == WcsStatus::Ok {
                set_error(None);
            }
            status
        }
        Ok(Err(e)) => {
            set_error(Some(e.message));
            e.status
        }
        Err(_) => {
            set_error(Some("internal error".into()));
            WcsStatus::Internal
        }
    }
}

/// # Safety
/// `p` is null or a NUL-terminated string.
unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::new(WcsStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::new(WcsStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

/// # Safety
/// As for [`text`]; null yields `None`.
unsafe fn optional_text<'a>(p: *const c_char, what: &str) -> Result<Option<&'a str>, Failure> {
    if p.is_null() {
        Ok(None)
    } else {
        text(p, what).map(Some)
    }
}

/// # Safety
/// `p` is null or a handle from [`wcs_program_parse`].
unsafe fn program<'a>(p: *const WcsProgram) -> Result<&'a WcsProgram, Failure> {
    p.as_ref().ok_or_else(|| Failure::new(WcsStatus::NullArgument, "program is null"))
}

/// # Safety
/// `out` is null or valid for writing a pointer.
unsafe fn write_json(out: *mut *mut c_char, json: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::new(WcsStatus::NullArgument, "output pointer is null"));
    }
    *out = CString::new(json).map_err(|e| Failure::new(WcsStatus::Internal, e.to_string()))?.into_raw();
    Ok(())
}

fn parse_error(what: &str, e: impl std::fmt::Display) -> Failure {
    Failure::new(WcsStatus::ParseError, format!("{what} {e}"))
}

fn constants_of<'a>(lits: impl IntoIterator<Item = &'a Literal>) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for l in lits {
        l.subject.atom().collect_constants(&mut out);
    }
    out
}

impl WcsProgram {
    fn framework(&self, mut extra: BTreeSet<String>) -> Result<AbductiveFramework, Failure> {
        extra.extend(self.constants.iter().cloned());
        Ok(build_framework(&self.parsed.program, &self.parsed.ics, &extra, &BTreeSet::new())?)
    }
}

/// Parses program text. `constants` is an optional comma-separated list of
/// extra grounding constants. On success `*out` receives a handle to release
/// with [`wcs_program_free`].
///
/// # Safety
/// String arguments are null or NUL-terminated; `out` is valid for writing.
#[no_mangle]
pub unsafe extern "C" fn wcs_program_parse(
    source: *const c_char,
    constants: *const c_char,
    out: *mut *mut WcsProgram,
) -> WcsStatus {
    guard(|| {
        let source = text(source, "source")?;
        let constants = optional_text(constants, "constants")?
            .map(|c| c.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect())
            .unwrap_or_default();
        if out.is_null() {
            return Err(Failure::new(WcsStatus::NullArgument, "output pointer is null"));
        }
        let parsed = parse_program(source).map_err(|e| parse_error("program", e))?;
        *out = Box::into_raw(Box::new(WcsProgram { parsed, constants }));
        Ok(WcsStatus::Ok)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `program` is null or a handle from [`wcs_program_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wcs_program_free(program: *mut WcsProgram) {
    if !program.is_null() {
        drop(Box::from_raw(program));
    }
}

/// Least model as `{"true": [...], "false": [...], "unknown": [...]}`.
/// Returns `ConstraintViolated` (with the model written) when a denial fails.
///
/// # Safety
/// `program` is a live handle; `out` is valid for writing.
#[no_mangle]
pub unsafe extern "C" fn wcs_model(program: *const WcsProgram, out: *mut *mut c_char) -> WcsStatus {
    guard(|| {
        let p = self::program(program)?;
        let mut pool = p.parsed.program.constants();
        for ic in &p.parsed.ics {
            pool.extend(constants_of(&ic.body));
        }
        pool.extend(p.constants.iter().cloned());
        let invalid = |e: &dyn std::fmt::Display| Failure::new(WcsStatus::InvalidRequest, e.to_string());
        let ground = ground_with_pool(&p.parsed.program, &pool).map_err(|e| invalid(&e))?;
        let ics = ground_constraints(&p.parsed.ics, &pool).map_err(|e| invalid(&e))?;
        let model = least_model(&ground).map_err(|e| invalid(&e))?;
        write_json(out, to_json(&ModelDoc::new(&model, &ground.atoms())))?;
        let bad = violated(&model, &ics);
        if bad.is_empty() {
            return Ok(WcsStatus::Ok);
        }
        let list: Vec<String> = bad.iter().map(ToString::to_string).collect();
        set_error(Some(format!("violated: {}", list.join(" "))));
        Ok(WcsStatus::ConstraintViolated)
    })
}

/// Minimal explanations of `observation` as
/// `{"explanations": [{"facts": [...], "model": {...}}], "already_entailed": bool}`.
/// `context` is optional context-file text (`subject = true.` lines). An
/// empty list is returned with status `Ok`.
///
/// # Safety
/// `program` is a live handle; strings are null or NUL-terminated; `out` is
/// valid for writing.
#[no_mangle]
pub unsafe extern "C" fn wcs_explain(
    program: *const WcsProgram,
    observation: *const c_char,
    context: *const c_char,
    out: *mut *mut c_char,
) -> WcsStatus {
    guard(|| {
        let p = self::program(program)?;
        let o = parse_observation(text(observation, "observation")?)
            .map_err(|e| parse_error("observation", e))?;
        let ctx = match optional_text(context, "context")? {
            Some(t) => parse_context(t).map_err(|e| parse_error("context", e))?,
            None => Explanation::empty(),
        };
        let mut extra = o.constants();
        for f in ctx.facts() {
            f.subject.atom().collect_constants(&mut extra);
        }
        let fw = p.framework(extra)?;
        let outcome = explain(&fw, &o, &ctx, Default::default())?;
        write_json(out, to_json(&ExplanationsDoc::new(&fw, &outcome, Scope::Context(&ctx))))?;
        Ok(WcsStatus::Ok)
    })
}

/// Value of the conjunction `query` across the explanations of
/// `observation`, as `{"value": "TRUE" | "FALSE" | "UNKNOWN"}`.
///
/// # Safety
/// As for [`wcs_explain`].
#[no_mangle]
pub unsafe extern "C" fn wcs_entail(
    program: *const WcsProgram,
    observation: *const c_char,
    query: *const c_char,
    mode: WcsReasoning,
    out: *mut *mut c_char,
) -> WcsStatus {
    guard(|| {
        let p = self::program(program)?;
        let o = parse_observation(text(observation, "observation")?)
            .map_err(|e| parse_error("observation", e))?;
        let q = parse_literals(text(query, "query")?).map_err(|e| parse_error("query", e))?;
        let mut extra = o.constants();
        extra.extend(constants_of(&q));
        let fw = p.framework(extra)?;
        let mode = match mode {
            WcsReasoning::Skeptical => Reasoning::Skeptical,
            WcsReasoning::Credulous => Reasoning::Credulous,
        };
        let v = entails(&fw, &o, &q, mode, Default::default())?;
        write_json(out, to_json(&serde_json::json!({ "value": v })))?;
        Ok(WcsStatus::Ok)
    })
}

/// Classifies `o2` against `o1` under `relation` (`side-effect`,
/// `contested`, `relevant` or `joint`), as
/// `{"relation": ..., "labels": [...], "witnesses": [...]}`. No applicable
/// label gives `"labels": ["NONE"]` with status `Ok`.
///
/// # Safety
/// As for [`wcs_explain`].
#[no_mangle]
pub unsafe extern "C" fn wcs_classify(
    program: *const WcsProgram,
    relation: *const c_char,
    o1: *const c_char,
    o2: *const c_char,
    out: *mut *mut c_char,
) -> WcsStatus {
    guard(|| {
        let p = self::program(program)?;
        let relation: Relation = text(relation, "relation")?
            .parse()
            .map_err(|e: String| Failure::new(WcsStatus::InvalidRequest, e))?;
        let o1 = parse_observation(text(o1, "o1")?).map_err(|e| parse_error("o1", e))?;
        let o2 = parse_observation(text(o2, "o2")?).map_err(|e| parse_error("o2", e))?;
        let mut extra = o1.constants();
        extra.extend(o2.constants());
        let fw = p.framework(extra)?;
        let report = classify(&fw, relation, &o1, &o2, ClassifyOptions::default())?;
        write_json(out, to_json(&ReportDoc::new(&report)))?;
        Ok(WcsStatus::Ok)
    })
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call on this thread; do not free.
#[no_mangle]
pub extern "C" fn wcs_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned through an out-parameter. Null is ignored.
///
/// # Safety
/// `s` is null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wcs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version, statically allocated.
#[no_mangle]
pub extern "C" fn wcs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
