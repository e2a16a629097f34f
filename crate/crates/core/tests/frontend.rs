mod support;

use wcs_core::abduction::{explain, Explanation, Scope};
use wcs_core::frontend::{
    parse_context, parse_literals, parse_observation, parse_program, print_context, print_parsed, subjects,
    to_json, ExplanationsDoc, ModelDoc, ParseError,
};
use wcs_core::semantics::least_model;
use wcs_core::syntax::{Atom, Body, Clause, InspectKind, Literal, Subject};

use support::*;

fn err(text: &str) -> ParseError {
    parse_program(text).unwrap_err()
}

#[test]
fn p_add_listing_parses() {
    let p = parsed("p_add.lp");
    assert_eq!(p.program.len(), 7);
    assert_eq!(p.ics.len(), 1);
    let first = &p.program.clauses()[0];
    assert_eq!(first.to_string(), "nadd(X) :- inex(X), not ab1(X).");
    assert_eq!(p.program.clauses()[3].body, Body::False);
    assert_eq!(p.program.clauses()[6], Clause::fact(Atom::ground("cig", &["a"]), true));
}

#[test]
fn inspection_wrappers_parse() {
    let p = parse_program("a :- inspect(b), not inspect_neg(c(x)).").unwrap();
    let body = p.program.clauses()[0].body.literals().to_vec();
    assert_eq!(body[0], Literal::pos(Subject::Inspect(InspectKind::Positive, Atom::prop("b"))));
    assert_eq!(body[1], Literal::neg(Subject::Inspect(InspectKind::Negative, Atom::ground("c", &["x"]))));
}

#[test]
fn printing_round_trips_fixtures() {
    for name in ["p_add.lp", "p_add_insp.lp", "p_fire.lp", "toy.lp", "empty.lp"] {
        let p = parsed(name);
        assert_eq!(parse_program(&print_parsed(&p)).unwrap(), p, "{name}");
    }
}

#[test]
fn errors_carry_locations() {
    let e = err("a :- b.\nc :- d");
    assert_eq!((e.line, e.col), (2, 7));
    let e = err("a :- inspect(inspect(b)).");
    assert!(e.message.contains("nested inspection"), "{e}");
    let e = err("inspect(a) :- b.");
    assert_eq!((e.line, e.col), (1, 1));
    assert!(e.message.contains("cannot be a rule head"), "{e}");
    let e = err("not :- a.");
    assert_eq!(e.line, 1);
    assert_eq!(err("a :- b;").to_string(), "1:7: unexpected character `;`");
}

#[test]
fn observations_and_queries() {
    let o = parse_observation("storm, not rained.").unwrap();
    assert_eq!(o.to_string(), "not rained, storm");
    assert!(parse_observation("inspect(a)").is_err());
    assert!(parse_observation("p(X)").is_err());
    assert!(parse_observation("").is_err());
    assert_eq!(parse_literals("~a, b").unwrap().len(), 2);
}

#[test]
fn contexts_round_trip() {
    let ctx = parse_context(&fixture("storm_lightning.ctx")).unwrap();
    assert_eq!(ctx, expl(&[fact("lightning", true), fact("dry", true)]));
    assert_eq!(parse_context(&print_context(&ctx)).unwrap(), ctx);
    assert!(parse_context("a = maybe.").is_err());
    assert!(parse_context("p(X) = true.").is_err());
    assert_eq!(parse_context("").unwrap(), Explanation::empty());
}

#[test]
fn model_document() {
    let fw = framework("p_add.lp", &[]);
    let doc = ModelDoc::new(&least_model(fw.program()).unwrap(), &subjects(&fw));
    assert_eq!(doc.text(), "⟨{ab1(a), add(a), cig(a), inex(a)}, {ab2(a), nadd(a)}, {}⟩");
    let json: serde_json::Value = serde_json::from_str(&to_json(&doc)).unwrap();
    assert_eq!(json["false"], serde_json::json!(["ab2(a)", "nadd(a)"]));
}

#[test]
fn empty_program_model() {
    let p = parsed("empty.lp");
    let doc = ModelDoc::new(&least_model(&p.program).unwrap(), &p.program.atoms());
    assert_eq!(doc.text(), "⟨{}, {}, {}⟩");
}

#[test]
fn explanation_document() {
    let fw = framework("p_add_insp.lp", &["b"]);
    let empty = Explanation::empty();
    let outcome = explain(&fw, &obs_b("add"), &empty, Default::default()).unwrap();
    let doc = ExplanationsDoc::new(&fw, &outcome, Scope::Context(&empty));
    let json: serde_json::Value = serde_json::from_str(&to_json(&doc)).unwrap();
    assert_eq!(json["explanations"][0]["facts"], serde_json::json!(["cig(b) = false"]));
    assert_eq!(json["already_entailed"], false);
    let falses = json["explanations"][0]["model"]["false"].as_array().unwrap();
    assert!(falses.contains(&"inspect(cig(b))".into()));
    assert!(doc.text().starts_with("E1 = {cig(b) = false}\n  model ⟨"));
}

fn obs_b(p: &str) -> wcs_core::abduction::Observation {
    wcs_core::abduction::Observation::new([Literal::pos(Atom::ground(p, &["b"]))]).unwrap()
}
