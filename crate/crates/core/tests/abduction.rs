mod support;

use std::collections::BTreeSet;

use wcs_core::abduction::{
    build_framework, check_explanation, dominates, entails, explain, explain_open, oracle_explain,
    validate_inspection, validate_inspection_open, AbductionError, AbductiveFramework, ExplainOptions,
    Explanation, Minimality, Observation, Reasoning, Scope, ORACLE_LIMIT,
};
use wcs_core::frontend::{parse_context, parse_observation, parse_program};
use wcs_core::syntax::{Atom, InspectKind, Literal, TruthValue};

use support::*;

use InspectKind::{Negative, Positive};

fn fw_of(text: &str) -> AbductiveFramework {
    let p = parse_program(text).unwrap();
    build_framework(&p.program, &p.ics, &BTreeSet::new(), &BTreeSet::new()).unwrap()
}

fn explain_ctx(fw: &AbductiveFramework, o: &str, ctx: &Explanation) -> Vec<String> {
    let o = parse_observation(o).unwrap();
    names(&explain(fw, &o, ctx, ExplainOptions::default()).unwrap().explanations)
}

#[test]
fn fire_pool() {
    let fw = framework("p_fire.lp", &[]);
    let pool: Vec<String> = fw.pool().iter().map(ToString::to_string).collect();
    assert_eq!(pool.len(), 10, "{pool:?}");
    assert_eq!(fw.pool_facts().len(), 20);
    for s in ["inspect(lightning)", "inspect_neg(dry)", "barbecue", "tempest"] {
        assert!(pool.contains(&s.to_string()), "{s} missing from {pool:?}");
    }
    assert!(!pool.iter().any(|s| s.starts_with("ab") || s == "storm"));
}

#[test]
fn p_add_pool_is_cig_b() {
    let fw = framework("p_add.lp", &["b"]);
    let pool: Vec<String> = fw.pool().iter().map(ToString::to_string).collect();
    assert_eq!(pool, ["cig(b)"]);
}

#[test]
fn insp_pool_excludes_wrappers_over_facts() {
    let fw = framework("p_add_insp.lp", &["b"]);
    let pool: Vec<String> = fw.pool().iter().map(ToString::to_string).collect();
    assert_eq!(pool, ["cig(b)", "inspect(cig(b))"]);
}

#[test]
fn positive_inspection_needs_a_producer_and_a_context() {
    let e = expl(&[inspect(Positive, "lightning", true)]);
    assert!(!validate_inspection(&e, &Explanation::empty()));
    assert!(validate_inspection(&e, &expl(&[fact("lightning", true)])));
    assert!(!validate_inspection(&e, &expl(&[fact("dry", true)])));
    // A producer inside E alone is not enough without a context.
    let own = expl(&[inspect(Positive, "lightning", true), fact("lightning", true)]);
    assert!(!validate_inspection(&own, &Explanation::empty()));
    assert!(validate_inspection_open(&e));
}

#[test]
fn negative_inspection_must_not_meet_its_producer() {
    let e = expl(&[inspect(Negative, "dry", false)]);
    assert!(validate_inspection(&e, &Explanation::empty()));
    assert!(validate_inspection(&e, &expl(&[fact("dry", true)])));
    assert!(!validate_inspection(&e, &expl(&[fact("dry", false)])));
    let clash = expl(&[inspect(Negative, "dry", false), fact("dry", false)]);
    assert!(!validate_inspection_open(&clash));
}

#[test]
fn fire_explanations_in_and_out_of_context() {
    let fw = framework("p_fire.lp", &[]);
    let empty = Explanation::empty();
    assert_eq!(explain_ctx(&fw, "ffire", &empty), ["{barbecue = true, dry = true}"]);
    let ctx = parse_context(&fixture("storm_lightning.ctx")).unwrap();
    assert_eq!(explain_ctx(&fw, "ffire", &ctx), ["{dry = true, inspect(lightning) = true}"]);
    assert_eq!(explain_ctx(&fw, "storm", &empty), ["{lightning = true}", "{tempest = true}"]);
}

#[test]
fn check_explanation_examples() {
    let fw = framework("p_fire.lp", &[]);
    let o = obs(&["ffire"]);
    let ctx = expl(&[fact("lightning", true)]);
    let e = expl(&[fact("dry", true), inspect(Positive, "lightning", true)]);
    assert!(check_explanation(&fw, &e, &o, &ctx));
    assert!(!check_explanation(&fw, &e, &o, &Explanation::empty()));
    // Disagreeing with the context is rejected.
    let clash = expl(&[fact("dry", false), fact("barbecue", true)]);
    assert!(!check_explanation(&fw, &clash, &o, &expl(&[fact("dry", true)])));
    // Non-abducible subjects are rejected.
    assert!(!check_explanation(&fw, &expl(&[fact("storm", true)]), &obs(&["storm"]), &ctx));
}

#[test]
fn explain_agrees_with_oracle_on_fixtures() {
    let opts = ExplainOptions::default();
    let ctx = parse_context(&fixture("storm_lightning.ctx")).unwrap();
    let fw = framework("p_fire.lp", &[]);
    for o in ["ffire", "storm", "smoke", "sirens", "rained", "storm, dry", "ffire, rained"] {
        let o = parse_observation(o).unwrap();
        for c in [&Explanation::empty(), &ctx] {
            let fast = explain(&fw, &o, c, opts).unwrap().explanations;
            assert_eq!(fast, oracle_explain(&fw, &o, Some(c), opts).unwrap(), "{o}");
        }
        let open = explain_open(&fw, &o, opts).unwrap().explanations;
        assert_eq!(open, oracle_explain(&fw, &o, None, opts).unwrap(), "{o}");
    }
}

#[test]
fn already_entailed_and_strict_def1() {
    let fw = fw_of("a.\nb :- c.");
    let o = obs(&["a"]);
    let loose = explain(&fw, &o, &Explanation::empty(), ExplainOptions::default()).unwrap();
    assert!(loose.already_entailed);
    assert_eq!(names(&loose.explanations), ["{}"]);
    let strict = ExplainOptions { strict_def1: true, ..Default::default() };
    assert!(explain(&fw, &o, &Explanation::empty(), strict).unwrap().explanations.is_empty());
    assert!(oracle_explain(&fw, &o, Some(&Explanation::empty()), strict).unwrap().is_empty());
}

#[test]
fn non_abducible_atoms_get_a_guard() {
    let p = parse_program(&fixture("toy.lp")).unwrap();
    let fw = build_framework(&p.program, &[], &BTreeSet::new(), &[Atom::prop("c")].into()).unwrap();
    assert!(!fw.is_abducible(&Atom::prop("c").into()));
    assert_eq!(explain_ctx(&fw, "a", &Explanation::empty()), ["{b = true}"]);
    assert_eq!(fw.base_model(), wcs_core::syntax::Interpretation::empty());
    let err = build_framework(&p.program, &[], &BTreeSet::new(), &[Atom::prop("a")].into());
    assert_eq!(err.unwrap_err(), AbductionError::NonAbducibleDefined("a".into()));
}

#[test]
fn cardinality_prefers_fewer_facts() {
    let fw = fw_of("g :- a, b.\ng :- c.");
    let o = obs(&["g"]);
    let subset = explain(&fw, &o, &Explanation::empty(), ExplainOptions::default()).unwrap();
    assert_eq!(names(&subset.explanations), ["{c = true}", "{a = true, b = true}"]);
    let card = ExplainOptions { criterion: Minimality::Cardinality, ..Default::default() };
    let fewest = explain(&fw, &o, &Explanation::empty(), card).unwrap();
    assert_eq!(names(&fewest.explanations), ["{c = true}"]);
    assert_eq!(oracle_explain(&fw, &o, Some(&Explanation::empty()), card).unwrap(), fewest.explanations);
}

#[test]
fn dominance_orders_ordinary_facts_first() {
    let a = expl(&[fact("a", true)]);
    let ab = expl(&[fact("a", true), fact("b", true)]);
    let ai = expl(&[fact("a", true), inspect(Positive, "x", true)]);
    assert!(dominates(&a, &ab));
    assert!(dominates(&a, &ai));
    assert!(dominates(&ai, &ab));
    assert!(!dominates(&ab, &ai));
    assert!(!dominates(&a, &a));
}

#[test]
fn context_restricts_explanations() {
    let fw = framework("toy.lp", &[]);
    let ctx = expl(&[fact("b", false)]);
    assert_eq!(explain_ctx(&fw, "a", &ctx), ["{c = true}"]);
}

#[test]
fn inconsistent_sets_are_rejected() {
    let err = Explanation::new([fact("b", true), fact("b", false)]).unwrap_err();
    assert!(matches!(err, AbductionError::Inconsistent(_)));
    assert!(parse_context("b = true.\nb = false.").is_err());
    assert!(!expl(&[fact("b", true)]).is_consistent_with(&expl(&[fact("b", false)])));
}

#[test]
fn denials_prune_explanations() {
    let fw = fw_of("g :- a.\ng :- b.\n:- a.");
    assert_eq!(explain_ctx(&fw, "g", &Explanation::empty()), ["{b = true}"]);
}

#[test]
fn observation_errors() {
    assert_eq!(Observation::new([]).unwrap_err(), AbductionError::EmptyObservation);
    let wrapped = Literal::pos(wcs_core::syntax::Subject::Inspect(Positive, Atom::prop("a")));
    assert!(matches!(Observation::new([wrapped]), Err(AbductionError::InspectionInObservation(_))));
    let open = Literal::pos(Atom::new("p", vec![wcs_core::syntax::Term::variable("X")]));
    assert!(matches!(Observation::new([open]), Err(AbductionError::NotGround(_))));
}

#[test]
fn unexplainable_query_is_an_error() {
    let fw = framework("toy.lp", &[]);
    let r = entails(
        &fw,
        &obs(&["z"]),
        &[Literal::pos(Atom::prop("a"))],
        Reasoning::Skeptical,
        Default::default(),
    );
    assert!(matches!(r, Err(AbductionError::NoExplanation(_))));
}

#[test]
fn negative_query_values() {
    let fw = framework("toy.lp", &[]);
    let q = [Literal::neg(Atom::prop("a"))];
    let v = entails(&fw, &obs(&["a"]), &q, Reasoning::Skeptical, Default::default()).unwrap();
    assert_eq!(v, TruthValue::False);
}

#[test]
fn oracle_refuses_large_pools() {
    let text: String = (0..=ORACLE_LIMIT).map(|i| format!("g :- x{i}.\n")).collect();
    let fw = fw_of(&text);
    let err = oracle_explain(&fw, &obs(&["g"]), None, Default::default()).unwrap_err();
    assert_eq!(err, AbductionError::PoolTooLarge { subjects: ORACLE_LIMIT + 1, limit: ORACLE_LIMIT });
    // The search itself has no such bound.
    let e = explain(&fw, &obs(&["g"]), &Explanation::empty(), Default::default()).unwrap();
    assert_eq!(e.explanations.len(), ORACLE_LIMIT + 1);
}

#[test]
fn abductive_model_closes_wrappers() {
    let fw = framework("p_fire.lp", &[]);
    let e = expl(&[fact("barbecue", true), fact("dry", true)]);
    let m = fw.model(&e, Scope::Context(&Explanation::empty()));
    let insp = |k, a: &str| wcs_core::syntax::Subject::Inspect(k, Atom::prop(a));
    assert_eq!(m.value(&insp(Positive, "lightning")), TruthValue::False);
    assert_eq!(m.value(&insp(Negative, "dry")), TruthValue::False);
    let ctx = expl(&[fact("lightning", true)]);
    let m = fw.model(&e, Scope::Context(&ctx));
    assert_eq!(m.value(&insp(Positive, "lightning")), TruthValue::Unknown);
}
