mod support;

use std::collections::BTreeSet;

use wcs_core::abduction::{
    build_framework, check_explanation, explain, explain_open, AbductionError, AbductiveFramework,
    Explanation, Scope,
};
use wcs_core::classify::{classify, ClassifyOptions, Label, Relation};
use wcs_core::frontend::{parse_observation, parse_program};

use support::*;

fn fw_of(text: &str) -> AbductiveFramework {
    let p = parse_program(text).unwrap();
    build_framework(&p.program, &p.ics, &BTreeSet::new(), &BTreeSet::new()).unwrap()
}

fn labels(fw: &AbductiveFramework, relation: Relation, o1: &str, o2: &str) -> Vec<&'static str> {
    let (o1, o2) = (parse_observation(o1).unwrap(), parse_observation(o2).unwrap());
    classify(fw, relation, &o1, &o2, ClassifyOptions::default()).unwrap().label_names()
}

#[test]
fn relation_names_round_trip() {
    for r in Relation::ALL {
        assert_eq!(r.name().parse::<Relation>().unwrap(), r);
    }
    assert!("sideways".parse::<Relation>().is_err());
}

#[test]
fn fire_side_effect_witnesses() {
    let fw = framework("p_fire.lp", &[]);
    let r =
        classify(&fw, Relation::SideEffect, &obs(&["storm", "dry"]), &obs(&["ffire"]), Default::default())
            .unwrap();
    let strict: Vec<_> = r.witnesses.iter().filter(|w| w.label == Label::StrictPossible).collect();
    assert_eq!(strict.len(), 1);
    assert_eq!(strict[0].e1.to_string(), "{dry = true, lightning = true}");
    assert_eq!(strict[0].e2.to_string(), "{dry = true, inspect(lightning) = true}");
    assert_eq!(strict[0].grounding.len(), 1);
    assert!(!strict[0].grounding[0].forced);
}

#[test]
fn literal_strict_possible_needs_every_primary_explanation() {
    let fw = framework("p_fire.lp", &[]);
    let opts = ClassifyOptions { literal_strict_possible: true, ..Default::default() };
    let r = classify(&fw, Relation::SideEffect, &obs(&["storm", "dry"]), &obs(&["ffire"]), opts).unwrap();
    assert_eq!(r.label_names(), ["POSSIBLE"]);
}

#[test]
fn contested_grounding_is_forced() {
    let fw = framework("p_fire.lp", &[]);
    let r =
        classify(&fw, Relation::Contested, &obs(&["ffire"]), &obs(&["rained"]), Default::default()).unwrap();
    assert!(!r.has(Label::Rebuttal));
    assert!(r.witnesses.iter().all(|w| w.grounding.iter().any(|g| g.forced)));
    let g = &r.witnesses[0].grounding[0];
    assert_eq!(g.consumer.to_string(), "inspect_neg(dry) = false");
    assert_eq!(g.producer.to_string(), "dry = true");
}

#[test]
fn witnesses_revalidate() {
    let fw = framework("p_fire.lp", &[]);
    let empty = Explanation::empty();
    for (relation, o1, o2) in [
        (Relation::SideEffect, "storm, dry", "ffire"),
        (Relation::Contested, "ffire", "rained"),
        (Relation::Relevant, "storm", "ffire"),
    ] {
        let (o1, o2) = (parse_observation(o1).unwrap(), parse_observation(o2).unwrap());
        let target = if relation == Relation::Contested { o2.negated() } else { o2.clone() };
        let r = classify(&fw, relation, &o1, &o2, Default::default()).unwrap();
        assert!(!r.witnesses.is_empty());
        for w in &r.witnesses {
            assert!(check_explanation(&fw, &w.e1, &o1, &empty), "{relation}: {}", w.e1);
            assert!(check_explanation(&fw, &w.e2, &target, &w.e1), "{relation}: {}", w.e2);
        }
    }
    let r = classify(&fw, Relation::Joint, &obs(&["smoke"]), &obs(&["sirens"]), Default::default()).unwrap();
    for w in &r.witnesses {
        assert!(fw.check(&w.e1, &obs(&["smoke"]), Scope::Open));
        assert!(fw.check(&w.e2, &obs(&["sirens"]), Scope::Open));
        let union = w.e1.union(&w.e2).unwrap();
        assert!(union.pending_consumers().is_empty(), "{union}");
    }
}

#[test]
fn joint_support_is_symmetric() {
    let fw = framework("p_fire.lp", &[]);
    assert_eq!(
        labels(&fw, Relation::Joint, "smoke", "sirens"),
        labels(&fw, Relation::Joint, "sirens", "smoke")
    );
}

#[test]
fn joint_needs_pending_consumers_on_both_sides() {
    let fw = framework("p_fire.lp", &[]);
    assert!(explain_open(&fw, &obs(&["storm"]), Default::default()).unwrap().explanations.len() == 2);
    assert_eq!(labels(&fw, Relation::Joint, "smoke", "storm"), ["NONE"]);
}

#[test]
fn rebuttal_through_negated_head() {
    let fw = fw_of("~p :- a.\np :- b.");
    assert!(labels(&fw, Relation::Contested, "p", "np").contains(&"REBUTTAL"));
    assert!(labels(&fw, Relation::Contested, "p", "not p").contains(&"REBUTTAL"));
    assert!(!labels(&fw, Relation::Contested, "p", "a").contains(&"REBUTTAL"));
}

#[test]
fn rebuttal_requires_defined_atoms() {
    let fw = fw_of("p :- b.\nq :- c.");
    assert!(labels(&fw, Relation::Contested, "q", "not q").contains(&"REBUTTAL"));
    assert!(!labels(&fw, Relation::Contested, "q, not b", "b, not q").contains(&"REBUTTAL"));
}

#[test]
fn side_effect_needs_a_consumer() {
    let fw = framework("p_fire.lp", &[]);
    assert_eq!(labels(&fw, Relation::SideEffect, "storm, dry", "smoke"), ["NONE"]);
    let fw = framework("toy.lp", &[]);
    assert_eq!(labels(&fw, Relation::SideEffect, "b", "a"), ["NONE"]);
}

#[test]
fn unexplainable_primary_is_an_error() {
    let fw = framework("p_fire.lp", &[]);
    for relation in Relation::ALL {
        let err = classify(&fw, relation, &obs(&["storm", "ab1"]), &obs(&["ffire"]), Default::default());
        assert!(matches!(err, Err(AbductionError::NoPrimaryExplanation(_))), "{relation}");
    }
}

#[test]
fn relevant_universe_drawn_from_contexts() {
    let fw = framework("p_fire.lp", &[]);
    let storm = obs(&["storm"]);
    let e1s = explain(&fw, &storm, &Explanation::empty(), Default::default()).unwrap().explanations;
    assert_eq!(e1s.len(), 2);
    let r = classify(&fw, Relation::Relevant, &storm, &obs(&["ffire"]), Default::default()).unwrap();
    assert!(r.witnesses.iter().all(|w| w.e1.to_string() == "{lightning = true}"));
    assert!(!r.has(Label::NecessaryRelevant));
}

#[test]
fn labels_are_upward_closed() {
    let fw = framework("p_fire.lp", &[]);
    for (relation, o1, o2) in [
        (Relation::SideEffect, "storm, dry", "ffire"),
        (Relation::Contested, "ffire", "rained"),
        (Relation::Relevant, "storm", "ffire"),
        (Relation::Joint, "smoke", "sirens"),
    ] {
        let (o1, o2) = (parse_observation(o1).unwrap(), parse_observation(o2).unwrap());
        let r = classify(&fw, relation, &o1, &o2, Default::default()).unwrap();
        let implied = [
            (Label::Necessary, Label::Possible),
            (Label::StrictNecessary, Label::StrictPossible),
            (Label::StrictPossible, Label::Possible),
            (Label::NecessarilyContested, Label::PossiblyContested),
            (Label::NecessaryRelevant, Label::PossibleRelevant),
            (Label::NecessarilyJoint, Label::PossiblyJoint),
        ];
        for (strong, weak) in implied {
            assert!(!r.has(strong) || r.has(weak), "{relation}: {strong:?} without {weak:?}");
        }
    }
}
