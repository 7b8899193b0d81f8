//! The bundled example profiles and small manipulation sweeps.

use std::path::PathBuf;

use sccheck::dominance::{dominant_chain, schwartz_set, top_cycle};
use sccheck::io::parse_profile;
use sccheck::verify::{
    find_group_manipulation, find_manipulation, replay, sweep_strategyproofness, sweep_strong_strategyproofness, Universe,
};
use sccheck::{Ballot, ChoiceSet, ExtensionKind, MarginMatrix, Outcome, Profile, Rule, SweepConfig};

fn fixture(name: &str) -> Profile {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    parse_profile(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

fn set(xs: &[usize]) -> ChoiceSet {
    xs.iter().copied().collect()
}

#[test]
fn first_figure() {
    let p = fixture("fig1.prof");
    let g = MarginMatrix::of(&p);
    let expected = [
        [0, 0, -2, 2, 4],
        [0, 0, 2, 2, 2],
        [2, -2, 0, 2, 2],
        [-2, -2, -2, 0, 0],
        [-4, -2, -2, 0, 0],
    ];
    assert_eq!(g.rows(), expected.map(Vec::from).to_vec());
    let rel = g.relation();
    assert_eq!(top_cycle(&rel), set(&[0, 1, 2]));
    assert_eq!(dominant_chain(&rel), vec![set(&[0, 1, 2]), ChoiceSet::full(5)]);
    assert_eq!(schwartz_set(&rel), set(&[1]));
    assert_eq!(Rule::Omninomination.evaluate(&p).unwrap(), set(&[0, 1, 2, 3]));
}

#[test]
fn second_figure() {
    let left = fixture("fig2-left.prof");
    let right = fixture("fig2-right.prof");
    assert_eq!(Rule::Plurality.evaluate(&left).unwrap(), set(&[0, 2]));
    assert_eq!(Rule::Plurality.evaluate(&right).unwrap(), set(&[2]));
    assert_eq!(Rule::Borda.evaluate(&left).unwrap(), set(&[0]));

    let m = find_manipulation(Rule::Plurality, &left, ExtensionKind::Fishburn).unwrap().expect("plurality is manipulable");
    assert_eq!(m.voter, 4);
    assert_eq!(m.misreport, Ballot::new(vec![2, 1, 0]).unwrap());
    assert_eq!((m.honest_set, m.manipulated_set), (set(&[0, 2]), set(&[2])));
    assert_eq!(m.manipulated_profile(), right);

    assert!(find_manipulation(Rule::TopCycle, &left, ExtensionKind::Fishburn).unwrap().is_none());
}

#[test]
fn group_manipulation() {
    let cfg = SweepConfig::default();
    assert!(find_group_manipulation(Rule::TopCycle, &fixture("fig1.prof"), 2, &cfg).unwrap().is_none());
    let left = fixture("fig2-left.prof");
    for k in [1, 2] {
        let g = find_group_manipulation(Rule::Plurality, &left, k, &cfg).unwrap().expect("a lone voter suffices");
        assert_eq!(g.voters, vec![4]);
        assert_eq!(Rule::Plurality.evaluate(&g.manipulated_profile()).unwrap(), g.manipulated_set);
    }
    assert!(find_group_manipulation(Rule::Plurality, &left, 6, &cfg).is_err());
}

#[test]
fn small_sweeps() {
    let cfg = SweepConfig::default();
    let fishburn = ExtensionKind::Fishburn;
    let u3 = Universe::new(3, 3);
    assert_eq!(sweep_strategyproofness(Rule::CondorcetRule, &u3, fishburn, &cfg).unwrap().outcome, Outcome::HoldsOnUniverse);

    let borda = sweep_strategyproofness(Rule::Borda, &Universe::new(3, 5), fishburn, &cfg).unwrap();
    assert_eq!(borda.outcome, Outcome::ViolatedWithWitness);
    assert!(replay(&borda).unwrap());

    for m in 1..=3 {
        let v = sweep_strong_strategyproofness(Rule::TopCycle, &Universe::new(m, 3), ExtensionKind::FPlus, &cfg).unwrap();
        assert_eq!(v.outcome, Outcome::HoldsOnUniverse, "m={m}");
    }
}

#[test]
fn budget_is_enforced() {
    let tiny = SweepConfig::with_budget(10);
    assert!(sweep_strategyproofness(Rule::TopCycle, &Universe::new(3, 3), ExtensionKind::Fishburn, &tiny).is_err());
}
