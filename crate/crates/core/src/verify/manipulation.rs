use crate::error::{RuleError, VerifyError};
use crate::extensions::{compare, fishburn_prefers, fplus_weakly_prefers, ExtensionKind, SetComparison};
use crate::majority::MarginMatrix;
use crate::profile::{Ballot, Profile};
use crate::rules::Rule;
use crate::set::ChoiceSet;

use super::axioms::Axiom;
use super::witness::{GroupManipulation, Manipulation, Witness};
use super::{first_hit, AxiomVerdict, SweepConfig, Universe};

/// Evaluates a rule on single-voter deviations of a fixed profile. Pairwise
/// rules are evaluated on updated margins instead of rebuilt profiles.
struct Deviations<'a> {
    rule: Rule,
    profile: &'a Profile,
    margins: Option<MarginMatrix>,
}

impl<'a> Deviations<'a> {
    fn new(rule: Rule, profile: &'a Profile) -> Self {
        let margins = rule.basis().is_pairwise().then(|| MarginMatrix::of(profile));
        Deviations { rule, profile, margins }
    }

    fn honest(&self) -> Result<ChoiceSet, RuleError> {
        match &self.margins {
            Some(g) => self.rule.evaluate_margins(g),
            None => self.rule.evaluate(self.profile),
        }
    }

    fn outcome(&self, voter: usize, misreport: &Ballot) -> Result<ChoiceSet, RuleError> {
        match &self.margins {
            Some(g) => {
                let old = self.profile.ballot(voter);
                let shifted = MarginMatrix::from_upper(g.m(), |x, y| {
                    g.get(x, y) + 2 * (misreport.prefers(x, y) as i32 - old.prefers(x, y) as i32)
                });
                self.rule.evaluate_margins(&shifted)
            }
            None => self.rule.evaluate(&self.profile.with_ballot(voter, misreport.clone())),
        }
    }
}

/// Misreports other than `truth`, closest first (swap distance, then lexicographic).
fn by_distance<'b>(truth: &Ballot, ballots: &'b [Ballot]) -> Vec<&'b Ballot> {
    let mut order: Vec<(usize, &Ballot)> =
        ballots.iter().filter(|b| *b != truth).map(|b| (truth.swap_distance(b), b)).collect();
    order.sort_by_key(|&(d, _)| d);
    order.into_iter().map(|(_, b)| b).collect()
}

/// Scans voters in index order and misreports closest-first,
/// returning the first deviation accepted by `accept(true_ballot, honest, new)`.
fn scan_deviations(
    rule: Rule,
    profile: &Profile,
    ballots: &[Ballot],
    extension: ExtensionKind,
    accept: impl Fn(&Ballot, ChoiceSet, ChoiceSet) -> bool,
) -> Result<Option<Manipulation>, RuleError> {
    let dev = Deviations::new(rule, profile);
    let honest = dev.honest()?;
    for voter in 0..profile.n() {
        let truth = profile.ballot(voter);
        // identical ballots have identical deviations; the earlier voter covers them
        if profile.ballots()[..voter].contains(truth) {
            continue;
        }
        for misreport in by_distance(truth, ballots) {
            let new = dev.outcome(voter, misreport)?;
            if new != honest && accept(truth, honest, new) {
                return Ok(Some(Manipulation {
                    profile: profile.clone(),
                    voter,
                    true_ballot: truth.clone(),
                    misreport: misreport.clone(),
                    honest_set: honest,
                    manipulated_set: new,
                    extension,
                }));
            }
        }
    }
    Ok(None)
}

pub(crate) fn find_manipulation_with(
    rule: Rule,
    profile: &Profile,
    extension: ExtensionKind,
    ballots: &[Ballot],
) -> Result<Option<Manipulation>, RuleError> {
    scan_deviations(rule, profile, ballots, extension, |truth, honest, new| {
        compare(extension, truth, new, honest) == SetComparison::LeftPreferred
    })
}

/// First single-voter manipulation in scan order: voters by index, then
/// misreports by swap distance from the true ballot, ties lexicographic.
pub fn find_manipulation(
    rule: Rule,
    profile: &Profile,
    extension: ExtensionKind,
) -> Result<Option<Manipulation>, RuleError> {
    find_manipulation_with(rule, profile, extension, &Ballot::all(profile.m()))
}

fn strongly_safe(extension: ExtensionKind, truth: &Ballot, honest: ChoiceSet, new: ChoiceSet) -> bool {
    match extension {
        ExtensionKind::Fishburn => fishburn_prefers(truth, honest, new),
        ExtensionKind::FPlus => fplus_weakly_prefers(truth, honest, new),
    }
}

/// First deviation whose outcome the honest outcome is not weakly preferred to.
pub fn find_strong_violation(
    rule: Rule,
    profile: &Profile,
    extension: ExtensionKind,
) -> Result<Option<Manipulation>, RuleError> {
    find_strong_violation_in(rule, profile, extension, &Ballot::all(profile.m()))
}

fn find_strong_violation_in(
    rule: Rule,
    profile: &Profile,
    extension: ExtensionKind,
    ballots: &[Ballot],
) -> Result<Option<Manipulation>, RuleError> {
    scan_deviations(rule, profile, ballots, extension, |truth, honest, new| {
        !strongly_safe(extension, truth, honest, new)
    })
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

fn group_cost(m: usize, n: usize, max_group: usize) -> u128 {
    let b: u128 = (1..=m as u128).product();
    (1..=max_group.min(n)).map(|g| binomial(n as u128, g as u128) * b.saturating_pow(g as u32)).sum()
}

/// Smallest coalition (then lexicographic voters, then joint misreports in
/// per-member scan order) in which every member strictly Fishburn-prefers the
/// new outcome. Every member misreports: a member keeping their true ballot
/// is covered by a smaller coalition.
pub fn find_group_manipulation(
    rule: Rule,
    profile: &Profile,
    max_group: usize,
    config: &SweepConfig,
) -> Result<Option<GroupManipulation>, VerifyError> {
    if max_group > profile.n() {
        return Err(VerifyError::Unsupported(format!(
            "group size {max_group} exceeds the electorate size {}",
            profile.n()
        )));
    }
    config.guard(group_cost(profile.m(), profile.n(), max_group))?;
    Ok(find_group_in(rule, profile, max_group, &Ballot::all(profile.m()))?)
}

fn find_group_in(
    rule: Rule,
    profile: &Profile,
    max_group: usize,
    ballots: &[Ballot],
) -> Result<Option<GroupManipulation>, RuleError> {
    let honest = rule.evaluate(profile)?;
    let n = profile.n();
    for size in 1..=max_group {
        let mut group: Vec<usize> = (0..size).collect();
        loop {
            if let Some(found) = best_joint(rule, profile, honest, &group, ballots)? {
                return Ok(Some(found));
            }
            if !next_combination(&mut group, n) {
                break;
            }
        }
    }
    Ok(None)
}

fn best_joint(
    rule: Rule,
    profile: &Profile,
    honest: ChoiceSet,
    group: &[usize],
    ballots: &[Ballot],
) -> Result<Option<GroupManipulation>, RuleError> {
    // each member's misreports in the single-voter scan order
    let options: Vec<Vec<&Ballot>> = group.iter().map(|&v| by_distance(profile.ballot(v), ballots)).collect();
    if options.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    let mut digits = vec![0usize; group.len()];
    loop {
        let deviated = group
            .iter()
            .zip(&options)
            .zip(&digits)
            .fold(profile.clone(), |p, ((&v, opts), &d)| p.with_ballot(v, opts[d].clone()));
        let new = rule.evaluate(&deviated)?;
        if new != honest && group.iter().all(|&v| fishburn_prefers(profile.ballot(v), new, honest)) {
            return Ok(Some(GroupManipulation {
                profile: profile.clone(),
                voters: group.to_vec(),
                misreports: options.iter().zip(&digits).map(|(opts, &d)| opts[d].clone()).collect(),
                honest_set: honest,
                manipulated_set: new,
            }));
        }
        // odometer, last member fastest
        let mut i = digits.len();
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < options[i].len() {
                break;
            }
            digits[i] = 0;
        }
    }
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn deviation_cost(universe: &Universe) -> u128 {
    let b: u128 = (1..=universe.m as u128).product();
    universe.size() + universe.voter_weighted_size() * (b - 1)
}

fn sweep_with(
    axiom: Axiom,
    rule: Rule,
    universe: &Universe,
    cost: u128,
    config: &SweepConfig,
    probe: impl Fn(&Profile, &[Ballot]) -> Result<Option<Witness>, RuleError> + Sync,
) -> Result<AxiomVerdict, VerifyError> {
    universe.validate()?;
    config.guard(cost)?;
    let profiles = universe.profiles()?;
    let ballots = Ballot::all(universe.m);
    let hit = first_hit(profiles.len(), |i| probe(&profiles[i], &ballots))?;
    Ok(AxiomVerdict::from_scan(axiom, rule, *universe, profiles.len() as u64, hit))
}

/// Exhaustive single-voter manipulation sweep.
pub fn sweep_strategyproofness(
    rule: Rule,
    universe: &Universe,
    extension: ExtensionKind,
    config: &SweepConfig,
) -> Result<AxiomVerdict, VerifyError> {
    let axiom = match extension {
        ExtensionKind::Fishburn => Axiom::Strategyproofness,
        ExtensionKind::FPlus => Axiom::FPlusStrategyproofness,
    };
    sweep_with(axiom, rule, universe, deviation_cost(universe), config, |p, ballots| {
        Ok(find_manipulation_with(rule, p, extension, ballots)?.map(Witness::Manipulation))
    })
}

/// Exhaustive strong strategyproofness sweep.
pub fn sweep_strong_strategyproofness(
    rule: Rule,
    universe: &Universe,
    extension: ExtensionKind,
    config: &SweepConfig,
) -> Result<AxiomVerdict, VerifyError> {
    let axiom = match extension {
        ExtensionKind::Fishburn => Axiom::StrongStrategyproofness,
        ExtensionKind::FPlus => Axiom::StrongFPlusStrategyproofness,
    };
    sweep_with(axiom, rule, universe, deviation_cost(universe), config, |p, ballots| {
        Ok(find_strong_violation_in(rule, p, extension, ballots)?.map(Witness::UnsafeDeviation))
    })
}

/// Exhaustive coalition sweep with coalitions of at most `max_group` voters.
pub fn sweep_group_strategyproofness(
    rule: Rule,
    universe: &Universe,
    max_group: usize,
    config: &SweepConfig,
) -> Result<AxiomVerdict, VerifyError> {
    let cost: u128 = universe.electorates().map(|n| universe.count_with(n) * group_cost(universe.m, n, max_group)).sum();
    sweep_with(Axiom::GroupStrategyproofness, rule, universe, cost, config, |p, ballots| {
        Ok(find_group_in(rule, p, max_group.min(p.n()), ballots)?.map(Witness::GroupManipulation))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig2_left() -> Profile {
        Profile::from_rankings(&[[0, 1, 2], [0, 1, 2], [2, 0, 1], [2, 0, 1], [1, 2, 0]]).unwrap()
    }

    #[test]
    fn plurality_figure_two() {
        let m = find_manipulation(Rule::Plurality, &fig2_left(), ExtensionKind::Fishburn).unwrap().unwrap();
        assert_eq!(m.voter, 4);
        assert_eq!(m.misreport, Ballot::new(vec![2, 1, 0]).unwrap());
        assert_eq!(m.honest_set, ChoiceSet::from_indices([0, 2]));
        assert_eq!(m.manipulated_set, ChoiceSet::singleton(2));
    }

    #[test]
    fn top_cycle_figure_two_is_safe() {
        assert!(find_manipulation(Rule::TopCycle, &fig2_left(), ExtensionKind::Fishburn).unwrap().is_none());
    }

    #[test]
    fn single_alternative_is_never_manipulable() {
        let p = Profile::from_rankings(&[[0]]).unwrap();
        for rule in Rule::catalog() {
            if rule.evaluate(&p).is_ok() {
                assert!(find_manipulation(rule, &p, ExtensionKind::Fishburn).unwrap().is_none(), "{rule}");
            }
        }
    }

    #[test]
    fn pairwise_fast_path_agrees_with_rebuild() {
        let p = fig2_left();
        for rule in [Rule::Borda, Rule::Maximin, Rule::TcStar] {
            let dev = Deviations::new(rule, &p);
            for voter in 0..p.n() {
                for b in Ballot::all(3) {
                    let slow = rule.evaluate(&p.with_ballot(voter, b.clone())).unwrap();
                    assert_eq!(dev.outcome(voter, &b).unwrap(), slow);
                }
            }
        }
    }

    #[test]
    fn groups() {
        let cfg = SweepConfig::default();
        let single = find_manipulation(Rule::Plurality, &fig2_left(), ExtensionKind::Fishburn).unwrap().unwrap();
        let g1 = find_group_manipulation(Rule::Plurality, &fig2_left(), 1, &cfg).unwrap().unwrap();
        assert_eq!((g1.voters.clone(), g1.misreports[0].clone()), (vec![single.voter], single.misreport.clone()));
        assert_eq!(g1.manipulated_set, single.manipulated_set);
        assert!(find_group_manipulation(Rule::Plurality, &fig2_left(), 2, &cfg).unwrap().is_some());
        assert!(find_group_manipulation(Rule::Plurality, &fig2_left(), 6, &cfg).is_err());
    }

    #[test]
    fn combinations() {
        let mut c = vec![0, 1];
        let mut all = vec![c.clone()];
        while next_combination(&mut c, 4) {
            all.push(c.clone());
        }
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
    }
}
