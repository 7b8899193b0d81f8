use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{RuleError, VerifyError};
use crate::extensions::{compare, fishburn_prefers, ExtensionKind, SetComparison};
use crate::majority::MarginMatrix;
use crate::profile::{next_permutation, Ballot, Profile};
use crate::rules::{is_dominant_in, Rule};
use crate::set::ChoiceSet;

use super::manipulation::{sweep_group_strategyproofness, sweep_strategyproofness, sweep_strong_strategyproofness};
use super::robust::{check_dominant_set_rule, check_robust_dominant, check_weak_robustness, robust_premise};
use super::witness::Witness;
use super::{first_hit, AxiomVerdict, Outcome, SweepConfig, Universe};

/// Coalition size used when group strategyproofness is checked through [`check_axiom`].
pub const DEFAULT_MAX_GROUP: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Strategyproofness,
    FPlusStrategyproofness,
    StrongStrategyproofness,
    StrongFPlusStrategyproofness,
    GroupStrategyproofness,
    Pairwiseness,
    Majoritarianess,
    Neutrality,
    Homogeneity,
    NonImposition,
    SetNonImposition,
    StrongCondorcetConsistency,
    Cos,
    Wmon,
    Wsmon,
    Iua,
    Wloc,
    FishburnEfficiency,
    CloneSymmetry,
    DominantSetRule,
    RobustDominant,
    WeakRobustness,
}

impl Axiom {
    pub const ALL: [Axiom; 22] = [
        Axiom::Strategyproofness,
        Axiom::FPlusStrategyproofness,
        Axiom::StrongStrategyproofness,
        Axiom::StrongFPlusStrategyproofness,
        Axiom::GroupStrategyproofness,
        Axiom::Pairwiseness,
        Axiom::Majoritarianess,
        Axiom::Neutrality,
        Axiom::Homogeneity,
        Axiom::NonImposition,
        Axiom::SetNonImposition,
        Axiom::StrongCondorcetConsistency,
        Axiom::Cos,
        Axiom::Wmon,
        Axiom::Wsmon,
        Axiom::Iua,
        Axiom::Wloc,
        Axiom::FishburnEfficiency,
        Axiom::CloneSymmetry,
        Axiom::DominantSetRule,
        Axiom::RobustDominant,
        Axiom::WeakRobustness,
    ];

    /// The default suite run by the CLI; clone symmetry is opt-in.
    pub fn suite() -> Vec<Axiom> {
        Axiom::ALL.iter().copied().filter(|&a| a != Axiom::CloneSymmetry).collect()
    }

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Strategyproofness => "sp",
            Axiom::FPlusStrategyproofness => "sp-fplus",
            Axiom::StrongStrategyproofness => "strong-sp",
            Axiom::StrongFPlusStrategyproofness => "strong-sp-fplus",
            Axiom::GroupStrategyproofness => "group-sp",
            Axiom::Pairwiseness => "pairwise",
            Axiom::Majoritarianess => "majoritarian",
            Axiom::Neutrality => "neutrality",
            Axiom::Homogeneity => "homogeneity",
            Axiom::NonImposition => "non-imposition",
            Axiom::SetNonImposition => "set-non-imposition",
            Axiom::StrongCondorcetConsistency => "strong-condorcet",
            Axiom::Cos => "cos",
            Axiom::Wmon => "wmon",
            Axiom::Wsmon => "wsmon",
            Axiom::Iua => "iua",
            Axiom::Wloc => "wloc",
            Axiom::FishburnEfficiency => "fishburn-efficiency",
            Axiom::CloneSymmetry => "clone-symmetry",
            Axiom::DominantSetRule => "dominant",
            Axiom::RobustDominant => "robust-dominant",
            Axiom::WeakRobustness => "weak-robust",
        }
    }

    /// Existence axioms can only be witnessed, never refuted, by enumeration.
    pub fn is_existential(self) -> bool {
        matches!(self, Axiom::NonImposition | Axiom::SetNonImposition)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axiom {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Axiom::ALL
            .iter()
            .copied()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown axiom `{s}`"))
    }
}

impl Serialize for Axiom {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Axiom {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Checks one axiom for `rule` on every profile of `universe`.
pub fn check_axiom(
    axiom: Axiom,
    rule: Rule,
    universe: &Universe,
    config: &SweepConfig,
) -> Result<AxiomVerdict, VerifyError> {
    universe.validate()?;
    let u = universe;
    match axiom {
        Axiom::Strategyproofness => sweep_strategyproofness(rule, u, ExtensionKind::Fishburn, config),
        Axiom::FPlusStrategyproofness => sweep_strategyproofness(rule, u, ExtensionKind::FPlus, config),
        Axiom::StrongStrategyproofness => sweep_strong_strategyproofness(rule, u, ExtensionKind::Fishburn, config),
        Axiom::StrongFPlusStrategyproofness => sweep_strong_strategyproofness(rule, u, ExtensionKind::FPlus, config),
        Axiom::GroupStrategyproofness => sweep_group_strategyproofness(rule, u, DEFAULT_MAX_GROUP, config),
        Axiom::DominantSetRule => check_dominant_set_rule(rule, u, config),
        Axiom::RobustDominant => check_robust_dominant(rule, u, config),
        Axiom::WeakRobustness => check_weak_robustness(rule, u, config),
        Axiom::Pairwiseness => grouped(axiom, rule, u, config, |p| MarginMatrix::of(p).flat().to_vec()),
        Axiom::Majoritarianess => grouped(axiom, rule, u, config, |p| MarginMatrix::of(p).relation().code()),
        Axiom::NonImposition | Axiom::SetNonImposition => existence(axiom, rule, u, config),
        _ => per_profile(axiom, rule, u, config),
    }
}

struct Scan {
    profiles: Vec<Profile>,
    outputs: Vec<ChoiceSet>,
}

fn evaluate_all(rule: Rule, universe: &Universe, config: &SweepConfig, per_profile_cost: u128) -> Result<Scan, VerifyError> {
    config.guard(universe.size() * per_profile_cost.max(1))?;
    let profiles = universe.profiles()?;
    let outputs = profiles.par_iter().map(|p| rule.evaluate(p)).collect::<Result<Vec<_>, RuleError>>()?;
    Ok(Scan { profiles, outputs })
}

/// Output constancy on the classes of `key`.
fn grouped<K: std::hash::Hash + Eq>(
    axiom: Axiom,
    rule: Rule,
    universe: &Universe,
    config: &SweepConfig,
    key: impl Fn(&Profile) -> K,
) -> Result<AxiomVerdict, VerifyError> {
    let scan = evaluate_all(rule, universe, config, 1)?;
    let mut first: HashMap<K, usize> = HashMap::new();
    let mut hit = None;
    for (j, p) in scan.profiles.iter().enumerate() {
        let i = *first.entry(key(p)).or_insert(j);
        if scan.outputs[i] != scan.outputs[j] {
            hit = Some((
                j,
                Witness::ProfilePair {
                    first: scan.profiles[i].clone(),
                    second: p.clone(),
                    first_set: scan.outputs[i],
                    second_set: scan.outputs[j],
                },
            ));
            break;
        }
    }
    Ok(AxiomVerdict::from_scan(axiom, rule, *universe, scan.profiles.len() as u64, hit))
}

fn existence(axiom: Axiom, rule: Rule, universe: &Universe, config: &SweepConfig) -> Result<AxiomVerdict, VerifyError> {
    let scan = evaluate_all(rule, universe, config, 1)?;
    let seen: BTreeSet<ChoiceSet> = scan.outputs.iter().copied().collect();
    let wanted: Vec<ChoiceSet> = match axiom {
        Axiom::NonImposition => (0..universe.m).map(ChoiceSet::singleton).collect(),
        _ => ChoiceSet::nonempty_subsets(universe.m).collect(),
    };
    let missing: Vec<ChoiceSet> = wanted.into_iter().filter(|s| !seen.contains(s)).collect();
    let total = scan.profiles.len() as u64;
    Ok(if missing.is_empty() {
        AxiomVerdict::from_scan(axiom, rule, *universe, total, None)
    } else {
        AxiomVerdict {
            axiom,
            rule,
            universe: *universe,
            outcome: Outcome::NotWitnessedInUniverse,
            witness: Some(Witness::Missing { sets: missing }),
            checked: total,
        }
    })
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

fn per_profile_cost(axiom: Axiom, universe: &Universe) -> u128 {
    let m = universe.m;
    let n = universe.n_max as u128;
    match axiom {
        Axiom::Neutrality => factorial(m),
        Axiom::Homogeneity => universe.k_hom as u128,
        Axiom::Wmon => n * m as u128,
        Axiom::Wsmon => n,
        Axiom::Iua => n * factorial(m),
        Axiom::Wloc => n * (2..=m).map(|k| binomial(m, k) * factorial(k)).sum::<u128>(),
        Axiom::FishburnEfficiency => 1u128 << m,
        _ => 1,
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1))
}

fn per_profile(axiom: Axiom, rule: Rule, universe: &Universe, config: &SweepConfig) -> Result<AxiomVerdict, VerifyError> {
    config.guard(universe.size() * per_profile_cost(axiom, universe))?;
    let profiles = universe.profiles()?;
    let perms: Vec<Vec<usize>> = Ballot::all(universe.m).iter().map(|b| b.ranking().collect()).collect();
    let k_hom = universe.k_hom;
    let hit = first_hit(profiles.len(), |i| {
        let p = &profiles[i];
        let set = rule.evaluate(p)?;
        match axiom {
            Axiom::Neutrality => neutrality_at(rule, p, set, &perms[1..]),
            Axiom::Homogeneity => homogeneity_at(rule, p, set, k_hom),
            Axiom::StrongCondorcetConsistency => Ok(strong_condorcet_at(p, set)),
            Axiom::Cos => Ok(cos_at(p, set)),
            Axiom::Wmon => wmon_at(rule, p, set),
            Axiom::Wsmon => wsmon_at(rule, p, set),
            Axiom::Iua => block_reorderings_at(rule, p, set, BlockMode::Unchosen),
            Axiom::Wloc => block_reorderings_at(rule, p, set, BlockMode::Localized),
            Axiom::FishburnEfficiency => Ok(efficiency_at(p, set)),
            Axiom::CloneSymmetry => Ok(clone_symmetry_at(p, set)),
            other => unreachable!("{other} is not a per-profile axiom"),
        }
    })?;
    Ok(AxiomVerdict::from_scan(axiom, rule, *universe, profiles.len() as u64, hit))
}

fn image(set: ChoiceSet, perm: &[usize]) -> ChoiceSet {
    set.iter().map(|x| perm[x]).collect()
}

fn neutrality_at(rule: Rule, p: &Profile, set: ChoiceSet, perms: &[Vec<usize>]) -> Result<Option<Witness>, RuleError> {
    for perm in perms {
        let relabeled = p.relabel(perm);
        let relabeled_set = rule.evaluate(&relabeled)?;
        if relabeled_set != image(set, perm) {
            return Ok(Some(Witness::Relabeling {
                profile: p.clone(),
                permutation: perm.clone(),
                relabeled,
                set,
                relabeled_set,
            }));
        }
    }
    Ok(None)
}

fn homogeneity_at(rule: Rule, p: &Profile, set: ChoiceSet, k_hom: usize) -> Result<Option<Witness>, RuleError> {
    for k in 2..=k_hom {
        let replicated_set = rule.evaluate(&p.repeated(k))?;
        if replicated_set != set {
            return Ok(Some(Witness::Replication { profile: p.clone(), k, set, replicated_set }));
        }
    }
    Ok(None)
}

fn single(p: &Profile, set: ChoiceSet, alternatives: Vec<usize>, better_set: Option<ChoiceSet>) -> Option<Witness> {
    Some(Witness::SingleProfile { profile: p.clone(), set, alternatives, better_set })
}

fn strong_condorcet_at(p: &Profile, set: ChoiceSet) -> Option<Witness> {
    let winner = MarginMatrix::of(p).relation().condorcet_winner();
    let ok = match winner {
        Some(x) => set == ChoiceSet::singleton(x),
        None => set.len() != 1,
    };
    if ok {
        None
    } else {
        single(p, set, winner.into_iter().collect(), None)
    }
}

fn cos_at(p: &Profile, set: ChoiceSet) -> Option<Witness> {
    let rel = MarginMatrix::of(p).relation();
    (0..p.m())
        .find(|&x| {
            let rest = set.without(x);
            !rest.is_empty() && rest.iter().all(|y| rel.strictly(x, y))
        })
        .and_then(|x| single(p, set, vec![x], None))
}

fn efficiency_at(p: &Profile, set: ChoiceSet) -> Option<Witness> {
    ChoiceSet::nonempty_subsets(p.m())
        .filter(|&x| x != set)
        .find(|&x| p.ballots().iter().all(|b| fishburn_prefers(b, x, set)))
        .and_then(|x| single(p, set, vec![], Some(x)))
}

/// Pairs `x < y` that are clones (`g(x,y) = 0`, equal margins against every
/// third alternative) must be chosen together or not at all.
fn clone_symmetry_at(p: &Profile, set: ChoiceSet) -> Option<Witness> {
    let g = MarginMatrix::of(p);
    let m = p.m();
    for x in 0..m {
        for y in x + 1..m {
            let clones = g.get(x, y) == 0 && (0..m).filter(|&z| z != x && z != y).all(|z| g.get(x, z) == g.get(y, z));
            if clones && set.contains(x) != set.contains(y) {
                return single(p, set, vec![x, y], None);
            }
        }
    }
    None
}

fn modification(p: &Profile, voter: usize, ballot: Ballot, focus: Vec<usize>, before_set: ChoiceSet, after_set: ChoiceSet) -> Witness {
    Witness::Modification { before: p.clone(), after: p.with_ballot(voter, ballot), voter, focus, before_set, after_set }
}

fn distinct_voters(p: &Profile) -> impl Iterator<Item = usize> + '_ {
    (0..p.n()).filter(move |&v| !p.ballots()[..v].contains(p.ballot(v)))
}

fn wmon_holds(a: usize, b: usize, before: ChoiceSet, after: ChoiceSet) -> bool {
    !before.contains(a) || after.contains(a) || (after.contains(b) && !before.contains(b))
}

fn wmon_at(rule: Rule, p: &Profile, set: ChoiceSet) -> Result<Option<Witness>, RuleError> {
    for voter in distinct_voters(p) {
        let ballot = p.ballot(voter);
        for rank in 0..p.m().saturating_sub(1) {
            // reinforce a (one below) against b (one above)
            let (b, a) = (ballot.at(rank), ballot.at(rank + 1));
            if !set.contains(a) {
                continue;
            }
            let swapped = ballot.swap_adjacent(rank);
            let after = rule.evaluate(&p.with_ballot(voter, swapped.clone()))?;
            if !wmon_holds(a, b, set, after) {
                return Ok(Some(modification(p, voter, swapped, vec![a, b], set, after)));
            }
        }
    }
    Ok(None)
}

fn wsmon_at(rule: Rule, p: &Profile, set: ChoiceSet) -> Result<Option<Witness>, RuleError> {
    for voter in distinct_voters(p) {
        let ballot = p.ballot(voter);
        let a = ballot.top();
        if set.contains(a) || p.m() < 2 {
            continue;
        }
        let pushed = ballot.push_top_to_bottom();
        let after = rule.evaluate(&p.with_ballot(voter, pushed.clone()))?;
        if after != set {
            return Ok(Some(modification(p, voter, pushed, vec![a], set, after)));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy)]
enum BlockMode {
    /// Reorder the unchosen alternatives; the outcome must not change.
    Unchosen,
    /// Reorder any block `B`; if `B ∩ f` is preserved the outcome must not change.
    Localized,
}

fn block_reorderings_at(rule: Rule, p: &Profile, set: ChoiceSet, mode: BlockMode) -> Result<Option<Witness>, RuleError> {
    let m = p.m();
    let blocks: Vec<ChoiceSet> = match mode {
        // reordering runs of unchosen alternatives covers every subset of them
        BlockMode::Unchosen => vec![set.complement(m)],
        BlockMode::Localized => ChoiceSet::nonempty_subsets(m).collect(),
    };
    for voter in distinct_voters(p) {
        let ballot = p.ballot(voter);
        for &block in blocks.iter().filter(|b| b.len() >= 2) {
            let slots = ballot.slots_of(block);
            let current: Vec<u8> = slots.iter().map(|&s| ballot.at(s) as u8).collect();
            let mut order: Vec<u8> = block.iter().map(|x| x as u8).collect();
            loop {
                // only reorderings inside contiguous runs of the block keep
                // every comparison with outside alternatives intact
                let moved = ballot.fill_slots(&slots, &order);
                if order != current && differs_only_within(ballot, &moved, block) {
                    let after = rule.evaluate(&p.with_ballot(voter, moved.clone()))?;
                    let premise = match mode {
                        BlockMode::Unchosen => true,
                        BlockMode::Localized => block.intersection(set) == block.intersection(after),
                    };
                    if premise && after != set {
                        return Ok(Some(modification(p, voter, moved, block.iter().collect(), set, after)));
                    }
                }
                if !next_permutation(&mut order) {
                    break;
                }
            }
        }
    }
    Ok(None)
}

/// Whether two ballots agree on every pair with at least one member outside `block`.
fn differs_only_within(before: &Ballot, after: &Ballot, block: ChoiceSet) -> bool {
    let m = before.m();
    (0..m).filter(|&x| !block.contains(x)).all(|x| (0..m).all(|y| x == y || before.prefers(x, y) == after.prefers(x, y)))
}

fn single_voter_change(before: &Profile, after: &Profile, voter: usize) -> bool {
    before.n() == after.n()
        && before.m() == after.m()
        && (0..before.n()).all(|v| v == voter || before.ballot(v) == after.ballot(v))
}

/// Re-verifies a verdict's witness from scratch. Returns `Ok(true)` when the
/// witness is a genuine counterexample (or the verdict carries none).
pub fn replay(verdict: &AxiomVerdict) -> Result<bool, VerifyError> {
    let rule = verdict.rule;
    let Some(witness) = &verdict.witness else {
        return Ok(verdict.outcome == Outcome::HoldsOnUniverse);
    };
    let ok = match (verdict.axiom, witness) {
        (Axiom::Strategyproofness | Axiom::FPlusStrategyproofness, Witness::Manipulation(m)) => {
            let honest = rule.evaluate(&m.profile)?;
            let new = rule.evaluate(&m.manipulated_profile())?;
            m.profile.ballot(m.voter) == &m.true_ballot
                && (honest, new) == (m.honest_set, m.manipulated_set)
                && compare(m.extension, &m.true_ballot, new, honest) == SetComparison::LeftPreferred
        }
        (Axiom::StrongStrategyproofness | Axiom::StrongFPlusStrategyproofness, Witness::UnsafeDeviation(m)) => {
            let honest = rule.evaluate(&m.profile)?;
            let new = rule.evaluate(&m.manipulated_profile())?;
            let safe = match m.extension {
                ExtensionKind::Fishburn => fishburn_prefers(&m.true_ballot, honest, new),
                ExtensionKind::FPlus => crate::extensions::fplus_weakly_prefers(&m.true_ballot, honest, new),
            };
            m.profile.ballot(m.voter) == &m.true_ballot && honest != new && !safe
        }
        (Axiom::GroupStrategyproofness, Witness::GroupManipulation(g)) => {
            let honest = rule.evaluate(&g.profile)?;
            let new = rule.evaluate(&g.manipulated_profile())?;
            honest != new && g.voters.iter().all(|&v| fishburn_prefers(g.profile.ballot(v), new, honest))
        }
        (Axiom::Pairwiseness | Axiom::Majoritarianess, Witness::ProfilePair { first, second, .. }) => {
            let (g1, g2) = (MarginMatrix::of(first), MarginMatrix::of(second));
            let same = if verdict.axiom == Axiom::Pairwiseness { g1 == g2 } else { g1.relation() == g2.relation() };
            same && rule.evaluate(first)? != rule.evaluate(second)?
        }
        (Axiom::Neutrality, Witness::Relabeling { profile, permutation, relabeled, .. }) => {
            profile.relabel(permutation) == *relabeled
                && rule.evaluate(relabeled)? != image(rule.evaluate(profile)?, permutation)
        }
        (Axiom::Homogeneity, Witness::Replication { profile, k, .. }) => {
            *k >= 2 && rule.evaluate(&profile.repeated(*k))? != rule.evaluate(profile)?
        }
        (Axiom::NonImposition | Axiom::SetNonImposition, Witness::Missing { sets }) => {
            // a bounded claim: none of the sets occurs among the universe outputs
            let profiles = verdict.universe.profiles()?;
            let mut ok = true;
            for p in &profiles {
                if sets.contains(&rule.evaluate(p)?) {
                    ok = false;
                    break;
                }
            }
            ok
        }
        (Axiom::StrongCondorcetConsistency, Witness::SingleProfile { profile, .. }) => {
            strong_condorcet_at(profile, rule.evaluate(profile)?).is_some()
        }
        (Axiom::Cos, Witness::SingleProfile { profile, .. }) => cos_at(profile, rule.evaluate(profile)?).is_some(),
        (Axiom::FishburnEfficiency, Witness::SingleProfile { profile, better_set: Some(x), .. }) => {
            let set = rule.evaluate(profile)?;
            *x != set && profile.ballots().iter().all(|b| fishburn_prefers(b, *x, set))
        }
        (Axiom::CloneSymmetry, Witness::SingleProfile { profile, .. }) => {
            clone_symmetry_at(profile, rule.evaluate(profile)?).is_some()
        }
        (axiom @ (Axiom::Wmon | Axiom::Wsmon | Axiom::Iua | Axiom::Wloc), Witness::Modification { before, after, voter, focus, .. }) => {
            let before_set = rule.evaluate(before)?;
            let after_set = rule.evaluate(after)?;
            let (old, new) = (before.ballot(*voter), after.ballot(*voter));
            single_voter_change(before, after, *voter)
                && match axiom {
                    Axiom::Wmon => {
                        let (a, b) = (focus[0], focus[1]);
                        new.rank_of(a) + 1 == new.rank_of(b)
                            && old.rank_of(b) + 1 == old.rank_of(a)
                            && differs_only_within(old, new, ChoiceSet::from_indices([a, b]))
                            && !wmon_holds(a, b, before_set, after_set)
                    }
                    Axiom::Wsmon => {
                        let a = focus[0];
                        old.top() == a && *new == old.push_top_to_bottom() && !before_set.contains(a) && after_set != before_set
                    }
                    Axiom::Iua => {
                        let block: ChoiceSet = focus.iter().copied().collect();
                        block.is_subset(before_set.complement(before.m()))
                            && differs_only_within(old, new, block)
                            && after_set != before_set
                    }
                    _ => {
                        let block: ChoiceSet = focus.iter().copied().collect();
                        differs_only_within(old, new, block)
                            && block.intersection(before_set) == block.intersection(after_set)
                            && after_set != before_set
                    }
                }
        }
        (Axiom::DominantSetRule, Witness::SingleProfile { profile, .. }) => !is_dominant_in(profile, rule.evaluate(profile)?),
        (Axiom::RobustDominant, Witness::SingleProfile { profile, .. }) => !is_dominant_in(profile, rule.evaluate(profile)?),
        (Axiom::RobustDominant | Axiom::WeakRobustness, Witness::ProfilePair { first, second, .. }) => {
            let (s1, s2) = (rule.evaluate(first)?, rule.evaluate(second)?);
            let premise = if verdict.axiom == Axiom::RobustDominant {
                is_dominant_in(second, s1)
            } else {
                robust_premise(&MarginMatrix::of(first), &MarginMatrix::of(second), s1)
            };
            premise && !s2.is_subset(s1)
        }
        _ => false,
    };
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SweepConfig {
        SweepConfig::default()
    }

    fn check(axiom: Axiom, rule: Rule, u: Universe) -> AxiomVerdict {
        let v = check_axiom(axiom, rule, &u, &cfg()).unwrap();
        assert!(replay(&v).unwrap() || v.outcome == Outcome::HoldsOnUniverse, "{axiom} {rule}: witness does not replay");
        v
    }

    #[test]
    fn names_roundtrip() {
        for a in Axiom::ALL {
            assert_eq!(a.name().parse::<Axiom>().unwrap(), a);
        }
    }

    #[test]
    fn tc_star_is_not_homogeneous() {
        let v = check(Axiom::Homogeneity, Rule::TcStar, Universe::new(3, 1));
        let Some(Witness::Replication { profile, set, replicated_set, .. }) = v.witness else { panic!("{v:?}") };
        assert_eq!(profile.ballot(0), &Ballot::lexicographic(3));
        assert_eq!(set, ChoiceSet::full(3));
        assert_eq!(replicated_set, ChoiceSet::singleton(0));
    }

    #[test]
    fn fab_is_not_neutral() {
        let v = check(Axiom::Neutrality, Rule::Fab { a: 0, b: 1 }, Universe::new(3, 3));
        assert_eq!(v.outcome, Outcome::ViolatedWithWitness);
        assert!(matches!(v.witness, Some(Witness::Relabeling { .. })));
    }

    #[test]
    fn omninomination_is_not_pairwise() {
        let v = check(Axiom::Pairwiseness, Rule::Omninomination, Universe::new(3, 2));
        let Some(Witness::ProfilePair { first, second, .. }) = &v.witness else { panic!() };
        assert_eq!(MarginMatrix::of(first), MarginMatrix::of(second));
        // the documented pair is a member of the same class
        let p = Profile::from_rankings(&[[0, 1, 2], [2, 1, 0]]).unwrap();
        let q = Profile::from_rankings(&[[1, 0, 2], [2, 0, 1]]).unwrap();
        assert_eq!(MarginMatrix::of(&p), MarginMatrix::of(&q));
        assert_eq!(Rule::Omninomination.evaluate(&p).unwrap(), ChoiceSet::from_indices([0, 2]));
        assert_eq!(Rule::Omninomination.evaluate(&q).unwrap(), ChoiceSet::from_indices([1, 2]));
    }

    #[test]
    fn condorcet_rule_misses_pairs() {
        let v = check(Axiom::SetNonImposition, Rule::CondorcetRule, Universe::new(3, 3));
        assert_eq!(v.outcome, Outcome::NotWitnessedInUniverse);
        let Some(Witness::Missing { sets }) = &v.witness else { panic!() };
        assert!(sets.iter().all(|s| s.len() == 2));
        assert_eq!(sets.len(), 3);
        assert!(check(Axiom::NonImposition, Rule::CondorcetRule, Universe::new(3, 3)).outcome.holds());
        assert!(check(Axiom::SetNonImposition, Rule::TopCycle, Universe::new(3, 3)).outcome.holds());
    }

    #[test]
    fn top_cycle_per_profile_axioms() {
        for axiom in [Axiom::Cos, Axiom::StrongCondorcetConsistency, Axiom::Wmon, Axiom::Wsmon, Axiom::Iua, Axiom::Wloc, Axiom::Neutrality] {
            assert!(check(axiom, Rule::TopCycle, Universe::new(3, 3)).outcome.holds(), "{axiom}");
        }
        assert!(check(Axiom::Cos, Rule::TopCycle, Universe::new(4, 3)).outcome.holds());
    }

    #[test]
    fn plurality_violations_replay() {
        for axiom in [Axiom::Pairwiseness, Axiom::Wmon, Axiom::Wsmon, Axiom::Iua, Axiom::Wloc, Axiom::Cos] {
            let v = check(axiom, Rule::Plurality, Universe::new(3, 3));
            if v.outcome == Outcome::ViolatedWithWitness {
                assert!(replay(&v).unwrap(), "{axiom}");
            }
        }
        let v = check(Axiom::StrongCondorcetConsistency, Rule::Plurality, Universe::new(3, 3));
        assert_eq!(v.outcome, Outcome::ViolatedWithWitness);
    }

    #[test]
    fn efficiency_and_clones() {
        assert!(check(Axiom::FishburnEfficiency, Rule::TopCycle, Universe::new(3, 3)).outcome.holds());
        // the Condorcet non-loser rule keeps a Pareto-dominated alternative
        let v = check(Axiom::FishburnEfficiency, Rule::CondorcetNonLoser, Universe::new(3, 1));
        assert_eq!(v.outcome, Outcome::ViolatedWithWitness);
        assert!(check(Axiom::CloneSymmetry, Rule::TopCycle, Universe::new(3, 3)).outcome.holds());
    }

    #[test]
    fn block_premise() {
        let abc = Ballot::lexicographic(3);
        let acb = Ballot::new(vec![0, 2, 1]).unwrap();
        assert!(differs_only_within(&abc, &acb, ChoiceSet::from_indices([1, 2])));
        assert!(!differs_only_within(&abc, &acb, ChoiceSet::from_indices([0, 1])));
    }

    #[test]
    fn forged_witness_is_rejected() {
        let mut v = check(Axiom::Homogeneity, Rule::TcStar, Universe::new(3, 1));
        v.rule = Rule::TopCycle;
        assert!(!replay(&v).unwrap());
    }
}
