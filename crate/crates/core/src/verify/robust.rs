use std::collections::HashSet;

use rayon::prelude::*;

use crate::dominance::is_dominant;
use crate::error::{RuleError, VerifyError};
use crate::majority::{MajorityRelation, MarginMatrix};
use crate::mcgarvey::realize_relation;
use crate::profile::Profile;
use crate::rules::{BasisTag, Rule};
use crate::set::ChoiceSet;

use super::axioms::Axiom;
use super::witness::Witness;
use super::{first_hit, AxiomVerdict, SweepConfig, Universe};

/// One scan item: a representative profile of its information class.
struct Item {
    profile: Option<Profile>,
    relation: MajorityRelation,
    margins: Option<MarginMatrix>,
    output: ChoiceSet,
}

impl Item {
    fn profile(&self) -> Profile {
        match &self.profile {
            Some(p) => p.clone(),
            None => realize_relation(&self.relation, 2).expect("weight 2 realizes any relation"),
        }
    }
}

/// Majoritarian rules scan every majority relation on `m` alternatives
/// (tie-free ones only on odd-only universes); pairwise rules scan the
/// distinct margin matrices of the universe; other rules scan its profiles.
fn items(rule: Rule, universe: &Universe, by_relation: bool, config: &SweepConfig) -> Result<Vec<Item>, VerifyError> {
    universe.validate()?;
    if by_relation && rule.basis() == BasisTag::Majoritarian {
        let count = MajorityRelation::count(universe.m);
        config.guard(count as u128)?;
        let relations: Vec<MajorityRelation> =
            MajorityRelation::all(universe.m).filter(|r| !universe.odd_only || !r.has_ties()).collect();
        return relations
            .into_par_iter()
            .map(|relation| {
                let output = rule.evaluate_relation(&relation)?;
                Ok(Item { profile: None, relation, margins: None, output })
            })
            .collect::<Result<Vec<_>, RuleError>>()
            .map_err(VerifyError::from);
    }
    config.guard(universe.size())?;
    let mut profiles = universe.profiles()?;
    if rule.basis().is_pairwise() {
        let mut seen = HashSet::new();
        profiles.retain(|p| seen.insert(MarginMatrix::of(p)));
    }
    profiles
        .into_par_iter()
        .map(|p| {
            let g = MarginMatrix::of(&p);
            let output = rule.evaluate(&p)?;
            Ok(Item { relation: g.relation(), margins: Some(g), profile: Some(p), output })
        })
        .collect::<Result<Vec<_>, RuleError>>()
        .map_err(VerifyError::from)
}

fn dominance_violation(items: &[Item]) -> Option<(usize, Witness)> {
    items.iter().enumerate().find(|(_, it)| !is_dominant(&it.relation, it.output)).map(|(i, it)| {
        (i, Witness::SingleProfile { profile: it.profile(), set: it.output, alternatives: vec![], better_set: None })
    })
}

/// Every output is a dominant set of its own majority relation.
pub fn check_dominant_set_rule(rule: Rule, universe: &Universe, config: &SweepConfig) -> Result<AxiomVerdict, VerifyError> {
    let items = items(rule, universe, true, config)?;
    let hit = dominance_violation(&items);
    Ok(AxiomVerdict::from_scan(Axiom::DominantSetRule, rule, *universe, items.len() as u64, hit))
}

fn pair_scan(items: &[Item], premise: impl Fn(&Item, &Item) -> bool + Sync) -> Option<(usize, Witness)> {
    let hit = first_hit(items.len(), |i| {
        let r = &items[i];
        Ok(items
            .iter()
            .find(|r2| premise(r, r2) && !r2.output.is_subset(r.output))
            .map(|r2| Witness::ProfilePair {
                first: r.profile(),
                second: r2.profile(),
                first_set: r.output,
                second_set: r2.output,
            }))
    })
    .expect("pair scans evaluate no rules");
    hit
}

/// Dominant set rule, and `f(R')` ⊆ `f(R)` whenever `f(R)` is dominant in `R'`.
pub fn check_robust_dominant(rule: Rule, universe: &Universe, config: &SweepConfig) -> Result<AxiomVerdict, VerifyError> {
    let items = items(rule, universe, true, config)?;
    let n = items.len() as u128;
    config.guard(n * n)?;
    let hit = dominance_violation(&items).or_else(|| pair_scan(&items, |r, r2| is_dominant(&r2.relation, r.output)));
    Ok(AxiomVerdict::from_scan(Axiom::RobustDominant, rule, *universe, items.len() as u64, hit))
}

/// `g_R(x, y) <= g_R'(x, y)` for every chosen `x` and unchosen `y`.
pub fn robust_premise(g: &MarginMatrix, g2: &MarginMatrix, chosen: ChoiceSet) -> bool {
    let unchosen = chosen.complement(g.m());
    chosen.iter().all(|x| unchosen.iter().all(|y| g.get(x, y) <= g2.get(x, y)))
}

/// `f(R')` ⊆ `f(R)` whenever `R'` weakly strengthens every margin of a chosen over an unchosen alternative.
pub fn check_weak_robustness(rule: Rule, universe: &Universe, config: &SweepConfig) -> Result<AxiomVerdict, VerifyError> {
    let items = items(rule, universe, false, config)?;
    let n = items.len() as u128;
    config.guard(n * n)?;
    let hit = pair_scan(&items, |r, r2| {
        robust_premise(r.margins.as_ref().expect("margins"), r2.margins.as_ref().expect("margins"), r.output)
    });
    Ok(AxiomVerdict::from_scan(Axiom::WeakRobustness, rule, *universe, items.len() as u64, hit))
}
