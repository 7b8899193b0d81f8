//! Catalog of social choice correspondences.
//!
//! Each rule declares its informational basis. Majoritarian rules can be
//! evaluated on a bare [`MajorityRelation`], pairwise rules on a
//! [`MarginMatrix`], and every rule on a [`Profile`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::dominance::{is_dominant, schwartz_set, top_cycle, top_cycle_within};
use crate::error::RuleError;
use crate::majority::{MajorityRelation, MarginMatrix, PairOutcome};
use crate::profile::{next_permutation, Profile};
use crate::set::ChoiceSet;

/// Largest `m` for which Kemeny's brute force runs.
pub const KEMENY_MAX_ALTERNATIVES: usize = 8;

/// Margin a single winner needs against every other alternative under
/// [`Rule::MarginThreshold`].
pub const MARGIN_THRESHOLD: i32 = 2;

/// Information an SCC's output depends on. Each level refines the previous one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BasisTag {
    ProfileBased,
    Pairwise,
    Majoritarian,
}

impl BasisTag {
    pub fn is_pairwise(self) -> bool {
        self >= BasisTag::Pairwise
    }

    pub fn is_majoritarian(self) -> bool {
        self == BasisTag::Majoritarian
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Smallest dominant set.
    TopCycle,
    /// Top cycle of `x ≿ y iff g(x, y) ≥ −1`.
    TcStar,
    /// Condorcet winner if one exists, `A` otherwise.
    CondorcetRule,
    /// `A` minus the Condorcet loser, if any.
    CondorcetNonLoser,
    /// Every alternative some voter ranks first.
    Omninomination,
    ParetoRule,
    /// Top cycle among the Pareto-optimal alternatives.
    TcOfPo,
    /// Pareto-optimal members of the top cycle.
    PoOfTc,
    Plurality,
    Borda,
    Copeland,
    Maximin,
    Kemeny,
    /// Uncovered set; tournaments only.
    UncoveredSet,
    /// `{a}` if `a ≻ A\{a,b}` and `a ≿ b`, the Condorcet rule otherwise.
    Fab { a: u8, b: u8 },
    /// `{x}` if `g(x, y) > 2` for all `y ≠ x`, `A` otherwise.
    MarginThreshold,
    /// Top cycle of `x ≿ y iff g(x, y) ≥ −k`.
    SupermajorityTc { k: u32 },
    /// Top cycle of the shifted relation: for `x < y`, `x ≻ y` iff
    /// `g(x, y) > k`, tie iff `g(x, y) = k`, `y ≻ x` otherwise.
    ShiftedTc { k: i32 },
    SchwartzSet,
}

impl Rule {
    /// Every built-in rule with default parameters.
    pub fn catalog() -> Vec<Rule> {
        vec![
            Rule::TopCycle,
            Rule::TcStar,
            Rule::CondorcetRule,
            Rule::CondorcetNonLoser,
            Rule::Omninomination,
            Rule::ParetoRule,
            Rule::TcOfPo,
            Rule::PoOfTc,
            Rule::Plurality,
            Rule::Borda,
            Rule::Copeland,
            Rule::Maximin,
            Rule::Kemeny,
            Rule::UncoveredSet,
            Rule::Fab { a: 0, b: 1 },
            Rule::MarginThreshold,
            Rule::SupermajorityTc { k: 1 },
            Rule::ShiftedTc { k: 1 },
            Rule::SchwartzSet,
        ]
    }

    pub fn basis(self) -> BasisTag {
        use Rule::*;
        match self {
            TopCycle | CondorcetRule | CondorcetNonLoser | Copeland | UncoveredSet | Fab { .. } | SchwartzSet => {
                BasisTag::Majoritarian
            }
            TcStar | Borda | Maximin | Kemeny | MarginThreshold | SupermajorityTc { .. } | ShiftedTc { .. } => {
                BasisTag::Pairwise
            }
            Omninomination | ParetoRule | TcOfPo | PoOfTc | Plurality => BasisTag::ProfileBased,
        }
    }

    /// Rules that return a dominant set on every input. `Fab` is not one:
    /// it returns `{a}` when `a` merely ties `b`.
    pub fn is_dominant_set_rule(self) -> bool {
        matches!(self, Rule::TopCycle | Rule::CondorcetRule | Rule::CondorcetNonLoser | Rule::MarginThreshold)
    }

    pub fn evaluate(self, profile: &Profile) -> Result<ChoiceSet, RuleError> {
        match self.basis() {
            BasisTag::ProfileBased => self.evaluate_profile_only(profile),
            _ => self.evaluate_margins(&MarginMatrix::of(profile)),
        }
    }

    fn evaluate_profile_only(self, profile: &Profile) -> Result<ChoiceSet, RuleError> {
        Ok(match self {
            Rule::Omninomination => profile.top_ranked(),
            Rule::ParetoRule => profile.pareto_optimal(),
            Rule::TcOfPo => {
                let rel = MarginMatrix::of(profile).relation();
                top_cycle_within(&rel, profile.pareto_optimal())
            }
            Rule::PoOfTc => {
                let rel = MarginMatrix::of(profile).relation();
                top_cycle(&rel).intersection(profile.pareto_optimal())
            }
            Rule::Plurality => {
                let mut score = vec![0usize; profile.m()];
                for b in profile.ballots() {
                    score[b.top()] += 1;
                }
                argmax(score.iter().map(|&s| s as i64))
            }
            _ => unreachable!("{self} is not profile-based"),
        })
    }

    /// Evaluates a pairwise (or majoritarian) rule on margins alone.
    pub fn evaluate_margins(self, g: &MarginMatrix) -> Result<ChoiceSet, RuleError> {
        let m = g.m();
        Ok(match self {
            Rule::TcStar => top_cycle(&supermajority_relation(g, 1)),
            Rule::SupermajorityTc { k } => top_cycle(&supermajority_relation(g, k as i32)),
            Rule::ShiftedTc { k } => top_cycle(&shifted_relation(g, k)),
            Rule::Borda => argmax((0..m).map(|x| (0..m).map(|y| g.get(x, y) as i64).sum())),
            Rule::Maximin => argmax((0..m).map(|x| (0..m).filter(|&y| y != x).map(|y| g.get(x, y) as i64).min().unwrap_or(0))),
            Rule::Kemeny => kemeny(g, self)?,
            Rule::MarginThreshold => {
                let full = ChoiceSet::full(m);
                (0..m)
                    .find(|&x| (0..m).all(|y| y == x || g.get(x, y) > MARGIN_THRESHOLD))
                    .map_or(full, ChoiceSet::singleton)
            }
            _ if self.basis() == BasisTag::Majoritarian => self.evaluate_relation(&g.relation())?,
            _ => return Err(RuleError::InsufficientBasis { rule: self.to_string(), needs: "a full profile" }),
        })
    }

    /// Evaluates a majoritarian rule on the majority relation alone.
    pub fn evaluate_relation(self, rel: &MajorityRelation) -> Result<ChoiceSet, RuleError> {
        let m = rel.m();
        let full = ChoiceSet::full(m);
        Ok(match self {
            Rule::TopCycle => top_cycle(rel),
            Rule::CondorcetRule => rel.condorcet_winner().map_or(full, ChoiceSet::singleton),
            Rule::CondorcetNonLoser => match rel.condorcet_loser() {
                Some(x) if m > 1 => full.without(x),
                _ => full,
            },
            Rule::Copeland => argmax((0..m).map(|x| rel.dominion(x).len() as i64 - rel.dominators(x).len() as i64)),
            Rule::UncoveredSet => {
                if rel.has_ties() {
                    return Err(RuleError::TiesUnsupported { rule: self.to_string() });
                }
                uncovered_set(rel)
            }
            Rule::Fab { a, b } => {
                let (a, b) = (a as usize, b as usize);
                for idx in [a, b] {
                    if idx >= m {
                        return Err(RuleError::AlternativeOutOfRange { rule: self.to_string(), index: idx, m });
                    }
                }
                let others = full.without(a).without(b);
                if rel.set_beats(ChoiceSet::singleton(a), others) && rel.weakly(a, b) {
                    ChoiceSet::singleton(a)
                } else {
                    rel.condorcet_winner().map_or(full, ChoiceSet::singleton)
                }
            }
            Rule::SchwartzSet => schwartz_set(rel),
            _ => {
                let needs = if self.basis().is_pairwise() { "majority margins" } else { "a full profile" };
                return Err(RuleError::InsufficientBasis { rule: self.to_string(), needs });
            }
        })
    }

    /// Human-readable label used in reports.
    pub fn label(self) -> String {
        self.to_string()
    }
}

/// `x ≿ y iff g(x, y) ≥ −k`.
pub fn supermajority_relation(g: &MarginMatrix, k: i32) -> MajorityRelation {
    MajorityRelation::from_weak(g.m(), |x, y| g.get(x, y) >= -k)
}

/// For `x < y`: `x ≻ y` if `g(x, y) > k`, tie if `g(x, y) = k`, `y ≻ x` otherwise.
pub fn shifted_relation(g: &MarginMatrix, k: i32) -> MajorityRelation {
    MajorityRelation::from_pairs(g.m(), |x, y| match g.get(x, y).cmp(&k) {
        std::cmp::Ordering::Greater => PairOutcome::StrictWin,
        std::cmp::Ordering::Equal => PairOutcome::Tie,
        std::cmp::Ordering::Less => PairOutcome::StrictLoss,
    })
}

fn argmax(scores: impl Iterator<Item = i64>) -> ChoiceSet {
    let scores: Vec<i64> = scores.collect();
    let best = *scores.iter().max().expect("at least one alternative");
    scores.iter().enumerate().filter(|&(_, &s)| s == best).map(|(x, _)| x).collect()
}

/// `y` is covered if some `x ≻ y` also beats everything `y` beats.
fn uncovered_set(rel: &MajorityRelation) -> ChoiceSet {
    let m = rel.m();
    (0..m)
        .filter(|&y| !(0..m).any(|x| rel.strictly(x, y) && rel.dominion(y).is_subset(rel.dominion(x))))
        .collect()
}

/// Alternatives ranked first in some ranking maximizing total agreement with
/// the margins, `Σ_{x above y} g(x, y)`.
fn kemeny(g: &MarginMatrix, rule: Rule) -> Result<ChoiceSet, RuleError> {
    let m = g.m();
    if m > KEMENY_MAX_ALTERNATIVES {
        return Err(RuleError::InstanceTooLarge { rule: rule.to_string(), m, max: KEMENY_MAX_ALTERNATIVES });
    }
    let mut perm: Vec<usize> = (0..m).collect();
    let mut best = i64::MIN;
    let mut winners = ChoiceSet::EMPTY;
    loop {
        let mut score = 0i64;
        for i in 0..m {
            for j in i + 1..m {
                score += g.get(perm[i], perm[j]) as i64;
            }
        }
        match score.cmp(&best) {
            std::cmp::Ordering::Greater => {
                best = score;
                winners = ChoiceSet::singleton(perm[0]);
            }
            std::cmp::Ordering::Equal => winners = winners.with(perm[0]),
            std::cmp::Ordering::Less => {}
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(winners)
}

/// `true` when `set` is dominant in the majority relation of `profile`.
pub fn is_dominant_in(profile: &Profile, set: ChoiceSet) -> bool {
    is_dominant(&MarginMatrix::of(profile).relation(), set)
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::TopCycle => f.write_str("tc"),
            Rule::TcStar => f.write_str("tc-star"),
            Rule::CondorcetRule => f.write_str("condorcet"),
            Rule::CondorcetNonLoser => f.write_str("condorcet-non-loser"),
            Rule::Omninomination => f.write_str("omninomination"),
            Rule::ParetoRule => f.write_str("pareto"),
            Rule::TcOfPo => f.write_str("tc-po"),
            Rule::PoOfTc => f.write_str("po-tc"),
            Rule::Plurality => f.write_str("plurality"),
            Rule::Borda => f.write_str("borda"),
            Rule::Copeland => f.write_str("copeland"),
            Rule::Maximin => f.write_str("maximin"),
            Rule::Kemeny => f.write_str("kemeny"),
            Rule::UncoveredSet => f.write_str("uncovered"),
            Rule::Fab { a, b } => write!(f, "fab:a={a},b={b}"),
            Rule::MarginThreshold => f.write_str("margin-threshold"),
            Rule::SupermajorityTc { k } => write!(f, "supermajority-tc:k={k}"),
            Rule::ShiftedTc { k } => write!(f, "shifted-tc:k={k}"),
            Rule::SchwartzSet => f.write_str("schwartz"),
        }
    }
}

fn parse_params(spec: &str, params: &str) -> Result<Vec<(String, String)>, RuleError> {
    params
        .split(',')
        .map(|kv| {
            let (k, v) = kv.split_once('=').ok_or_else(|| RuleError::BadParameter(spec.to_string()))?;
            Ok((k.trim().to_string(), v.trim().to_string()))
        })
        .collect()
}

fn parse_alternative(spec: &str, v: &str) -> Result<u8, RuleError> {
    let bad = || RuleError::BadParameter(spec.to_string());
    match v.as_bytes() {
        [c] if c.is_ascii_lowercase() => Ok(c - b'a'),
        _ => v.parse::<u8>().ok().filter(|&i| (i as usize) < crate::set::MAX_ALTERNATIVES).ok_or_else(bad),
    }
}

impl FromStr for Rule {
    type Err = RuleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, params) = match s.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (s, None),
        };
        let bad = || RuleError::BadParameter(s.to_string());
        let params = params.map(|p| parse_params(s, p)).transpose()?.unwrap_or_default();
        let get = |key: &str| params.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str());
        if params.iter().any(|(k, _)| !matches!((name, k.as_str()), ("fab", "a" | "b") | ("supermajority-tc" | "shifted-tc", "k"))) {
            return Err(bad());
        }
        Ok(match name {
            "tc" | "top-cycle" => Rule::TopCycle,
            "tc-star" => Rule::TcStar,
            "condorcet" => Rule::CondorcetRule,
            "condorcet-non-loser" => Rule::CondorcetNonLoser,
            "omninomination" => Rule::Omninomination,
            "pareto" => Rule::ParetoRule,
            "tc-po" => Rule::TcOfPo,
            "po-tc" => Rule::PoOfTc,
            "plurality" => Rule::Plurality,
            "borda" => Rule::Borda,
            "copeland" => Rule::Copeland,
            "maximin" => Rule::Maximin,
            "kemeny" => Rule::Kemeny,
            "uncovered" => Rule::UncoveredSet,
            "fab" => {
                let a = get("a").map(|v| parse_alternative(s, v)).transpose()?.unwrap_or(0);
                let b = get("b").map(|v| parse_alternative(s, v)).transpose()?.unwrap_or(1);
                if a == b {
                    return Err(bad());
                }
                Rule::Fab { a, b }
            }
            "margin-threshold" => Rule::MarginThreshold,
            "supermajority-tc" => Rule::SupermajorityTc { k: get("k").map_or(Ok(1), |v| v.parse().map_err(|_| bad()))? },
            "shifted-tc" => Rule::ShiftedTc { k: get("k").map_or(Ok(1), |v| v.parse().map_err(|_| bad()))? },
            "schwartz" => Rule::SchwartzSet,
            _ => return Err(RuleError::UnknownRule(s.to_string())),
        })
    }
}

impl Serialize for Rule {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rule {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> ChoiceSet {
        xs.iter().copied().collect()
    }

    fn fig2_left() -> Profile {
        Profile::from_rankings(&[[0, 1, 2], [0, 1, 2], [2, 0, 1], [2, 0, 1], [1, 2, 0]]).unwrap()
    }

    fn fig2_right() -> Profile {
        Profile::from_rankings(&[[0, 1, 2], [0, 1, 2], [2, 0, 1], [2, 0, 1], [2, 1, 0]]).unwrap()
    }

    fn fig1() -> Profile {
        Profile::from_rankings(&[[0, 4, 1, 2, 3], [1, 2, 0, 3, 4], [2, 0, 1, 4, 3], [3, 1, 2, 0, 4]]).unwrap()
    }

    #[test]
    fn plurality_on_manipulation_example() {
        assert_eq!(Rule::Plurality.evaluate(&fig2_left()).unwrap(), set(&[0, 2]));
        assert_eq!(Rule::Plurality.evaluate(&fig2_right()).unwrap(), set(&[2]));
    }

    #[test]
    fn borda_matches_positional_scores() {
        // Positional scores a=6, c=5, b=4.
        let p = fig2_left();
        let mut positional = [0i64; 3];
        for b in p.ballots() {
            for (rank, x) in b.ranking().enumerate() {
                positional[x] += (2 - rank) as i64;
            }
        }
        assert_eq!(positional, [6, 4, 5]);
        assert_eq!(Rule::Borda.evaluate(&p).unwrap(), set(&[0]));
    }

    #[test]
    fn fig1_rules() {
        assert_eq!(Rule::TopCycle.evaluate(&fig1()).unwrap(), set(&[0, 1, 2]));
        assert_eq!(Rule::Omninomination.evaluate(&fig1()).unwrap(), set(&[0, 1, 2, 3]));
        assert_eq!(Rule::SchwartzSet.evaluate(&fig1()).unwrap(), set(&[1]));
    }

    #[test]
    fn tc_star_is_not_homogeneous() {
        let one = Profile::from_rankings(&[[0, 1, 2]]).unwrap();
        assert_eq!(Rule::TcStar.evaluate(&one).unwrap(), set(&[0, 1, 2]));
        assert_eq!(Rule::TcStar.evaluate(&one.repeated(2)).unwrap(), set(&[0]));
    }

    #[test]
    fn condorcet_rule_on_unanimous_profile() {
        let p = Profile::from_rankings(&[[2, 0, 1], [2, 1, 0], [2, 0, 1]]).unwrap();
        assert_eq!(Rule::CondorcetRule.evaluate(&p).unwrap(), set(&[2]));
    }

    #[test]
    fn uncovered_set_rejects_ties() {
        let p = Profile::from_rankings(&[[0, 1, 2], [1, 0, 2]]).unwrap();
        assert!(matches!(Rule::UncoveredSet.evaluate(&p), Err(RuleError::TiesUnsupported { .. })));
    }

    #[test]
    fn kemeny_rejects_large_instances() {
        let p = Profile::from_rankings(&[(0..9).collect::<Vec<_>>()]).unwrap();
        assert!(matches!(Rule::Kemeny.evaluate(&p), Err(RuleError::InstanceTooLarge { .. })));
    }

    #[test]
    fn margin_threshold() {
        let three = Profile::from_rankings(&[[1, 0, 2]; 3]).unwrap();
        assert_eq!(Rule::MarginThreshold.evaluate(&three).unwrap(), set(&[1]));
        assert_eq!(Rule::MarginThreshold.evaluate(&three.repeated(2)).unwrap(), set(&[1]));
        let two = Profile::from_rankings(&[[1, 0, 2]; 2]).unwrap();
        assert_eq!(Rule::MarginThreshold.evaluate(&two).unwrap(), set(&[0, 1, 2]));
    }

    #[test]
    fn fab_rule() {
        // a ≿ b and a beats c: {a}
        let p = Profile::from_rankings(&[[0, 1, 2], [1, 0, 2]]).unwrap();
        assert_eq!(Rule::Fab { a: 0, b: 1 }.evaluate(&p).unwrap(), set(&[0]));
        assert_eq!(Rule::CondorcetRule.evaluate(&p).unwrap(), set(&[0, 1, 2]));
        assert!(Rule::Fab { a: 0, b: 5 }.evaluate(&p).is_err());
    }

    #[test]
    fn shifted_relation_orientation() {
        let g = MarginMatrix::of(&Profile::from_rankings(&[[0, 1, 2]]).unwrap());
        let rel = shifted_relation(&g, 1);
        assert!(rel.tied(0, 1) && rel.tied(0, 2) && rel.tied(1, 2));
        let rel = shifted_relation(&g.scaled(2), 1);
        assert!(rel.strictly(0, 1));
        assert_eq!(shifted_relation(&g, 0), g.relation());
    }

    #[test]
    fn catalog_and_names() {
        let cat = Rule::catalog();
        assert_eq!(cat.len(), 19);
        assert!(cat.contains(&Rule::TopCycle));
        assert!(cat.contains(&Rule::Fab { a: 0, b: 1 }));
        for r in cat {
            assert_eq!(r.to_string().parse::<Rule>().unwrap(), r);
        }
        assert_eq!("supermajority-tc:k=2".parse::<Rule>().unwrap(), Rule::SupermajorityTc { k: 2 });
        assert_eq!("fab:a=c,b=a".parse::<Rule>().unwrap(), Rule::Fab { a: 2, b: 0 });
        assert!("fab:a=0,b=0".parse::<Rule>().is_err());
        assert!("tc:k=1".parse::<Rule>().is_err());
        assert!(matches!("nope".parse::<Rule>(), Err(RuleError::UnknownRule(_))));
    }

    #[test]
    fn basis_tags() {
        assert_eq!(Rule::TopCycle.basis(), BasisTag::Majoritarian);
        assert_eq!(Rule::Borda.basis(), BasisTag::Pairwise);
        assert_eq!(Rule::Omninomination.basis(), BasisTag::ProfileBased);
        assert!(Rule::Plurality.evaluate_margins(&MarginMatrix::zero(3)).is_err());
        assert!(Rule::Borda.evaluate_relation(&MarginMatrix::zero(3).relation()).is_err());
    }

    #[test]
    fn single_alternative() {
        let p = Profile::from_rankings(&[[0]]).unwrap();
        for r in Rule::catalog() {
            if matches!(r, Rule::Fab { .. }) {
                continue;
            }
            assert_eq!(r.evaluate(&p).unwrap(), set(&[0]), "{r}");
        }
    }
}
