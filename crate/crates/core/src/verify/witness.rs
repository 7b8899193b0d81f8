use serde::{Deserialize, Serialize};

use crate::extensions::ExtensionKind;
use crate::profile::{Ballot, Profile};
use crate::set::ChoiceSet;

/// A single voter's deviation from a profile together with both outcomes.
///
/// As a strategyproofness witness, `extension` strictly prefers
/// `manipulated_set` to `honest_set` under `true_ballot`. As a strong
/// strategyproofness witness, `honest_set` fails to be weakly preferred to
/// `manipulated_set`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manipulation {
    pub profile: Profile,
    pub voter: usize,
    pub true_ballot: Ballot,
    pub misreport: Ballot,
    pub honest_set: ChoiceSet,
    pub manipulated_set: ChoiceSet,
    pub extension: ExtensionKind,
}

impl Manipulation {
    pub fn manipulated_profile(&self) -> Profile {
        self.profile.with_ballot(self.voter, self.misreport.clone())
    }
}

/// A joint deviation by a group in which every member Fishburn-prefers the new outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupManipulation {
    pub profile: Profile,
    pub voters: Vec<usize>,
    pub misreports: Vec<Ballot>,
    pub honest_set: ChoiceSet,
    pub manipulated_set: ChoiceSet,
}

impl GroupManipulation {
    pub fn manipulated_profile(&self) -> Profile {
        self.voters
            .iter()
            .zip(&self.misreports)
            .fold(self.profile.clone(), |p, (&v, b)| p.with_ballot(v, b.clone()))
    }
}

/// Concrete counterexample carried by a violated verdict. Every profile is
/// stored in full so the witness can be replayed through the rule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Manipulation(Manipulation),
    /// A deviation that violates strong strategyproofness.
    UnsafeDeviation(Manipulation),
    GroupManipulation(GroupManipulation),
    /// Two profiles that agree on the rule's claimed information basis but
    /// receive different outputs.
    ProfilePair { first: Profile, second: Profile, first_set: ChoiceSet, second_set: ChoiceSet },
    /// `relabeled` is `profile` with alternative `x` renamed `permutation[x]`.
    Relabeling {
        profile: Profile,
        permutation: Vec<usize>,
        relabeled: Profile,
        set: ChoiceSet,
        relabeled_set: ChoiceSet,
    },
    /// `k` copies of `profile`.
    Replication { profile: Profile, k: usize, set: ChoiceSet, replicated_set: ChoiceSet },
    /// One voter's ballot modified. `focus` is `[a, b]` for a reinforcement
    /// of `a` against `b`, `[a]` for a top-to-bottom push of `a`, and the
    /// reordered block otherwise.
    Modification {
        before: Profile,
        after: Profile,
        voter: usize,
        focus: Vec<usize>,
        before_set: ChoiceSet,
        after_set: ChoiceSet,
    },
    /// A violation visible in one profile. `alternatives` names the culprit(s);
    /// `better_set` is a set every voter Fishburn-prefers to the outcome.
    SingleProfile {
        profile: Profile,
        set: ChoiceSet,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        alternatives: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        better_set: Option<ChoiceSet>,
    },
    /// Existence axioms: output sets never observed on the universe.
    Missing { sets: Vec<ChoiceSet> },
}

impl Witness {
    /// Every profile the witness mentions, in a fixed order.
    pub fn profiles(&self) -> Vec<Profile> {
        match self {
            Witness::Manipulation(m) | Witness::UnsafeDeviation(m) => vec![m.profile.clone(), m.manipulated_profile()],
            Witness::GroupManipulation(g) => vec![g.profile.clone(), g.manipulated_profile()],
            Witness::ProfilePair { first, second, .. } => vec![first.clone(), second.clone()],
            Witness::Relabeling { profile, relabeled, .. } => vec![profile.clone(), relabeled.clone()],
            Witness::Replication { profile, k, .. } => vec![profile.clone(), profile.repeated(*k)],
            Witness::Modification { before, after, .. } => vec![before.clone(), after.clone()],
            Witness::SingleProfile { profile, .. } => vec![profile.clone()],
            Witness::Missing { .. } => vec![],
        }
    }
}
