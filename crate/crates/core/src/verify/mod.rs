//! Bounded verification: manipulation search, the axiom suite, robustness
//! checks and theorem corroboration over enumerated profile universes.
//!
//! All sweeps scan items in a fixed order and report the witness with the
//! smallest scan index, so results do not depend on the thread count.

mod axioms;
mod manipulation;
mod robust;
mod search;
mod theorems;
mod universe;
mod witness;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{RuleError, VerifyError};
use crate::rules::Rule;

pub use axioms::{check_axiom, replay, Axiom, DEFAULT_MAX_GROUP};
pub use manipulation::{
    find_group_manipulation, find_manipulation, find_strong_violation, sweep_group_strategyproofness,
    sweep_strategyproofness, sweep_strong_strategyproofness,
};
pub use robust::{check_dominant_set_rule, check_robust_dominant, check_weak_robustness, robust_premise};
pub use search::{search_manipulation, SearchOutcome, SearchParams};
pub use theorems::{corroborate_theorems, TheoremCheck, TheoremReport, TheoremRow, CHARACTERIZATION};
pub use universe::{ProfileSpace, Universe, MAX_UNIVERSE_ALTERNATIVES};
pub use witness::{GroupManipulation, Manipulation, Witness};

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "SCCHECK_SWEEP_BUDGET";
/// Default ceiling on estimated rule evaluations per sweep.
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub budget: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { budget: DEFAULT_BUDGET }
    }
}

impl SweepConfig {
    pub fn with_budget(budget: u64) -> Self {
        SweepConfig { budget }
    }

    /// Default budget, overridden by `SCCHECK_SWEEP_BUDGET` when it parses.
    pub fn from_env() -> Self {
        let budget = std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_BUDGET);
        SweepConfig { budget }
    }

    pub fn guard(&self, estimated: u128) -> Result<(), VerifyError> {
        if estimated > self.budget as u128 {
            Err(VerifyError::BudgetExceeded { estimated, budget: self.budget })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    HoldsOnUniverse,
    ViolatedWithWitness,
    /// An existence axiom whose witnesses were not all found in the universe.
    NotWitnessedInUniverse,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::HoldsOnUniverse => "holds",
            Outcome::ViolatedWithWitness => "violated",
            Outcome::NotWitnessedInUniverse => "not-witnessed",
        }
    }

    pub fn holds(self) -> bool {
        self == Outcome::HoldsOnUniverse
    }
}

/// Result of checking one axiom for one rule on one universe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    pub rule: Rule,
    pub universe: Universe,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Items scanned in scan order up to and including the witness (all of
    /// them when the axiom holds).
    pub checked: u64,
}

impl AxiomVerdict {
    fn from_scan(axiom: Axiom, rule: Rule, universe: Universe, total: u64, hit: Option<(usize, Witness)>) -> Self {
        match hit {
            Some((index, witness)) => AxiomVerdict {
                axiom,
                rule,
                universe,
                outcome: Outcome::ViolatedWithWitness,
                witness: Some(witness),
                checked: index as u64 + 1,
            },
            None => AxiomVerdict { axiom, rule, universe, outcome: Outcome::HoldsOnUniverse, witness: None, checked: total },
        }
    }
}

/// Parallel scan of `0..len` returning the result at the smallest index.
pub(crate) fn first_hit<T, F>(len: usize, probe: F) -> Result<Option<(usize, T)>, RuleError>
where
    T: Send,
    F: Fn(usize) -> Result<Option<T>, RuleError> + Sync,
{
    (0..len)
        .into_par_iter()
        .find_map_first(|i| match probe(i) {
            Ok(None) => None,
            Ok(Some(t)) => Some(Ok((i, t))),
            Err(e) => Some(Err(e)),
        })
        .transpose()
}
