//! Budgeted randomized-then-local manipulation search for instances too
//! large to enumerate.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::VerifyError;
use crate::extensions::ExtensionKind;
use crate::profile::{Ballot, Profile};
use crate::rules::Rule;

use super::manipulation::find_manipulation_with;
use super::witness::Manipulation;
use super::first_hit;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchParams {
    pub m: usize,
    pub n: usize,
    pub extension: ExtensionKind,
    /// Upper bound on rule evaluations across all workers.
    pub budget: u64,
    pub seed: u64,
    /// Local moves (adjacent swaps in one ballot) after each random restart.
    pub local_steps: usize,
}

impl SearchParams {
    pub fn new(m: usize, n: usize, budget: u64, seed: u64) -> Self {
        SearchParams { m, n, extension: ExtensionKind::Fishburn, budget, seed, local_steps: 32 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub manipulation: Option<Manipulation>,
    /// Rule evaluations charged against the budget (every profile up to the hit).
    pub evaluations: u64,
    pub profiles_tried: u64,
}

/// Profiles scanned per chunk; each chunk has its own seeded generator so the
/// result is independent of scheduling.
const CHUNK_PROFILES: u64 = 256;

/// Random restarts followed by random-walk neighbourhoods, each profile
/// scanned exhaustively for single-voter manipulations.
pub fn search_manipulation(rule: Rule, params: &SearchParams) -> Result<SearchOutcome, VerifyError> {
    if params.m == 0 || params.m > super::MAX_UNIVERSE_ALTERNATIVES || params.n == 0 {
        return Err(VerifyError::BadUniverse(format!("cannot search m = {}, n = {}", params.m, params.n)));
    }
    let ballots = Ballot::all(params.m);
    let per_profile = 1 + params.n as u64 * (ballots.len() as u64 - 1);
    let total = params.budget / per_profile;
    let chunks = total.div_ceil(CHUNK_PROFILES) as usize;
    let hit = first_hit(chunks, |chunk| {
        let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
        rng.set_stream(chunk as u64);
        let quota = CHUNK_PROFILES.min(total - chunk as u64 * CHUNK_PROFILES);
        let mut tried = 0u64;
        while tried < quota {
            let mut profile = random_profile(&mut rng, &ballots, params.n);
            for step in 0..=params.local_steps {
                if tried == quota {
                    break;
                }
                if step > 0 {
                    profile = neighbour(&mut rng, &profile);
                }
                tried += 1;
                if let Some(m) = find_manipulation_with(rule, &profile, params.extension, &ballots)? {
                    return Ok(Some((m, tried)));
                }
            }
        }
        Ok(None)
    })?;
    Ok(match hit {
        Some((chunk, (m, tried))) => SearchOutcome {
            manipulation: Some(m),
            evaluations: (chunk as u64 * CHUNK_PROFILES + tried) * per_profile,
            profiles_tried: chunk as u64 * CHUNK_PROFILES + tried,
        },
        None => SearchOutcome { manipulation: None, evaluations: total * per_profile, profiles_tried: total },
    })
}

fn random_profile(rng: &mut ChaCha8Rng, ballots: &[Ballot], n: usize) -> Profile {
    Profile::new((0..n).map(|_| ballots[rng.gen_range(0..ballots.len())].clone()).collect()).expect("n >= 1")
}

fn neighbour(rng: &mut ChaCha8Rng, profile: &Profile) -> Profile {
    if profile.m() < 2 {
        return profile.clone();
    }
    let voter = rng.gen_range(0..profile.n());
    let rank = rng.gen_range(0..profile.m() - 1);
    profile.with_ballot(voter, profile.ballot(voter).swap_adjacent(rank))
}
