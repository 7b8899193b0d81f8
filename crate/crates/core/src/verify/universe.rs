use serde::{Deserialize, Serialize};

use crate::error::VerifyError;
use crate::majority::MarginMatrix;
use crate::profile::{Ballot, Profile};

/// Largest `m` whose ballots are enumerated.
pub const MAX_UNIVERSE_ALTERNATIVES: usize = 8;

/// Bounded stand-in for the domain of all profiles: every profile over `m`
/// alternatives with `1 <= n <= n_max` voters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Universe {
    pub m: usize,
    pub n_max: usize,
    /// Largest replication factor checked by homogeneity.
    pub k_hom: usize,
    /// Skip profiles with a margin above this bound.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub margin_cap: Option<u32>,
    /// Only odd electorates (tie-free majority relations).
    #[serde(default)]
    pub odd_only: bool,
    /// Enumerate one profile per multiset of ballots instead of every voter order.
    #[serde(default)]
    pub canonical: bool,
}

impl Universe {
    pub fn new(m: usize, n_max: usize) -> Self {
        Universe { m, n_max, k_hom: 2, margin_cap: None, odd_only: false, canonical: false }
    }

    pub fn with_k_hom(mut self, k: usize) -> Self {
        self.k_hom = k;
        self
    }

    pub fn with_margin_cap(mut self, cap: u32) -> Self {
        self.margin_cap = Some(cap);
        self
    }

    pub fn odd_only(mut self) -> Self {
        self.odd_only = true;
        self
    }

    pub fn canonical(mut self) -> Self {
        self.canonical = true;
        self
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.m == 0 || self.m > MAX_UNIVERSE_ALTERNATIVES {
            return Err(VerifyError::BadUniverse(format!(
                "m must be in 1..={MAX_UNIVERSE_ALTERNATIVES}, got {}",
                self.m
            )));
        }
        if self.n_max == 0 {
            return Err(VerifyError::BadUniverse("n_max must be at least 1".into()));
        }
        if self.k_hom < 2 {
            return Err(VerifyError::BadUniverse("k_hom must be at least 2".into()));
        }
        Ok(())
    }

    /// Electorate sizes in scan order.
    pub fn electorates(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n_max).filter(move |n| !self.odd_only || n % 2 == 1)
    }

    fn factorial(m: usize) -> u128 {
        (1..=m as u128).product()
    }

    fn binomial(n: u128, k: u128) -> u128 {
        (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
    }

    /// Number of profiles with exactly `n` voters before the margin cap.
    pub fn count_with(&self, n: usize) -> u128 {
        let b = Universe::factorial(self.m);
        if self.canonical {
            Universe::binomial(b + n as u128 - 1, n as u128)
        } else {
            b.saturating_pow(n as u32)
        }
    }

    /// Total number of profiles before the margin cap.
    pub fn size(&self) -> u128 {
        self.electorates().map(|n| self.count_with(n)).sum()
    }

    /// Rough voter-weighted size: Σ count(n)·n.
    pub fn voter_weighted_size(&self) -> u128 {
        self.electorates().map(|n| self.count_with(n) * n as u128).sum()
    }

    pub fn admits(&self, profile: &Profile) -> bool {
        match self.margin_cap {
            Some(cap) => MarginMatrix::of(profile).max_abs() <= cap as i32,
            None => true,
        }
    }

    /// Materializes the universe in scan order (ascending `n`, then
    /// lexicographic ballot indices).
    pub fn profiles(&self) -> Result<Vec<Profile>, VerifyError> {
        self.validate()?;
        let space = ProfileSpace::new(self);
        Ok((0..space.len()).filter_map(|i| space.get(i)).collect())
    }
}

/// Index-addressable enumeration of a universe.
pub struct ProfileSpace {
    ballots: Vec<Ballot>,
    blocks: Vec<Block>,
    universe: Universe,
}

struct Block {
    n: usize,
    start: u64,
    // canonical universes store their non-decreasing ballot index tuples
    tuples: Option<Vec<u16>>,
}

impl ProfileSpace {
    pub fn new(universe: &Universe) -> Self {
        let ballots = Ballot::all(universe.m);
        let mut blocks = Vec::new();
        let mut start = 0u64;
        for n in universe.electorates() {
            let tuples = universe.canonical.then(|| multisets(ballots.len(), n));
            blocks.push(Block { n, start, tuples });
            start += universe.count_with(n) as u64;
        }
        ProfileSpace { ballots, blocks, universe: *universe }
    }

    pub fn len(&self) -> u64 {
        self.universe.size() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn ballots(&self) -> &[Ballot] {
        &self.ballots
    }

    /// Profile at scan position `index`, or `None` if the margin cap excludes it.
    pub fn get(&self, index: u64) -> Option<Profile> {
        let block = self.blocks.iter().rev().find(|b| b.start <= index).expect("index in range");
        let local = index - block.start;
        let ballots: Vec<Ballot> = match &block.tuples {
            Some(t) => {
                let at = local as usize * block.n;
                t[at..at + block.n].iter().map(|&i| self.ballots[i as usize].clone()).collect()
            }
            None => {
                let base = self.ballots.len() as u64;
                let mut digits = vec![0usize; block.n];
                let mut rest = local;
                for d in digits.iter_mut().rev() {
                    *d = (rest % base) as usize;
                    rest /= base;
                }
                digits.into_iter().map(|i| self.ballots[i].clone()).collect()
            }
        };
        let profile = Profile::new(ballots).expect("n >= 1");
        self.universe.admits(&profile).then_some(profile)
    }
}

/// All non-decreasing `n`-tuples over `0..k`, flattened, in lexicographic order.
fn multisets(k: usize, n: usize) -> Vec<u16> {
    let mut out = Vec::new();
    let mut cur = vec![0u16; n];
    loop {
        out.extend_from_slice(&cur);
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if (cur[i] as usize) + 1 < k {
                let v = cur[i] + 1;
                for c in &mut cur[i..] {
                    *c = v;
                }
                break;
            }
        }
    }
}
