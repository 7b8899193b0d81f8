//! Ballots (strict rankings) and preference profiles.

use crate::error::ProfileError;
use crate::set::{ChoiceSet, MAX_ALTERNATIVES};

/// A strict total order over `m` alternatives, best first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ballot {
    ranking: Vec<u8>,
    // position[x] = rank of alternative x (0 = top)
    position: Vec<u8>,
}

impl Ballot {
    pub fn new(ranking: Vec<usize>) -> Result<Self, ProfileError> {
        let m = ranking.len();
        if m == 0 || m > MAX_ALTERNATIVES {
            return Err(ProfileError::BadAlternativeCount { m, max: MAX_ALTERNATIVES });
        }
        let mut position = vec![u8::MAX; m];
        for (rank, &x) in ranking.iter().enumerate() {
            if x >= m {
                return Err(ProfileError::OutOfRange { index: x, m });
            }
            if position[x] != u8::MAX {
                return Err(ProfileError::DuplicateAlternative(x));
            }
            position[x] = rank as u8;
        }
        Ok(Ballot { ranking: ranking.into_iter().map(|x| x as u8).collect(), position })
    }

    /// `0 ≻ 1 ≻ … ≻ m-1`.
    pub fn lexicographic(m: usize) -> Self {
        Ballot::new((0..m).collect()).expect("identity is a permutation")
    }

    /// Builds a ballot from an order given as raw bytes; panics on invalid input.
    pub(crate) fn from_ranking_unchecked(ranking: Vec<u8>) -> Self {
        let mut position = vec![0u8; ranking.len()];
        for (rank, &x) in ranking.iter().enumerate() {
            position[x as usize] = rank as u8;
        }
        Ballot { ranking, position }
    }

    /// Every ballot over `m` alternatives, in lexicographic order of rankings.
    pub fn all(m: usize) -> Vec<Ballot> {
        let mut out = Vec::new();
        let mut perm: Vec<u8> = (0..m as u8).collect();
        loop {
            out.push(Ballot::from_ranking_unchecked(perm.clone()));
            if !next_permutation(&mut perm) {
                break;
            }
        }
        out
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.ranking.len()
    }

    pub fn ranking(&self) -> impl Iterator<Item = usize> + '_ {
        self.ranking.iter().map(|&x| x as usize)
    }

    #[inline]
    pub fn at(&self, rank: usize) -> usize {
        self.ranking[rank] as usize
    }

    #[inline]
    pub fn rank_of(&self, x: usize) -> usize {
        self.position[x] as usize
    }

    #[inline]
    pub fn top(&self) -> usize {
        self.ranking[0] as usize
    }

    #[inline]
    pub fn bottom(&self) -> usize {
        *self.ranking.last().expect("ballots are non-empty") as usize
    }

    /// `x ≻ y` in this ballot.
    #[inline]
    pub fn prefers(&self, x: usize, y: usize) -> bool {
        self.position[x] < self.position[y]
    }

    /// Every member of `xs` is ranked above every member of `ys`
    /// (vacuously true when either side is empty).
    pub fn set_beats(&self, xs: ChoiceSet, ys: ChoiceSet) -> bool {
        if xs.is_empty() || ys.is_empty() {
            return true;
        }
        let worst_x = xs.iter().map(|x| self.position[x]).max().unwrap();
        let best_y = ys.iter().map(|y| self.position[y]).min().unwrap();
        worst_x < best_y
    }

    /// Number of pairs the two ballots order differently (Kendall tau distance).
    pub fn swap_distance(&self, other: &Ballot) -> usize {
        let m = self.m();
        (0..m).map(|x| (x + 1..m).filter(|&y| self.prefers(x, y) != other.prefers(x, y)).count()).sum()
    }

    /// The ranking read backwards.
    #[must_use]
    pub fn reversed(&self) -> Ballot {
        let mut r = self.ranking.clone();
        r.reverse();
        Ballot::from_ranking_unchecked(r)
    }

    /// Swaps the alternatives at ranks `rank` and `rank + 1`.
    #[must_use]
    pub fn swap_adjacent(&self, rank: usize) -> Ballot {
        let mut r = self.ranking.clone();
        r.swap(rank, rank + 1);
        Ballot::from_ranking_unchecked(r)
    }

    /// Moves the top-ranked alternative to the bottom.
    #[must_use]
    pub fn push_top_to_bottom(&self) -> Ballot {
        let mut r = self.ranking.clone();
        r.rotate_left(1);
        Ballot::from_ranking_unchecked(r)
    }

    /// Relabels alternatives: `x` becomes `perm[x]`.
    #[must_use]
    pub fn relabel(&self, perm: &[usize]) -> Ballot {
        Ballot::from_ranking_unchecked(self.ranking.iter().map(|&x| perm[x as usize] as u8).collect())
    }

    /// Rank slots occupied by the members of `block`, ascending.
    pub fn slots_of(&self, block: ChoiceSet) -> Vec<usize> {
        let mut slots: Vec<usize> = block.iter().map(|x| self.rank_of(x)).collect();
        slots.sort_unstable();
        slots
    }

    /// Places the alternatives `order` into `slots` (in order), keeping every
    /// other rank fixed.
    #[must_use]
    pub fn fill_slots(&self, slots: &[usize], order: &[u8]) -> Ballot {
        let mut r = self.ranking.clone();
        for (&slot, &x) in slots.iter().zip(order) {
            r[slot] = x;
        }
        Ballot::from_ranking_unchecked(r)
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.ranking
    }
}

impl std::fmt::Debug for Ballot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let m = self.m();
        let names: Vec<String> =
            self.ranking().map(|x| crate::set::Alternative::from(x).name(m)).collect();
        write!(f, "{}", names.join(">"))
    }
}

/// In-place lexicographic successor; returns `false` at the last permutation.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// A non-empty list of ballots over a common set of `m` alternatives.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Profile {
    m: usize,
    ballots: Vec<Ballot>,
}

impl Profile {
    pub fn new(ballots: Vec<Ballot>) -> Result<Self, ProfileError> {
        let m = ballots.first().ok_or(ProfileError::Empty)?.m();
        if let Some(b) = ballots.iter().find(|b| b.m() != m) {
            return Err(ProfileError::MixedAlternativeCounts { expected: m, got: b.m() });
        }
        Ok(Profile { m, ballots })
    }

    /// Convenience constructor from index rankings.
    pub fn from_rankings<R: AsRef<[usize]>>(rankings: &[R]) -> Result<Self, ProfileError> {
        let ballots = rankings
            .iter()
            .map(|r| Ballot::new(r.as_ref().to_vec()))
            .collect::<Result<Vec<_>, _>>()?;
        Profile::new(ballots)
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of voters.
    #[inline]
    pub fn n(&self) -> usize {
        self.ballots.len()
    }

    #[inline]
    pub fn ballots(&self) -> &[Ballot] {
        &self.ballots
    }

    #[inline]
    pub fn ballot(&self, voter: usize) -> &Ballot {
        &self.ballots[voter]
    }

    pub fn alternatives(&self) -> ChoiceSet {
        ChoiceSet::full(self.m)
    }

    /// Same profile with voter `voter` reporting `ballot` instead.
    #[must_use]
    pub fn with_ballot(&self, voter: usize, ballot: Ballot) -> Profile {
        debug_assert_eq!(ballot.m(), self.m);
        let mut ballots = self.ballots.clone();
        ballots[voter] = ballot;
        Profile { m: self.m, ballots }
    }

    /// `k` consecutive copies of the whole electorate.
    #[must_use]
    pub fn repeated(&self, k: usize) -> Profile {
        assert!(k >= 1);
        let mut ballots = Vec::with_capacity(self.n() * k);
        for _ in 0..k {
            ballots.extend(self.ballots.iter().cloned());
        }
        Profile { m: self.m, ballots }
    }

    /// The profile followed by the reverse of each of its ballots.
    #[must_use]
    pub fn with_reverses(&self) -> Profile {
        let mut ballots = self.ballots.clone();
        ballots.extend(self.ballots.iter().map(Ballot::reversed));
        Profile { m: self.m, ballots }
    }

    #[must_use]
    pub fn relabel(&self, perm: &[usize]) -> Profile {
        Profile { m: self.m, ballots: self.ballots.iter().map(|b| b.relabel(perm)).collect() }
    }

    /// Voters sorted by ballot; the canonical representative under voter permutation.
    #[must_use]
    pub fn sorted(&self) -> Profile {
        let mut ballots = self.ballots.clone();
        ballots.sort();
        Profile { m: self.m, ballots }
    }

    #[must_use]
    pub fn concat(&self, other: &Profile) -> Profile {
        assert_eq!(self.m, other.m);
        let mut ballots = self.ballots.clone();
        ballots.extend(other.ballots.iter().cloned());
        Profile { m: self.m, ballots }
    }

    /// Alternatives ranked first by at least one voter.
    pub fn top_ranked(&self) -> ChoiceSet {
        self.ballots.iter().map(Ballot::top).collect()
    }

    /// Alternatives not Pareto-dominated (no `y` that every voter ranks above them).
    pub fn pareto_optimal(&self) -> ChoiceSet {
        (0..self.m)
            .filter(|&x| !(0..self.m).any(|y| y != x && self.ballots.iter().all(|b| b.prefers(y, x))))
            .collect()
    }
}

impl std::fmt::Debug for Profile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.ballots).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ballot_rejects_bad_rankings() {
        assert_eq!(Ballot::new(vec![0, 1, 1]), Err(ProfileError::DuplicateAlternative(1)));
        assert_eq!(Ballot::new(vec![0, 3, 1]), Err(ProfileError::OutOfRange { index: 3, m: 3 }));
        assert!(matches!(Ballot::new(vec![]), Err(ProfileError::BadAlternativeCount { .. })));
    }

    #[test]
    fn profile_rejects_mixed_lengths_and_empty() {
        let a = Ballot::new(vec![0, 1]).unwrap();
        let b = Ballot::new(vec![0, 1, 2]).unwrap();
        assert!(matches!(Profile::new(vec![a, b]), Err(ProfileError::MixedAlternativeCounts { .. })));
        assert_eq!(Profile::new(vec![]), Err(ProfileError::Empty));
    }

    #[test]
    fn all_ballots_are_lexicographic_permutations() {
        let all = Ballot::all(3);
        let rankings: Vec<Vec<usize>> = all.iter().map(|b| b.ranking().collect()).collect();
        assert_eq!(
            rankings,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0]
            ]
        );
        assert_eq!(Ballot::all(4).len(), 24);
        assert_eq!(Ballot::all(1).len(), 1);
    }

    #[test]
    fn ballot_edits() {
        let b = Ballot::new(vec![1, 0, 2]).unwrap();
        assert!(b.prefers(1, 0));
        assert_eq!(b.swap_adjacent(1).ranking().collect::<Vec<_>>(), vec![1, 2, 0]);
        assert_eq!(b.push_top_to_bottom().ranking().collect::<Vec<_>>(), vec![0, 2, 1]);
        assert_eq!(b.reversed().ranking().collect::<Vec<_>>(), vec![2, 0, 1]);
        assert!(b.set_beats(ChoiceSet::from_indices([1, 0]), ChoiceSet::singleton(2)));
        assert!(!b.set_beats(ChoiceSet::from_indices([1, 2]), ChoiceSet::singleton(0)));
        assert!(b.set_beats(ChoiceSet::EMPTY, ChoiceSet::singleton(0)));
    }

    #[test]
    fn pareto_and_tops() {
        let p = Profile::from_rankings(&[[0, 1, 2], [1, 0, 2]]).unwrap();
        assert_eq!(p.top_ranked(), ChoiceSet::from_indices([0, 1]));
        assert_eq!(p.pareto_optimal(), ChoiceSet::from_indices([0, 1]));
    }
}
