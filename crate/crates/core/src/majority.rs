//! Majority margins and the majority relation they induce.

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::profile::Profile;
use crate::set::{ChoiceSet, MAX_ALTERNATIVES};

/// Antisymmetric matrix of majority margins `g(x, y)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MarginMatrix {
    m: usize,
    g: Vec<i32>,
}

impl MarginMatrix {
    /// `g(x, y) = #{i : x ≻_i y} − #{i : y ≻_i x}`.
    pub fn of(profile: &Profile) -> Self {
        let m = profile.m();
        let mut g = vec![0i32; m * m];
        for ballot in profile.ballots() {
            let r = ballot.raw();
            for (i, &x) in r.iter().enumerate() {
                for &y in &r[i + 1..] {
                    g[x as usize * m + y as usize] += 1;
                    g[y as usize * m + x as usize] -= 1;
                }
            }
        }
        MarginMatrix { m, g }
    }

    pub fn zero(m: usize) -> Self {
        MarginMatrix { m, g: vec![0; m * m] }
    }

    /// Validates antisymmetry, zero diagonal and uniform parity.
    #[allow(clippy::needless_range_loop)] // symmetric index pairs
    pub fn from_rows(rows: &[Vec<i32>]) -> Result<Self, GraphError> {
        let m = rows.len();
        if m == 0 || m > MAX_ALTERNATIVES {
            return Err(GraphError::BadAlternativeCount(m));
        }
        if rows.iter().any(|r| r.len() != m) {
            return Err(GraphError::Shape { m });
        }
        let mut parity = None;
        for x in 0..m {
            if rows[x][x] != 0 {
                return Err(GraphError::Diagonal(x));
            }
            for y in x + 1..m {
                if rows[x][y] != -rows[y][x] {
                    return Err(GraphError::NotAntisymmetric { x, y });
                }
                let p = rows[x][y].rem_euclid(2);
                if *parity.get_or_insert(p) != p {
                    return Err(GraphError::MixedParity);
                }
            }
        }
        Ok(MarginMatrix { m, g: rows.iter().flatten().copied().collect() })
    }

    /// Builds a matrix from its upper triangle; the caller guarantees uniform parity.
    pub(crate) fn from_upper(m: usize, upper: impl Fn(usize, usize) -> i32) -> Self {
        let mut g = vec![0; m * m];
        for x in 0..m {
            for y in x + 1..m {
                let v = upper(x, y);
                g[x * m + y] = v;
                g[y * m + x] = -v;
            }
        }
        MarginMatrix { m, g }
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> i32 {
        self.g[x * self.m + y]
    }

    pub fn rows(&self) -> Vec<Vec<i32>> {
        self.g.chunks(self.m.max(1)).map(<[i32]>::to_vec).collect()
    }

    /// Largest absolute margin.
    pub fn max_abs(&self) -> i32 {
        self.g.iter().map(|v| v.abs()).max().unwrap_or(0)
    }

    /// Parity (0 or 1) shared by the off-diagonal entries; `None` for `m = 1`.
    pub fn parity(&self) -> Option<i32> {
        (self.m >= 2).then(|| self.get(0, 1).rem_euclid(2))
    }

    pub fn relation(&self) -> MajorityRelation {
        MajorityRelation::from_margins(self)
    }

    #[must_use]
    pub fn scaled(&self, k: i32) -> MarginMatrix {
        MarginMatrix { m: self.m, g: self.g.iter().map(|v| v * k).collect() }
    }

    pub(crate) fn flat(&self) -> &[i32] {
        &self.g
    }
}

impl std::fmt::Debug for MarginMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

/// Outcome of a pairwise majority comparison, from the first alternative's side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairOutcome {
    StrictWin,
    Tie,
    StrictLoss,
}

/// Complete binary relation `≿` over `m` alternatives.
///
/// Stored as two rows of bitsets: `weak[x]` holds every `y ≠ x` with `x ≿ y`,
/// `strict[x]` every `y` with `x ≻ y`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MajorityRelation {
    m: usize,
    weak: Vec<u64>,
    strict: Vec<u64>,
}

impl MajorityRelation {
    /// `x ≿ y` iff `g(x, y) ≥ 0`.
    pub fn from_margins(g: &MarginMatrix) -> Self {
        MajorityRelation::from_weak(g.m(), |x, y| g.get(x, y) >= 0)
    }

    /// Builds a relation from a weak-dominance predicate, which must be complete.
    #[allow(clippy::needless_range_loop)]
    pub fn from_weak(m: usize, weakly: impl Fn(usize, usize) -> bool) -> Self {
        let mut weak = vec![0u64; m];
        for x in 0..m {
            for y in 0..m {
                if x != y && weakly(x, y) {
                    weak[x] |= 1 << y;
                }
            }
        }
        for x in 0..m {
            for y in 0..m {
                assert!(
                    x == y || weak[x] >> y & 1 == 1 || weak[y] >> x & 1 == 1,
                    "relation is not complete on ({x},{y})"
                );
            }
        }
        MajorityRelation::from_weak_rows(m, weak)
    }

    fn from_weak_rows(m: usize, weak: Vec<u64>) -> Self {
        let strict = (0..m)
            .map(|x| (0..m).filter(|&y| weak[x] >> y & 1 == 1 && weak[y] >> x & 1 == 0).fold(0u64, |s, y| s | 1 << y))
            .collect();
        MajorityRelation { m, weak, strict }
    }

    /// Relation with the given outcome for each pair `x < y`.
    pub fn from_pairs(m: usize, outcome: impl Fn(usize, usize) -> PairOutcome) -> Self {
        let mut weak = vec![0u64; m];
        for x in 0..m {
            for y in x + 1..m {
                match outcome(x, y) {
                    PairOutcome::StrictWin => weak[x] |= 1 << y,
                    PairOutcome::StrictLoss => weak[y] |= 1 << x,
                    PairOutcome::Tie => {
                        weak[x] |= 1 << y;
                        weak[y] |= 1 << x;
                    }
                }
            }
        }
        MajorityRelation::from_weak_rows(m, weak)
    }

    /// Number of distinct complete relations on `m` alternatives: `3^(m choose 2)`.
    pub fn count(m: usize) -> u64 {
        3u64.pow((m * m.saturating_sub(1) / 2) as u32)
    }

    /// Decodes relation number `code` in `0..count(m)`. Pairs `x < y` are digits in
    /// base 3, first pair least significant: 0 = `x ≻ y`, 1 = tie, 2 = `y ≻ x`.
    pub fn from_code(m: usize, code: u64) -> Self {
        let mut c = code;
        let mut digits = vec![0u8; m * m];
        for x in 0..m {
            for y in x + 1..m {
                digits[x * m + y] = (c % 3) as u8;
                c /= 3;
            }
        }
        MajorityRelation::from_pairs(m, |x, y| match digits[x * m + y] {
            0 => PairOutcome::StrictWin,
            1 => PairOutcome::Tie,
            _ => PairOutcome::StrictLoss,
        })
    }

    /// Every complete relation on `m` alternatives, in code order.
    pub fn all(m: usize) -> impl Iterator<Item = MajorityRelation> {
        (0..MajorityRelation::count(m)).map(move |c| MajorityRelation::from_code(m, c))
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn alternatives(&self) -> ChoiceSet {
        ChoiceSet::full(self.m)
    }

    /// `x ≿ y` (always true for `x = y`).
    #[inline]
    pub fn weakly(&self, x: usize, y: usize) -> bool {
        x == y || self.weak[x] >> y & 1 == 1
    }

    /// `x ≻ y`.
    #[inline]
    pub fn strictly(&self, x: usize, y: usize) -> bool {
        self.strict[x] >> y & 1 == 1
    }

    #[inline]
    pub fn tied(&self, x: usize, y: usize) -> bool {
        x != y && self.weakly(x, y) && self.weakly(y, x)
    }

    pub fn compare(&self, x: usize, y: usize) -> PairOutcome {
        if self.strictly(x, y) {
            PairOutcome::StrictWin
        } else if self.strictly(y, x) {
            PairOutcome::StrictLoss
        } else {
            PairOutcome::Tie
        }
    }

    /// Alternatives `y ≠ x` with `x ≿ y`.
    #[inline]
    pub fn weak_successors(&self, x: usize) -> ChoiceSet {
        ChoiceSet::from_bits(self.weak[x])
    }

    /// Alternatives `y` with `x ≻ y` (the dominion of `x`).
    #[inline]
    pub fn dominion(&self, x: usize) -> ChoiceSet {
        ChoiceSet::from_bits(self.strict[x])
    }

    /// Alternatives `y` with `y ≻ x`.
    pub fn dominators(&self, x: usize) -> ChoiceSet {
        (0..self.m).filter(|&y| self.strictly(y, x)).collect()
    }

    /// `X ≻ Y`: every member of `xs` strictly beats every member of `ys`.
    pub fn set_beats(&self, xs: ChoiceSet, ys: ChoiceSet) -> bool {
        xs.iter().all(|x| ys.is_subset(self.dominion(x)))
    }

    pub fn has_ties(&self) -> bool {
        (0..self.m).any(|x| (x + 1..self.m).any(|y| self.tied(x, y)))
    }

    /// Unique `x` with `x ≻ y` for every `y ≠ x`.
    pub fn condorcet_winner(&self) -> Option<usize> {
        (0..self.m).find(|&x| self.dominion(x) == ChoiceSet::full(self.m).without(x))
    }

    /// Unique `x` with `y ≻ x` for every `y ≠ x`.
    pub fn condorcet_loser(&self) -> Option<usize> {
        (0..self.m).find(|&x| {
            let rest = ChoiceSet::full(self.m).without(x);
            rest.iter().all(|y| self.strictly(y, x))
        })
    }

    /// Encoding inverse to [`MajorityRelation::from_code`].
    pub fn code(&self) -> u64 {
        let mut code = 0u64;
        let mut place = 1u64;
        for x in 0..self.m {
            for y in x + 1..self.m {
                let digit = match self.compare(x, y) {
                    PairOutcome::StrictWin => 0,
                    PairOutcome::Tie => 1,
                    PairOutcome::StrictLoss => 2,
                };
                code += digit * place;
                place *= 3;
            }
        }
        code
    }
}

impl std::fmt::Debug for MajorityRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        for x in 0..self.m {
            for y in x + 1..self.m {
                let (a, b) = (
                    crate::set::Alternative::from(x).name(self.m),
                    crate::set::Alternative::from(y).name(self.m),
                );
                parts.push(match self.compare(x, y) {
                    PairOutcome::StrictWin => format!("{a}>{b}"),
                    PairOutcome::Tie => format!("{a}~{b}"),
                    PairOutcome::StrictLoss => format!("{b}>{a}"),
                });
            }
        }
        write!(f, "[{}]", parts.join(" "))
    }
}
