//! Profiles realizing a prescribed weighted majority graph.
//!
//! Odd targets start from one voter with the lexicographic ballot. The
//! remaining even residual is built from voter pairs
//! `x, y, lex(rest)` / `lex(rest)⁻¹, x, y`, each adding exactly 2 to `g(x, y)`.

use crate::error::GraphError;
use crate::majority::{MajorityRelation, MarginMatrix, PairOutcome};
use crate::profile::{Ballot, Profile};

/// Target margins: antisymmetric, zero diagonal, uniform parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedMajorityGraph {
    target: MarginMatrix,
}

impl WeightedMajorityGraph {
    pub fn new(rows: &[Vec<i32>]) -> Result<Self, GraphError> {
        Ok(WeightedMajorityGraph { target: MarginMatrix::from_rows(rows)? })
    }

    pub fn from_margins(target: MarginMatrix) -> Self {
        WeightedMajorityGraph { target }
    }

    pub fn m(&self) -> usize {
        self.target.m()
    }

    pub fn target(&self) -> &MarginMatrix {
        &self.target
    }

    /// Voter count [`realize`] is guaranteed to stay within.
    pub fn voter_bound(&self) -> usize {
        let c = self.target.max_abs().max(1) as usize;
        c * self.m() * self.m() + 1
    }
}

/// The two-voter gadget adding 2 to `g(x, y)` and leaving every other margin alone.
pub fn pair_gadget(m: usize, x: usize, y: usize) -> [Ballot; 2] {
    let rest: Vec<usize> = (0..m).filter(|&z| z != x && z != y).collect();
    let mut first = vec![x, y];
    first.extend(&rest);
    let mut second: Vec<usize> = rest.iter().rev().copied().collect();
    second.extend([x, y]);
    [Ballot::new(first).unwrap(), Ballot::new(second).unwrap()]
}

pub fn realize(graph: &WeightedMajorityGraph) -> Profile {
    let m = graph.m();
    let target = graph.target();
    let mut ballots = Vec::new();
    let odd = target.parity() == Some(1);
    if odd {
        ballots.push(Ballot::lexicographic(m));
    }
    for x in 0..m {
        for y in x + 1..m {
            let seeded = if odd { 1 } else { 0 };
            let residual = target.get(x, y) - seeded;
            debug_assert_eq!(residual % 2, 0);
            let (winner, loser) = if residual >= 0 { (x, y) } else { (y, x) };
            for _ in 0..residual.abs() / 2 {
                ballots.extend(pair_gadget(m, winner, loser));
            }
        }
    }
    if ballots.is_empty() {
        // All-zero target (or m = 1): one ballot and its reverse.
        let lex = Ballot::lexicographic(m);
        let rev = lex.reversed();
        ballots.push(lex);
        if m > 1 {
            ballots.push(rev);
        }
    }
    Profile::new(ballots).expect("non-empty by construction")
}

/// A profile whose majority relation is `rel`, with every strict margin equal
/// to `weight` and every tie at zero.
pub fn realize_relation(rel: &MajorityRelation, weight: i32) -> Result<Profile, GraphError> {
    if weight < 1 {
        return Err(GraphError::NonPositiveWeight(weight));
    }
    if weight % 2 == 1 && rel.has_ties() {
        return Err(GraphError::OddWeightWithTies(weight));
    }
    let target = MarginMatrix::from_upper(rel.m(), |x, y| match rel.compare(x, y) {
        PairOutcome::StrictWin => weight,
        PairOutcome::Tie => 0,
        PairOutcome::StrictLoss => -weight,
    });
    Ok(realize(&WeightedMajorityGraph::from_margins(target)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_target_uses_a_ballot_and_its_reverse() {
        let g = WeightedMajorityGraph::new(&[vec![0; 3], vec![0; 3], vec![0; 3]]).unwrap();
        let p = realize(&g);
        assert_eq!(p.n(), 2);
        assert_eq!(MarginMatrix::of(&p), MarginMatrix::zero(3));
    }

    #[test]
    fn two_alternatives_margin_three() {
        let g = WeightedMajorityGraph::new(&[vec![0, 3], vec![-3, 0]]).unwrap();
        let p = realize(&g);
        assert_eq!(p.n(), 3);
        assert_eq!(&MarginMatrix::of(&p), g.target());
    }

    #[test]
    fn rejects_mixed_parity() {
        let rows = [vec![0, 1, 2], vec![-1, 0, 0], vec![-2, 0, 0]];
        assert_eq!(WeightedMajorityGraph::new(&rows), Err(GraphError::MixedParity));
        // margin 0 next to odd margins is the same failure
        let rows = [vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]];
        assert_eq!(WeightedMajorityGraph::new(&rows), Err(GraphError::MixedParity));
    }

    #[test]
    fn gadget_touches_one_pair() {
        for m in 2..=5 {
            for x in 0..m {
                for y in 0..m {
                    if x == y {
                        continue;
                    }
                    let p = Profile::new(pair_gadget(m, x, y).to_vec()).unwrap();
                    let g = MarginMatrix::of(&p);
                    for u in 0..m {
                        for v in 0..m {
                            let expected = match (u, v) {
                                _ if (u, v) == (x, y) => 2,
                                _ if (u, v) == (y, x) => -2,
                                _ => 0,
                            };
                            assert_eq!(g.get(u, v), expected, "m={m} gadget ({x},{y}) pair ({u},{v})");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn relation_realizations() {
        // a>b>c>a
        let cycle = MajorityRelation::from_pairs(3, |x, y| {
            if (x, y) == (0, 2) {
                PairOutcome::StrictLoss
            } else {
                PairOutcome::StrictWin
            }
        });
        let p = realize_relation(&cycle, 2).unwrap();
        let g = MarginMatrix::of(&p);
        assert_eq!(g.relation(), cycle);
        assert_eq!(g.max_abs(), 2);
        assert!(p.n() <= 8);

        let ties = MarginMatrix::zero(3).relation();
        assert_eq!(MarginMatrix::of(&realize_relation(&ties, 2).unwrap()), MarginMatrix::zero(3));
        assert_eq!(realize_relation(&ties, 1), Err(GraphError::OddWeightWithTies(1)));

        let linear = MajorityRelation::from_pairs(3, |_, _| PairOutcome::StrictWin);
        let p = realize_relation(&linear, 1).unwrap();
        assert_eq!(p.n(), 1);
        assert_eq!(p.ballot(0), &Ballot::lexicographic(3));
    }

    #[test]
    fn single_alternative() {
        let g = WeightedMajorityGraph::new(&[vec![0]]).unwrap();
        assert_eq!(realize(&g).n(), 1);
    }
}
