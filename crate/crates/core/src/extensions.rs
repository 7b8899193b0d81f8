//! Extensions of a voter's ranking to comparisons between sets of alternatives.

use serde::{Deserialize, Serialize};

use crate::profile::Ballot;
use crate::set::ChoiceSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtensionKind {
    /// `X ≻^F Y` iff `X\Y ≻ Y` and `X ≻ Y\X`.
    Fishburn,
    /// The strict part of the weak `≿^{F+}` extension.
    FPlus,
}

impl ExtensionKind {
    pub fn name(self) -> &'static str {
        match self {
            ExtensionKind::Fishburn => "fishburn",
            ExtensionKind::FPlus => "fplus",
        }
    }
}

impl std::str::FromStr for ExtensionKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fishburn" | "F" => Ok(ExtensionKind::Fishburn),
            "fplus" | "F+" => Ok(ExtensionKind::FPlus),
            other => Err(format!("unknown extension `{other}` (expected fishburn or fplus)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetComparison {
    LeftPreferred,
    RightPreferred,
    Incomparable,
    Equal,
}

/// Fishburn's extension. Only defined for `x != y`.
pub fn fishburn_prefers(ballot: &Ballot, x: ChoiceSet, y: ChoiceSet) -> bool {
    assert!(x != y, "Fishburn's extension compares distinct sets only");
    ballot.set_beats(x.difference(y), y) && ballot.set_beats(x, y.difference(x))
}

/// `X ≿^∃ Y`: either side empty, or some `x ∈ X` ranked above some `y ∈ Y`.
pub fn exists_prefers(ballot: &Ballot, x: ChoiceSet, y: ChoiceSet) -> bool {
    if x.is_empty() || y.is_empty() {
        return true;
    }
    let best_x = x.iter().map(|a| ballot.rank_of(a)).min().unwrap();
    let worst_y = y.iter().map(|b| ballot.rank_of(b)).max().unwrap();
    best_x < worst_y
}

/// Weak `≿^{F+}` extension, reflexive on `x == y`.
pub fn fplus_weakly_prefers(ballot: &Ballot, x: ChoiceSet, y: ChoiceSet) -> bool {
    if x == y {
        return true;
    }
    let only_x = x.difference(y);
    let only_y = y.difference(x);
    let both = x.intersection(y);
    ballot.set_beats(only_x, only_y) && exists_prefers(ballot, only_x, both) && exists_prefers(ballot, both, only_y)
}

pub fn compare(kind: ExtensionKind, ballot: &Ballot, x: ChoiceSet, y: ChoiceSet) -> SetComparison {
    if x == y {
        return SetComparison::Equal;
    }
    let (left, right) = match kind {
        ExtensionKind::Fishburn => (fishburn_prefers(ballot, x, y), fishburn_prefers(ballot, y, x)),
        ExtensionKind::FPlus => (fplus_weakly_prefers(ballot, x, y), fplus_weakly_prefers(ballot, y, x)),
    };
    match (left, right) {
        (true, false) => SetComparison::LeftPreferred,
        (false, true) => SetComparison::RightPreferred,
        // ≿^{F+} can hold both ways when one set contains the other; that is
        // indifference and, like incomparability, never a strict preference.
        _ => SetComparison::Incomparable,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ballot(r: &[usize]) -> Ballot {
        Ballot::new(r.to_vec()).unwrap()
    }

    fn set(xs: &[usize]) -> ChoiceSet {
        xs.iter().copied().collect()
    }

    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;

    #[test]
    fn fishburn_examples() {
        // Voter 5 of the plurality manipulation: b > c > a.
        assert!(fishburn_prefers(&ballot(&[B, C, A]), set(&[C]), set(&[A, C])));
        let abc = ballot(&[A, B, C]);
        assert!(fishburn_prefers(&abc, set(&[A]), set(&[A, C])));
        assert!(!fishburn_prefers(&abc, set(&[A, C]), set(&[A])));
    }

    #[test]
    #[should_panic]
    fn fishburn_rejects_equal_sets() {
        fishburn_prefers(&ballot(&[A, B]), set(&[A]), set(&[A]));
    }

    #[test]
    fn exists_examples() {
        let abc = ballot(&[A, B, C]);
        assert!(exists_prefers(&abc, ChoiceSet::EMPTY, set(&[A])));
        assert!(exists_prefers(&abc, set(&[B]), ChoiceSet::EMPTY));
        assert!(!exists_prefers(&abc, set(&[C]), set(&[A, B])));
        assert!(exists_prefers(&abc, set(&[A, C]), set(&[B])));
    }

    #[test]
    fn fplus_examples() {
        let abc = ballot(&[A, B, C]);
        assert!(fplus_weakly_prefers(&abc, set(&[A, B]), set(&[B, C])));
        assert!(fplus_weakly_prefers(&abc, set(&[B]), set(&[B])));
        assert!(fplus_weakly_prefers(&abc, set(&[A]), set(&[B])));
        assert!(!fplus_weakly_prefers(&abc, set(&[B]), set(&[A])));
    }

    #[test]
    fn comparison_wrapper() {
        let abc = ballot(&[A, B, C]);
        assert_eq!(compare(ExtensionKind::Fishburn, &abc, set(&[A, C]), set(&[B])), SetComparison::Incomparable);
        assert_eq!(compare(ExtensionKind::Fishburn, &abc, set(&[B]), set(&[B])), SetComparison::Equal);
        assert_eq!(
            compare(ExtensionKind::Fishburn, &ballot(&[B, C, A]), set(&[C]), set(&[A, C])),
            SetComparison::LeftPreferred
        );
        assert_eq!(
            compare(ExtensionKind::Fishburn, &ballot(&[B, C, A]), set(&[A, C]), set(&[C])),
            SetComparison::RightPreferred
        );
    }

    #[test]
    fn exhaustive_small_properties() {
        for m in 1..=4 {
            let sets: Vec<ChoiceSet> = ChoiceSet::nonempty_subsets(m).collect();
            for b in Ballot::all(m) {
                for &x in &sets {
                    for &y in &sets {
                        if x != y {
                            let xy = fishburn_prefers(&b, x, y);
                            assert!(!(xy && fishburn_prefers(&b, y, x)), "asymmetry {b:?} {x:?} {y:?}");
                            assert!(!xy || fplus_weakly_prefers(&b, x, y), "containment {b:?} {x:?} {y:?}");
                            let c = compare(ExtensionKind::Fishburn, &b, x, y);
                            let c_rev = compare(ExtensionKind::Fishburn, &b, y, x);
                            assert_eq!(c == SetComparison::LeftPreferred, c_rev == SetComparison::RightPreferred);
                        }
                        if x.len() == 1 && y.len() == 1 && x != y {
                            let (p, q) = (x.first().unwrap(), y.first().unwrap());
                            assert_eq!(fishburn_prefers(&b, x, y), b.prefers(p, q));
                        }
                    }
                }
                // ∃ is monotone in its left argument, including the empty set.
                let all_sets: Vec<ChoiceSet> = (0..1u64 << m).map(ChoiceSet::from_bits).collect();
                for &x in &all_sets {
                    for &y in &all_sets {
                        if exists_prefers(&b, x, y) {
                            for z in 0..m {
                                assert!(x.is_empty() || exists_prefers(&b, x.with(z), y));
                            }
                        }
                    }
                }
            }
        }
    }
}
