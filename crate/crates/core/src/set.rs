//! Alternatives and bitset-backed sets of alternatives.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest number of alternatives a [`ChoiceSet`] can address.
pub const MAX_ALTERNATIVES: usize = 64;

/// Dense index of an alternative in `0..m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Alternative(pub u8);

impl Alternative {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Presentation name: `a`..`z` while `m <= 26`, the decimal index otherwise.
    pub fn name(self, m: usize) -> String {
        if m <= 26 {
            ((b'a' + self.0) as char).to_string()
        } else {
            self.0.to_string()
        }
    }
}

impl From<usize> for Alternative {
    fn from(i: usize) -> Self {
        debug_assert!(i < MAX_ALTERNATIVES);
        Alternative(i as u8)
    }
}

/// A set of alternatives stored as a 64-bit mask.
///
/// Rule outputs are always non-empty; the empty set still shows up as an
/// intermediate value (set differences, connected sets).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ChoiceSet(u64);

impl ChoiceSet {
    pub const EMPTY: ChoiceSet = ChoiceSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        ChoiceSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., m-1}`.
    #[inline]
    pub fn full(m: usize) -> Self {
        debug_assert!(m <= MAX_ALTERNATIVES);
        if m == MAX_ALTERNATIVES {
            ChoiceSet(u64::MAX)
        } else {
            ChoiceSet((1u64 << m) - 1)
        }
    }

    #[inline]
    pub fn singleton(x: usize) -> Self {
        ChoiceSet(1u64 << x)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(items: I) -> Self {
        items.into_iter().fold(ChoiceSet::EMPTY, |s, x| s.with(x))
    }

    #[inline]
    pub fn contains(self, x: usize) -> bool {
        self.0 >> x & 1 == 1
    }

    #[inline]
    #[must_use]
    pub fn with(self, x: usize) -> Self {
        ChoiceSet(self.0 | 1u64 << x)
    }

    #[inline]
    #[must_use]
    pub fn without(self, x: usize) -> Self {
        ChoiceSet(self.0 & !(1u64 << x))
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        ChoiceSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        ChoiceSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        ChoiceSet(self.0 & !other.0)
    }

    /// Complement relative to `{0, .., m-1}`.
    #[inline]
    pub fn complement(self, m: usize) -> Self {
        ChoiceSet::full(m).difference(self)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// All non-empty subsets of `{0, .., m-1}` in increasing mask order.
    pub fn nonempty_subsets(m: usize) -> impl Iterator<Item = ChoiceSet> {
        (1..=ChoiceSet::full(m).0).map(ChoiceSet)
    }

    /// Renders the set as `{a,b,c}` using presentation names for `m` alternatives.
    pub fn display(self, m: usize) -> String {
        let names: Vec<String> = self.iter().map(|x| Alternative::from(x).name(m)).collect();
        format!("{{{}}}", names.join(","))
    }
}

impl fmt::Debug for ChoiceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Serialized as the ascending list of member indices.
impl Serialize for ChoiceSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ChoiceSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(d)?;
        if let Some(&x) = members.iter().find(|&&x| x >= MAX_ALTERNATIVES) {
            return Err(serde::de::Error::custom(format!("alternative {x} out of range")));
        }
        Ok(ChoiceSet::from_indices(members))
    }
}

impl FromIterator<usize> for ChoiceSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        ChoiceSet::from_indices(iter)
    }
}

/// Iterator over the members of a [`ChoiceSet`], ascending.
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a = ChoiceSet::from_indices([0, 2]);
        let b = ChoiceSet::from_indices([2, 3]);
        assert_eq!(a.union(b), ChoiceSet::from_indices([0, 2, 3]));
        assert_eq!(a.intersection(b), ChoiceSet::singleton(2));
        assert_eq!(a.difference(b), ChoiceSet::singleton(0));
        assert_eq!(a.complement(4), ChoiceSet::from_indices([1, 3]));
        assert!(ChoiceSet::singleton(2).is_subset(a));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(a.display(5), "{a,c}");
        assert_eq!(ChoiceSet::full(64).len(), 64);
    }

    #[test]
    fn subsets_enumeration() {
        assert_eq!(ChoiceSet::nonempty_subsets(3).count(), 7);
        assert_eq!(ChoiceSet::nonempty_subsets(1).collect::<Vec<_>>(), vec![ChoiceSet::singleton(0)]);
    }
}
