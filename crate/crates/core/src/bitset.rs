//! Growable bit sets used for vertex sets, extents and intents.
//!
//! Sets over universes of at most 64 elements live inline in a single word;
//! larger universes spill to the heap. The representation is canonical
//! (trailing zero words are trimmed), so derived equality and hashing agree
//! with set equality.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

const WORD: usize = 64;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: SmallVec<[u64; 1]>,
}

/// A set of 0-based vertex indices.
pub type VertexSet = BitSet;

impl BitSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The set `{0, 1, ..., n - 1}`.
    pub fn full(n: usize) -> Self {
        let mut words: SmallVec<[u64; 1]> = SmallVec::new();
        words.resize(n / WORD, u64::MAX);
        if !n.is_multiple_of(WORD) {
            words.push((1u64 << (n % WORD)) - 1);
        }
        Self { words }
    }

    pub fn singleton(i: usize) -> Self {
        let mut s = Self::new();
        s.insert(i);
        s
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, i: usize) {
        let w = i / WORD;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << (i % WORD);
    }

    pub fn remove(&mut self, i: usize) {
        let w = i / WORD;
        if w < self.words.len() {
            self.words[w] &= !(1 << (i % WORD));
            self.trim();
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words
            .get(i / WORD)
            .is_some_and(|w| w & (1 << (i % WORD)) != 0)
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Largest element plus one, or 0 for the empty set.
    pub fn bound(&self) -> usize {
        match self.words.last() {
            None => 0,
            Some(&w) => (self.words.len() - 1) * WORD + (WORD - w.leading_zeros() as usize),
        }
    }

    pub fn last(&self) -> Option<usize> {
        self.bound().checked_sub(1)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        if self.words.len() > other.words.len() {
            return false;
        }
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_superset(&self, other: &Self) -> bool {
        other.is_subset(self)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    pub fn union_with(&mut self, other: &Self) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.words.truncate(other.words.len());
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
        self.trim();
    }

    pub fn difference_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
        self.trim();
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    /// Elements below `i`.
    pub fn prefix(&self, i: usize) -> Self {
        self.intersection(&Self::full(i))
    }

    /// Drops element `i` and shifts every larger element down by one.
    pub fn remove_shift(&self, i: usize) -> Self {
        self.iter()
            .filter(|&x| x != i)
            .map(|x| if x > i { x - 1 } else { x })
            .collect()
    }

    /// Adds `offset` to every element.
    pub fn shifted(&self, offset: usize) -> Self {
        self.iter().map(|x| x + offset).collect()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Order by cardinality first, then lexicographically on sorted elements.
    pub fn cmp_graded(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.cmp(other))
    }
}

/// Lexicographic comparison of the ascending element sequences, so
/// `{0,1} < {0,1,2} < {0,2} < {1}`.
impl Ord for BitSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for BitSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for BitSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = Self::new();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl<'a> IntoIterator for &'a BitSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

/// Renders a set with 1-based members, e.g. `{1,3}`.
pub fn format_one_based(set: &BitSet) -> String {
    let parts: Vec<String> = set.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_bound() {
        assert_eq!(BitSet::full(0), BitSet::new());
        assert_eq!(BitSet::full(64).len(), 64);
        assert_eq!(BitSet::full(70).bound(), 70);
        assert_eq!(BitSet::singleton(130).last(), Some(130));
    }

    #[test]
    fn remove_trims_to_canonical_form() {
        let mut a = BitSet::singleton(3);
        a.insert(100);
        a.remove(100);
        assert_eq!(a, BitSet::singleton(3));
    }

    #[test]
    fn lex_order() {
        let s = |v: &[usize]| v.iter().copied().collect::<BitSet>();
        assert!(s(&[0, 1]) < s(&[0, 1, 2]));
        assert!(s(&[0, 1, 2]) < s(&[0, 2]));
        assert!(s(&[0, 2]) < s(&[1]));
        assert!(BitSet::new() < s(&[0]));
    }

    #[test]
    fn remove_shift_compacts() {
        let s: BitSet = [0, 2, 5].into_iter().collect();
        assert_eq!(s.remove_shift(2).to_vec(), vec![0, 4]);
        assert_eq!(s.remove_shift(1).to_vec(), vec![0, 1, 4]);
    }

    proptest! {
        #[test]
        fn set_algebra_matches_btreeset(
            a in proptest::collection::btree_set(0usize..150, 0..20),
            b in proptest::collection::btree_set(0usize..150, 0..20),
        ) {
            let x: BitSet = a.iter().copied().collect();
            let y: BitSet = b.iter().copied().collect();
            prop_assert_eq!(x.len(), a.len());
            prop_assert_eq!(x.union(&y).to_vec(), a.union(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(x.intersection(&y).to_vec(), a.intersection(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(x.difference(&y).to_vec(), a.difference(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(x.is_subset(&y), a.is_subset(&b));
            prop_assert_eq!(x.is_disjoint(&y), a.is_disjoint(&b));
            prop_assert_eq!(x.cmp(&y), a.iter().cmp(b.iter()));
        }
    }
}
