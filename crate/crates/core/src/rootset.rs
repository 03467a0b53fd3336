//! Bitsets over root indices.

use alloc::vec::Vec;

/// A set of root indices, stored as a bitset over the full root list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootSet {
    len: usize,
    words: Vec<u64>,
}

impl RootSet {
    pub fn new(len: usize) -> Self {
        RootSet { len, words: alloc::vec![0; len.div_ceil(64)] }
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::new(len);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn from_predicate(len: usize, mut pred: impl FnMut(usize) -> bool) -> Self {
        Self::from_indices(len, (0..len).filter(|&i| pred(i)))
    }

    /// Size of the universe (the number of roots).
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "root index {i} out of range");
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }

    pub fn union(&self, other: &Self) -> Self {
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        RootSet { len: self.len, words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        RootSet { len: self.len, words }
    }

    pub fn difference(&self, other: &Self) -> Self {
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect();
        RootSet { len: self.len, words }
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Image of the set under a permutation of root indices.
    pub fn map(&self, perm: &[u32]) -> Self {
        Self::from_indices(self.len, self.iter().map(|i| perm[i] as usize))
    }
}
