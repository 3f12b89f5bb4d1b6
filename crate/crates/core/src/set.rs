//! Subsets of a finite universe and the universe itself.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest universe an [`ElementSet`] can address.
pub const MAX_UNIVERSE: usize = 64;

/// A subset of a universe of at most [`MAX_UNIVERSE`] elements, stored as a
/// bitmask over element indices.
///
/// The set does not remember its universe; operations that need the universe
/// size (complement, full set) take it explicitly.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(i: usize) -> Self {
        ElementSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(Self::EMPTY, |s, i| s.with(i))
    }

    pub const fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1u64 << i) != 0
    }

    #[must_use]
    pub const fn with(self, i: usize) -> Self {
        ElementSet(self.0 | (1u64 << i))
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    #[must_use]
    pub const fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    #[must_use]
    pub const fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    #[must_use]
    pub const fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    /// Complement relative to a universe of size `n`.
    #[must_use]
    pub const fn complement(self, n: usize) -> Self {
        ElementSet(!self.0 & Self::full(n).0)
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_proper_subset(self, other: Self) -> bool {
        self.is_subset(other) && self.0 != other.0
    }

    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// True when every set bit addresses an element of a universe of size `n`.
    pub const fn fits(self, n: usize) -> bool {
        self.is_subset(Self::full(n))
    }

    /// Element indices in increasing order.
    pub fn iter(self) -> Indices {
        Indices(self.0)
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Deterministic ordering key: cardinality first, then bit pattern.
    pub const fn sort_key(self) -> (u32, u64) {
        (self.0.count_ones(), self.0)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_indices(iter)
    }
}

pub struct Indices(u64);

impl Iterator for Indices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Indices {}

/// Every subset of `{0..n}` in increasing bit-pattern order.
pub fn all_subsets(n: usize) -> impl Iterator<Item = ElementSet> {
    assert!(n < 64, "cannot sweep subsets of a {n}-element universe");
    (0..1u64 << n).map(ElementSet::from_bits)
}

/// Ordered, labelled universe. Internal indices `0..n` follow label order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universe {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if labels.len() > MAX_UNIVERSE {
            return Err(Error::Capacity {
                stage: "universe",
                size: labels.len(),
                cap: MAX_UNIVERSE,
            });
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Universe { labels, index })
    }

    /// Universe labelled `1..=n`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn set_of<'a, I>(&self, labels: I) -> Result<ElementSet>
    where
        I: IntoIterator<Item = &'a str>,
    {
        labels
            .into_iter()
            .try_fold(ElementSet::EMPTY, |s, l| Ok(s.with(self.index_of(l)?)))
    }

    pub fn full(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn labels_of(&self, set: ElementSet) -> Vec<String> {
        set.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// `{a,b,c}` in label order.
    pub fn render(&self, set: ElementSet) -> String {
        format!("{{{}}}", self.labels_of(set).join(","))
    }
}
