//! Word-sized vertex sets.
//!
//! Every set in the crate is a bit vector over dense vertex ids `0..n`.
//! Graphs are capped at [`MAX_VERTICES`] vertices so a set is a single `u64`
//! and union/intersection/difference are one machine instruction each.

use std::fmt;

use serde::{Serialize, Serializer};

/// Largest supported vertex count (one adjacency word per row).
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of `{0, .., universe - 1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: u64,
    universe: usize,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        assert!(universe <= MAX_VERTICES, "universe {universe} exceeds {MAX_VERTICES}");
        VertexSet { bits: 0, universe }
    }

    pub fn full(universe: usize) -> Self {
        assert!(universe <= MAX_VERTICES, "universe {universe} exceeds {MAX_VERTICES}");
        VertexSet { bits: low_mask(universe), universe }
    }

    /// Builds a set from raw bits; bits at or above `universe` are dropped.
    pub fn from_bits(bits: u64, universe: usize) -> Self {
        assert!(universe <= MAX_VERTICES, "universe {universe} exceeds {MAX_VERTICES}");
        VertexSet { bits: bits & low_mask(universe), universe }
    }

    /// Panics if any id is out of range.
    pub fn from_ids<I: IntoIterator<Item = usize>>(universe: usize, ids: I) -> Self {
        let mut s = VertexSet::empty(universe);
        for v in ids {
            s.insert(v);
        }
        s
    }

    /// The half-open id range `start..end` as a set.
    pub fn range(universe: usize, start: usize, end: usize) -> Self {
        assert!(start <= end && end <= universe);
        VertexSet::from_bits(low_mask(end) & !low_mask(start), universe)
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && (self.bits >> v) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.bits |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            self.bits &= !(1u64 << v);
        }
    }

    #[inline]
    pub fn union(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.universe, other.universe);
        VertexSet { bits: self.bits | other.bits, universe: self.universe }
    }

    #[inline]
    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.universe, other.universe);
        VertexSet { bits: self.bits & other.bits, universe: self.universe }
    }

    #[inline]
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.universe, other.universe);
        VertexSet { bits: self.bits & !other.bits, universe: self.universe }
    }

    #[inline]
    pub fn complement(&self) -> VertexSet {
        VertexSet { bits: !self.bits & low_mask(self.universe), universe: self.universe }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits & other.bits == 0
    }

    /// Smallest element, if any.
    pub fn first(&self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }

    /// Ascending iterator over members.
    pub fn iter(&self) -> Iter {
        Iter { bits: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter {
    bits: u64,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let v = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.bits.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Iter {}
