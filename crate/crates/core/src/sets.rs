//! Membership sets over the indexed positive roots and over the simple roots.

use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

/// A subset of the indexed positive roots of one root system.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RootSet {
    bits: FixedBitSet,
}

impl RootSet {
    pub fn empty(universe: usize) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        Self { bits }
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::empty(universe);
        for i in indices {
            set.insert(i);
        }
        set
    }

    /// Size of the ambient index range, i.e. the number of positive roots.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits.contains(i)
    }

    pub fn insert(&mut self, i: usize) {
        self.bits.insert(i);
    }

    pub fn remove(&mut self, i: usize) {
        self.bits.set(i, false);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn complement(&self) -> RootSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        Self { bits }
    }

    pub fn union(&self, other: &RootSet) -> RootSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Self { bits }
    }

    pub fn intersection(&self, other: &RootSet) -> RootSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Self { bits }
    }
}

impl Ord for RootSet {
    /// Canonical order: by cardinality, then lexicographically on the sorted member indices.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for RootSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Which reading of a [`SimpleSubset`] the stored bits carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubsetRole {
    /// Simple roots of the standard Levi subalgebra, Π(𝔩).
    Levi,
    /// The complement Π ∖ Π(𝔩): excluded simples, equivalently the support of the ℤ-grading.
    Excluded,
}

/// A subset of the simple roots, stored as a bitmask over 0-based simple indices.
///
/// The two roles are complementary views of one standard parabolic, so equality
/// and hashing compare the Levi reading regardless of which role is stored.
#[derive(Clone, Copy)]
pub struct SimpleSubset {
    bits: u64,
    rank: usize,
    role: SubsetRole,
}

impl SimpleSubset {
    pub fn new(rank: usize, bits: u64, role: SubsetRole) -> Self {
        assert!(rank <= 64);
        Self {
            bits: bits & full_mask(rank),
            rank,
            role,
        }
    }

    pub fn levi(rank: usize, bits: u64) -> Self {
        Self::new(rank, bits, SubsetRole::Levi)
    }

    pub fn excluded(rank: usize, bits: u64) -> Self {
        Self::new(rank, bits, SubsetRole::Excluded)
    }

    pub fn from_indices(
        rank: usize,
        indices: impl IntoIterator<Item = usize>,
        role: SubsetRole,
    ) -> Self {
        let bits = indices.into_iter().fold(0u64, |acc, i| {
            assert!(i < rank, "simple index {i} out of range for rank {rank}");
            acc | (1 << i)
        });
        Self::new(rank, bits, role)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn role(&self) -> SubsetRole {
        self.role
    }

    /// The stored bits, read according to [`Self::role`].
    pub fn raw_bits(&self) -> u64 {
        self.bits
    }

    pub fn levi_bits(&self) -> u64 {
        match self.role {
            SubsetRole::Levi => self.bits,
            SubsetRole::Excluded => !self.bits & full_mask(self.rank),
        }
    }

    pub fn excluded_bits(&self) -> u64 {
        !self.levi_bits() & full_mask(self.rank)
    }

    /// Same parabolic, re-tagged as Levi simples.
    pub fn as_levi(&self) -> Self {
        Self::levi(self.rank, self.levi_bits())
    }

    /// Same parabolic, re-tagged as excluded simples.
    pub fn as_excluded(&self) -> Self {
        Self::excluded(self.rank, self.excluded_bits())
    }

    pub fn in_levi(&self, i: usize) -> bool {
        self.levi_bits() >> i & 1 == 1
    }

    pub fn is_excluded(&self, i: usize) -> bool {
        !self.in_levi(i)
    }

    pub fn levi_indices(&self) -> Vec<usize> {
        bit_indices(self.levi_bits())
    }

    pub fn excluded_indices(&self) -> Vec<usize> {
        bit_indices(self.excluded_bits())
    }
}

impl PartialEq for SimpleSubset {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.levi_bits() == other.levi_bits()
    }
}

impl Eq for SimpleSubset {}

impl std::hash::Hash for SimpleSubset {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rank.hash(state);
        self.levi_bits().hash(state);
    }
}

impl fmt::Debug for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based = |v: Vec<usize>| v.into_iter().map(|i| i + 1).collect::<Vec<_>>();
        write!(
            f,
            "SimpleSubset {{ levi: {:?}, excluded: {:?} }}",
            one_based(self.levi_indices()),
            one_based(self.excluded_indices())
        )
    }
}

pub(crate) fn full_mask(rank: usize) -> u64 {
    if rank >= 64 {
        u64::MAX
    } else {
        (1u64 << rank) - 1
    }
}

pub(crate) fn bit_indices(bits: u64) -> Vec<usize> {
    (0..64).filter(|i| bits >> i & 1 == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roles_are_complementary_and_involutive() {
        let s = SimpleSubset::excluded(4, 0b0101);
        assert_eq!(s.levi_bits(), 0b1010);
        assert_eq!(s.as_levi().as_excluded().raw_bits(), 0b0101);
        assert_eq!(s, s.as_levi());
        assert_eq!(s.excluded_indices(), vec![0, 2]);
    }

    #[test]
    fn root_set_order_is_by_size_then_members() {
        let a = RootSet::from_indices(5, [4]);
        let b = RootSet::from_indices(5, [0, 1]);
        let c = RootSet::from_indices(5, [0, 2]);
        assert!(a < b && b < c);
        assert_eq!(RootSet::full(5).complement(), RootSet::empty(5));
    }
}
