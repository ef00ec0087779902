use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use super::Elem;

/// A subset of the elements of a finite ring, stored as a bit set over
/// element indices.
///
/// Equality is set equality. The total order is the canonical one used for
/// deterministic output: by cardinality first, then lexicographically by the
/// ascending member list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    bits: FixedBitSet,
}

impl ElementSet {
    pub fn empty(order: usize) -> Self {
        ElementSet {
            bits: FixedBitSet::with_capacity(order),
        }
    }

    pub fn full(order: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(order);
        bits.insert_range(..);
        ElementSet { bits }
    }

    pub fn from_members<I: IntoIterator<Item = Elem>>(order: usize, members: I) -> Self {
        let mut set = Self::empty(order);
        for m in members {
            set.insert(m);
        }
        set
    }

    pub fn from_predicate(order: usize, mut pred: impl FnMut(Elem) -> bool) -> Self {
        let mut set = Self::empty(order);
        for a in 0..order {
            if pred(a) {
                set.bits.insert(a);
            }
        }
        set
    }

    /// Size of the ambient element range (the ring order).
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    #[inline]
    pub fn contains(&self, a: Elem) -> bool {
        self.bits.contains(a)
    }

    /// Inserts `a`; returns `true` if it was not already present.
    ///
    /// Panics if `a` is outside the universe.
    pub fn insert(&mut self, a: Elem) -> bool {
        !self.bits.put(a)
    }

    pub fn remove(&mut self, a: Elem) {
        self.bits.set(a, false);
    }

    /// Members in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        ElementSet { bits }
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        ElementSet { bits }
    }

    /// Least element in the symmetric difference, if any.
    pub fn first_difference(&self, other: &ElementSet) -> Option<Elem> {
        self.bits.symmetric_difference(&other.bits).min()
    }

    /// Least member, if any.
    pub fn first(&self) -> Option<Elem> {
        self.bits.minimum()
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
