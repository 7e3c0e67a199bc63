//! Object and attribute identifiers and the set types built on them.

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Result, RoughError};

/// Zero-based row ordinal within a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjectId(pub usize);

impl ObjectId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Zero-based column ordinal within a table. Names live on the table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AttributeId(pub usize);

impl AttributeId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A subset of the universe of one table, stored as a bit set sized to
/// that universe.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ObjectSet {
    bits: FixedBitSet,
}

impl ObjectSet {
    pub fn empty(universe: usize) -> Self {
        ObjectSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        ObjectSet { bits }
    }

    /// Builds a set from zero-based indices, rejecting any outside the universe.
    pub fn from_indices<I>(universe: usize, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = ObjectSet::empty(universe);
        for i in indices {
            if i >= universe {
                return Err(RoughError::UnknownObject(i));
            }
            set.bits.insert(i);
        }
        Ok(set)
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
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

    pub fn contains(&self, x: ObjectId) -> bool {
        self.bits.contains(x.0)
    }

    /// Panics if `x` is outside the universe.
    pub fn insert(&mut self, x: ObjectId) {
        self.bits.insert(x.0);
    }

    pub fn iter(&self) -> impl Iterator<Item = ObjectId> + '_ {
        self.bits.ones().map(ObjectId)
    }

    pub fn indices(&self) -> Vec<usize> {
        self.bits.ones().collect()
    }

    pub fn first(&self) -> Option<ObjectId> {
        self.bits.minimum().map(ObjectId)
    }

    pub fn is_subset(&self, other: &ObjectSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &ObjectSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn intersects(&self, other: &ObjectSet) -> bool {
        !self.is_disjoint(other)
    }

    pub fn intersection(&self, other: &ObjectSet) -> ObjectSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        ObjectSet { bits }
    }

    pub fn union(&self, other: &ObjectSet) -> ObjectSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        ObjectSet { bits }
    }

    pub fn difference(&self, other: &ObjectSet) -> ObjectSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        ObjectSet { bits }
    }

    pub fn complement(&self) -> ObjectSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        ObjectSet { bits }
    }

    pub fn union_with(&mut self, other: &ObjectSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &ObjectSet) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &ObjectSet) {
        self.bits.difference_with(&other.bits);
    }
}

/// Renders one-based members, matching how rows are usually numbered.
impl fmt::Display for ObjectSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x.0 + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ObjectSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ObjectSet{}", self)
    }
}

/// An ordered set of attribute ids; the `B` of an indiscernibility relation.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AttributeSet(BTreeSet<AttributeId>);

impl AttributeSet {
    pub fn new() -> Self {
        AttributeSet(BTreeSet::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, a: AttributeId) -> bool {
        self.0.contains(&a)
    }

    pub fn insert(&mut self, a: AttributeId) -> bool {
        self.0.insert(a)
    }

    pub fn remove(&mut self, a: AttributeId) -> bool {
        self.0.remove(&a)
    }

    pub fn without(&self, a: AttributeId) -> AttributeSet {
        let mut s = self.clone();
        s.remove(a);
        s
    }

    pub fn iter(&self) -> impl Iterator<Item = AttributeId> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &AttributeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn intersection(&self, other: &AttributeSet) -> AttributeSet {
        AttributeSet(self.0.intersection(&other.0).copied().collect())
    }
}

impl FromIterator<AttributeId> for AttributeSet {
    fn from_iter<T: IntoIterator<Item = AttributeId>>(iter: T) -> Self {
        AttributeSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[usize; N]> for AttributeSet {
    fn from(ids: [usize; N]) -> Self {
        ids.into_iter().map(AttributeId).collect()
    }
}
