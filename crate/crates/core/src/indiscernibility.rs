//! Attribute-value blocks, elementary sets and indiscernibility partitions.

use std::collections::HashMap;

use crate::error::Result;
use crate::set::{AttributeId, AttributeSet, ObjectId, ObjectSet};
use crate::table::{AttributeValuePair, InformationTable};

/// A family of disjoint nonempty object sets covering the universe.
///
/// Blocks are ordered by their smallest member, so two partitions are equal
/// as set families exactly when they are equal as values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<ObjectSet>,
}

impl Partition {
    /// Builds a partition from canonical block labels (see [`signature`]).
    fn from_labels(universe: usize, labels: &[u32]) -> Self {
        let n_blocks = labels.iter().max().map_or(0, |&m| m as usize + 1);
        let mut blocks = vec![ObjectSet::empty(universe); n_blocks];
        for (x, &l) in labels.iter().enumerate() {
            blocks[l as usize].insert(ObjectId(x));
        }
        Partition { blocks }
    }

    pub fn blocks(&self) -> &[ObjectSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, x: ObjectId) -> Option<&ObjectSet> {
        self.blocks.iter().find(|b| b.contains(x))
    }

    /// True if every block of `self` lies inside some block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.blocks
            .iter()
            .all(|b| coarser.blocks.iter().any(|c| b.is_subset(c)))
    }

    /// Block sizes in block order.
    pub fn supports(&self) -> Vec<usize> {
        self.blocks.iter().map(ObjectSet::len).collect()
    }
}

/// Objects of `t` taking `pair.value` on `pair.attribute`; empty for unseen values.
pub fn block(t: &InformationTable, pair: &AttributeValuePair) -> Result<ObjectSet> {
    t.check_attribute(pair.attribute)?;
    let mut set = ObjectSet::empty(t.n_objects());
    if let Some(code) = t.code_of(pair.attribute, pair.value.as_str()) {
        for (x, &c) in t.column(pair.attribute).iter().enumerate() {
            if c == code {
                set.insert(ObjectId(x));
            }
        }
    }
    Ok(set)
}

pub fn support(t: &InformationTable, pair: &AttributeValuePair) -> Result<usize> {
    block(t, pair).map(|b| b.len())
}

/// `[x]_B`: every object agreeing with `x` on all of `b`. `B = ∅` gives the universe.
pub fn elementary_set(t: &InformationTable, x: ObjectId, b: &AttributeSet) -> Result<ObjectSet> {
    t.check_object(x)?;
    t.check_attributes(b)?;
    let mut set = ObjectSet::empty(t.n_objects());
    for y in t.objects() {
        if agree(t, x, y, b) {
            set.insert(y);
        }
    }
    Ok(set)
}

pub fn indiscernible(
    t: &InformationTable,
    x: ObjectId,
    y: ObjectId,
    b: &AttributeSet,
) -> Result<bool> {
    t.check_object(x)?;
    t.check_object(y)?;
    t.check_attributes(b)?;
    Ok(agree(t, x, y, b))
}

fn agree(t: &InformationTable, x: ObjectId, y: ObjectId, b: &AttributeSet) -> bool {
    b.iter().all(|a| t.code(x, a) == t.code(y, a))
}

/// Canonical block label per object: blocks numbered by first appearance.
///
/// Two attribute subsets induce the same partition iff their signatures are
/// equal, which makes this the cheap comparison used by reduct search.
pub fn signature(t: &InformationTable, b: &AttributeSet) -> Result<Vec<u32>> {
    t.check_attributes(b)?;
    let attrs: Vec<AttributeId> = b.iter().collect();
    Ok(signature_of(t, &attrs))
}

pub(crate) fn signature_of(t: &InformationTable, attrs: &[AttributeId]) -> Vec<u32> {
    let columns: Vec<&[u32]> = attrs.iter().map(|&a| t.column(a)).collect();
    let mut seen: HashMap<Vec<u32>, u32> = HashMap::new();
    let mut key = Vec::with_capacity(columns.len());
    (0..t.n_objects())
        .map(|x| {
            key.clear();
            key.extend(columns.iter().map(|c| c[x]));
            let next = seen.len() as u32;
            *seen.entry(key.clone()).or_insert(next)
        })
        .collect()
}

/// `P_B`, the partition induced by `IND(B)`.
pub fn partition(t: &InformationTable, b: &AttributeSet) -> Result<Partition> {
    let labels = signature(t, b)?;
    Ok(Partition::from_labels(t.n_objects(), &labels))
}

/// Precomputed elementary sets of one attribute subset.
#[derive(Debug, Clone)]
pub struct ElementarySetIndex {
    subset: AttributeSet,
    labels: Vec<u32>,
    partition: Partition,
}

impl ElementarySetIndex {
    pub fn build(t: &InformationTable, b: &AttributeSet) -> Result<Self> {
        let labels = signature(t, b)?;
        let partition = Partition::from_labels(t.n_objects(), &labels);
        Ok(ElementarySetIndex {
            subset: b.clone(),
            labels,
            partition,
        })
    }

    pub fn subset(&self) -> &AttributeSet {
        &self.subset
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// Panics if `x` is outside the indexed table.
    pub fn block_id(&self, x: ObjectId) -> usize {
        self.labels[x.0] as usize
    }

    pub fn elementary_set(&self, x: ObjectId) -> &ObjectSet {
        &self.partition.blocks[self.block_id(x)]
    }
}
