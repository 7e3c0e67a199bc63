//! Exhaustive reduct search for information tables (partition preserving)
//! and decision tables (positive-region preserving).
//!
//! Subsets are visited level by level in increasing size. Within a level the
//! order is colexicographic over attribute position, which is the numeric
//! order of the subset bitmasks. A subset containing an already found reduct
//! is skipped: preservation is monotone under supersets, so every surviving
//! subset that preserves is minimal.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::approximation::positive_region_of;
use crate::error::{Result, RoughError};
use crate::indiscernibility::{signature, signature_of};
use crate::set::{AttributeId, AttributeSet};
use crate::table::{DecisionTable, InformationTable};

pub const DEFAULT_CAP: usize = 24;

/// Levels smaller than this are evaluated sequentially.
const PARALLEL_THRESHOLD: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReductMode {
    Information,
    Decision,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductSet {
    pub reducts: Vec<AttributeSet>,
    pub core: AttributeSet,
    pub mode: ReductMode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest attribute count accepted for exhaustive search (at most 63).
    pub cap: usize,
    /// Skip supersets of reducts found at earlier levels.
    pub pruning: bool,
    pub parallel: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            cap: DEFAULT_CAP,
            pruning: true,
            parallel: true,
        }
    }
}

/// True iff `P_B = P_A`.
pub fn preserves_partition(t: &InformationTable, b: &AttributeSet) -> Result<bool> {
    Ok(signature(t, b)? == signature(t, &t.all_attributes())?)
}

/// A nonempty `B` preserving the partition, no single deletion of which does.
pub fn is_reduct(t: &InformationTable, b: &AttributeSet) -> Result<bool> {
    if b.is_empty() {
        return Err(RoughError::EmptySubset);
    }
    if !preserves_partition(t, b)? {
        return Ok(false);
    }
    for a in b.iter() {
        if preserves_partition(t, &b.without(a))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff `POS_B(Dec) = POS_Cond(Dec)`.
pub fn preserves_positive_region(d: &DecisionTable, b: &AttributeSet) -> Result<bool> {
    d.check_conditions(b)?;
    let attrs: Vec<AttributeId> = b.iter().collect();
    let all: Vec<AttributeId> = d.conditions().iter().collect();
    Ok(positive_region_of(d, &attrs) == positive_region_of(d, &all))
}

pub fn is_decision_reduct(d: &DecisionTable, b: &AttributeSet) -> Result<bool> {
    if b.is_empty() {
        return Err(RoughError::EmptySubset);
    }
    if !preserves_positive_region(d, b)? {
        return Ok(false);
    }
    for a in b.iter() {
        if preserves_positive_region(d, &b.without(a))? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn find_reducts(t: &InformationTable) -> Result<ReductSet> {
    find_reducts_with(t, SearchOptions::default())
}

pub fn find_reducts_with(t: &InformationTable, options: SearchOptions) -> Result<ReductSet> {
    let attrs: Vec<AttributeId> = t.attributes().collect();
    let target = signature_of(t, &attrs);
    let preserves = |subset: &[AttributeId]| signature_of(t, subset) == target;
    let reducts = search(&attrs, options, preserves)?;
    Ok(ReductSet::new(reducts, ReductMode::Information))
}

pub fn find_decision_reducts(d: &DecisionTable) -> Result<ReductSet> {
    find_decision_reducts_with(d, SearchOptions::default())
}

pub fn find_decision_reducts_with(d: &DecisionTable, options: SearchOptions) -> Result<ReductSet> {
    let attrs: Vec<AttributeId> = d.conditions().iter().collect();
    let target = positive_region_of(d, &attrs);
    let preserves = |subset: &[AttributeId]| positive_region_of(d, subset) == target;
    let reducts = search(&attrs, options, preserves)?;
    Ok(ReductSet::new(reducts, ReductMode::Decision))
}

/// Intersection of all reducts; empty when there are none.
pub fn core_attributes(rs: &ReductSet) -> AttributeSet {
    let mut it = rs.reducts.iter();
    match it.next() {
        None => AttributeSet::new(),
        Some(first) => it.fold(first.clone(), |acc, r| acc.intersection(r)),
    }
}

impl ReductSet {
    pub fn new(reducts: Vec<AttributeSet>, mode: ReductMode) -> Self {
        let mut rs = ReductSet {
            reducts,
            core: AttributeSet::new(),
            mode,
        };
        rs.core = core_attributes(&rs);
        rs
    }
}

fn search<F>(
    attrs: &[AttributeId],
    options: SearchOptions,
    preserves: F,
) -> Result<Vec<AttributeSet>>
where
    F: Fn(&[AttributeId]) -> bool + Sync,
{
    let n = attrs.len();
    if n > options.cap || n > 63 {
        return Err(RoughError::Capacity {
            attributes: n,
            cap: options.cap.min(63),
        });
    }
    let subset_of = |mask: u64| -> Vec<AttributeId> {
        (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| attrs[i])
            .collect()
    };
    let holds = |mask: u64| preserves(&subset_of(mask));
    let accept = |mask: u64| -> bool {
        if !holds(mask) {
            return false;
        }
        if options.pruning {
            return true;
        }
        (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .all(|i| !holds(mask & !(1 << i)))
    };

    let mut found: Vec<u64> = Vec::new();
    for k in 0..=n {
        let level: Vec<u64> = masks_of_size(n, k)
            .filter(|&m| !options.pruning || !found.iter().any(|&r| r & !m == 0))
            .collect();
        let accepted: Vec<bool> = if options.parallel && level.len() >= PARALLEL_THRESHOLD {
            level.par_iter().map(|&m| accept(m)).collect()
        } else {
            level.iter().map(|&m| accept(m)).collect()
        };
        found.extend(
            level
                .iter()
                .zip(accepted)
                .filter_map(|(&m, ok)| ok.then_some(m)),
        );
    }
    Ok(found
        .into_iter()
        .map(|m| subset_of(m).into_iter().collect())
        .collect())
}

/// All `k`-bit masks below `2^n` in increasing numeric order (Gosper's hack).
fn masks_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let first = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut next = (k <= n).then_some(first);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let m = (((r ^ cur) >> 2) / c) | r;
            (m < limit).then_some(m)
        };
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::{load_decision_table, load_information_table, CsvOptions};

    const CANONICAL: &str = "Coal,Sulfur,Phosphorus,Cracks\nHigh,High,Low,Yes\nAvg,High,Low,No\n\
        Avg,High,Low,Yes\nLow,Low,Low,No\nAvg,Low,High,Yes\nHigh,Low,High,Yes\n";

    fn table1() -> InformationTable {
        let src = "Coal,Sulfur,Phosphorus\nHigh,High,Low\nAvg,High,Low\nAvg,High,Low\n\
                   Low,Low,Low\nAvg,Low,High\nHigh,Low,High\n";
        load_information_table(src.as_bytes(), &CsvOptions::default()).unwrap()
    }

    #[test]
    fn gosper_enumerates_colex() {
        let v: Vec<u64> = masks_of_size(4, 2).collect();
        assert_eq!(v, [0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(masks_of_size(3, 0).collect::<Vec<_>>(), [0]);
        assert_eq!(masks_of_size(3, 3).collect::<Vec<_>>(), [0b111]);
        assert_eq!(masks_of_size(2, 3).count(), 0);
    }

    #[test]
    fn table1_reducts() {
        let t = table1();
        let cs = t.attribute_set(&["Coal", "Sulfur"]).unwrap();
        let cp = t.attribute_set(&["Coal", "Phosphorus"]).unwrap();
        let all = t.all_attributes();
        assert!(preserves_partition(&t, &cs).unwrap());
        assert!(!preserves_partition(&t, &t.attribute_set(&["Coal"]).unwrap()).unwrap());
        assert!(preserves_partition(&t, &all).unwrap());
        assert!(is_reduct(&t, &cs).unwrap());
        assert!(!is_reduct(&t, &t.attribute_set(&["Sulfur", "Phosphorus"]).unwrap()).unwrap());
        assert!(!is_reduct(&t, &all).unwrap());
        assert_eq!(
            is_reduct(&t, &AttributeSet::new()),
            Err(RoughError::EmptySubset)
        );

        let rs = find_reducts(&t).unwrap();
        assert_eq!(rs.reducts, [cs, cp]);
        assert_eq!(rs.core, t.attribute_set(&["Coal"]).unwrap());
        assert_eq!(rs.mode, ReductMode::Information);
    }

    #[test]
    fn canonical_decision_reducts() {
        let d =
            load_decision_table(CANONICAL.as_bytes(), "Cracks", &CsvOptions::default()).unwrap();
        let t = d.base();
        let rs = find_decision_reducts(&d).unwrap();
        assert_eq!(
            rs.reducts,
            [
                t.attribute_set(&["Coal", "Sulfur"]).unwrap(),
                t.attribute_set(&["Coal", "Phosphorus"]).unwrap()
            ]
        );
        assert_eq!(rs.core, t.attribute_set(&["Coal"]).unwrap());
    }

    #[test]
    fn identical_columns_give_singleton_reducts() {
        let t = InformationTable::from_rows(
            &["A", "B", "C"],
            &[
                vec!["x", "x", "x"],
                vec!["y", "y", "y"],
                vec!["x", "x", "x"],
            ],
        )
        .unwrap();
        let rs = find_reducts(&t).unwrap();
        assert_eq!(
            rs.reducts,
            [
                AttributeSet::from([0]),
                AttributeSet::from([1]),
                AttributeSet::from([2])
            ]
        );
        assert!(rs.core.is_empty());
    }

    #[test]
    fn single_attribute_and_constant_column() {
        let t = InformationTable::from_rows(&["A"], &[vec!["x"], vec!["y"]]).unwrap();
        let rs = find_reducts(&t).unwrap();
        assert_eq!(rs.reducts, [AttributeSet::from([0])]);
        assert_eq!(rs.core, AttributeSet::from([0]));

        let t = InformationTable::from_rows(
            &["Informative", "Constant", "D"],
            &[
                vec!["a", "k", "p"],
                vec!["b", "k", "q"],
                vec!["a", "k", "p"],
            ],
        )
        .unwrap();
        let d = DecisionTable::new(t, "D").unwrap();
        let rs = find_decision_reducts(&d).unwrap();
        assert_eq!(rs.reducts, [AttributeSet::from([0])]);
    }

    #[test]
    fn all_identical_rows_reduce_to_empty_set() {
        let t =
            InformationTable::from_rows(&["A", "B"], &[vec!["x", "y"], vec!["x", "y"]]).unwrap();
        let rs = find_reducts(&t).unwrap();
        assert_eq!(rs.reducts, [AttributeSet::new()]);
        assert!(rs.core.is_empty());
    }

    #[test]
    fn capacity_is_explicit() {
        let names: Vec<String> = (0..5).map(|i| format!("a{i}")).collect();
        let row: Vec<&str> = vec!["v"; 5];
        let t = InformationTable::from_rows(&names, &[row]).unwrap();
        let opts = SearchOptions {
            cap: 4,
            ..SearchOptions::default()
        };
        assert_eq!(
            find_reducts_with(&t, opts),
            Err(RoughError::Capacity {
                attributes: 5,
                cap: 4
            })
        );
    }

    #[test]
    fn core_of_explicit_sets() {
        let rs = ReductSet::new(
            vec![AttributeSet::from([0, 1]), AttributeSet::from([0, 2])],
            ReductMode::Information,
        );
        assert_eq!(core_attributes(&rs), AttributeSet::from([0]));
        let rs = ReductSet::new(vec![AttributeSet::from([0, 1])], ReductMode::Information);
        assert_eq!(rs.core, AttributeSet::from([0, 1]));
        let rs = ReductSet::new(
            vec![AttributeSet::from([0]), AttributeSet::from([1])],
            ReductMode::Information,
        );
        assert!(rs.core.is_empty());
        assert!(core_attributes(&ReductSet::new(vec![], ReductMode::Decision)).is_empty());
    }
}
