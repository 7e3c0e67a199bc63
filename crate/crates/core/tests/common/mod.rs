//! Brute-force reference computations over raw string rows, plus proptest
//! strategies for small random tables. Nothing here calls into the
//! library's partition, approximation or search code.

#![allow(dead_code)]

use proptest::prelude::*;

/// Raw table: attribute names and row-major string cells.
#[derive(Debug, Clone)]
pub struct RawTable {
    pub names: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl RawTable {
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.names.len()
    }

    pub fn agree(&self, x: usize, y: usize, attrs: &[usize]) -> bool {
        attrs.iter().all(|&a| self.rows[x][a] == self.rows[y][a])
    }

    /// The objects agreeing with `x` on `attrs`, by linear scan.
    pub fn elementary(&self, x: usize, attrs: &[usize]) -> Vec<usize> {
        (0..self.n()).filter(|&y| self.agree(x, y, attrs)).collect()
    }
}

/// O(n²) grouping: each unassigned object opens a block of all objects
/// agreeing with it. Blocks come out ordered by smallest member.
pub fn partition(t: &RawTable, attrs: &[usize]) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; t.n()];
    let mut blocks = Vec::new();
    for x in 0..t.n() {
        if assigned[x] {
            continue;
        }
        let mut b = Vec::new();
        for (y, seen) in assigned.iter_mut().enumerate() {
            if t.agree(x, y, attrs) {
                *seen = true;
                b.push(y);
            }
        }
        blocks.push(b);
    }
    blocks
}

pub fn lower(t: &RawTable, target: &[usize], attrs: &[usize]) -> Vec<usize> {
    (0..t.n())
        .filter(|&x| t.elementary(x, attrs).iter().all(|y| target.contains(y)))
        .collect()
}

pub fn upper(t: &RawTable, target: &[usize], attrs: &[usize]) -> Vec<usize> {
    (0..t.n())
        .filter(|&x| t.elementary(x, attrs).iter().any(|y| target.contains(y)))
        .collect()
}

/// Objects whose `attrs`-elementary set carries a single decision.
pub fn positive(t: &RawTable, decision: usize, attrs: &[usize]) -> Vec<usize> {
    (0..t.n())
        .filter(|&x| {
            t.elementary(x, attrs)
                .iter()
                .all(|&y| t.rows[y][decision] == t.rows[x][decision])
        })
        .collect()
}

fn subset_of(candidates: &[usize], mask: u64) -> Vec<usize> {
    (0..candidates.len())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| candidates[i])
        .collect()
}

/// Every subset of `candidates` satisfying `preserves` none of whose proper
/// subsets does, ordered by size then by bitmask value.
pub fn reducts<F>(candidates: &[usize], preserves: F) -> Vec<Vec<usize>>
where
    F: Fn(&[usize]) -> bool,
{
    let n = candidates.len();
    let holds: Vec<bool> = (0..1u64 << n)
        .map(|m| preserves(&subset_of(candidates, m)))
        .collect();
    let mut found: Vec<u64> = (0..1u64 << n)
        .filter(|&m| holds[m as usize])
        .filter(|&m| {
            // any proper submask preserving disqualifies m
            let mut s = m;
            while s > 0 {
                s = (s - 1) & m;
                if holds[s as usize] {
                    return false;
                }
                if s == 0 {
                    break;
                }
            }
            true
        })
        .collect();
    found.sort_by_key(|&m| (m.count_ones(), m));
    found
        .into_iter()
        .map(|m| subset_of(candidates, m))
        .collect()
}

pub fn information_reducts(t: &RawTable) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (0..t.width()).collect();
    let full = partition(t, &all);
    reducts(&all, |b| partition(t, b) == full)
}

pub fn decision_reducts(t: &RawTable, decision: usize) -> Vec<Vec<usize>> {
    let cond: Vec<usize> = (0..t.width()).filter(|&a| a != decision).collect();
    let full = positive(t, decision, &cond);
    reducts(&cond, |b| positive(t, decision, b) == full)
}

fn cell(alphabet: usize) -> impl Strategy<Value = String> {
    (0..alphabet).prop_map(|v| format!("v{v}"))
}

/// Random table with `rows` objects and `cols` attributes, values drawn
/// from an alphabet of 1 to 3 symbols.
pub fn raw_table(
    rows: std::ops::RangeInclusive<usize>,
    cols: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = RawTable> {
    (rows, cols, 1usize..=3).prop_flat_map(|(n, w, k)| {
        prop::collection::vec(prop::collection::vec(cell(k), w), n).prop_map(move |rows| RawTable {
            names: (0..w).map(|a| format!("a{a}")).collect(),
            rows,
        })
    })
}

/// Random decision table: up to `max_cond` condition columns plus a last
/// decision column with up to 3 values.
pub fn raw_decision_table(max_rows: usize, max_cond: usize) -> impl Strategy<Value = RawTable> {
    (1..=max_rows, 1..=max_cond, 1usize..=3, 1usize..=3).prop_flat_map(|(n, w, k, kd)| {
        let row = (prop::collection::vec(cell(k), w), cell(kd)).prop_map(|(mut r, d)| {
            r.push(d);
            r
        });
        prop::collection::vec(row, n).prop_map(move |rows| {
            let mut names: Vec<String> = (0..w).map(|a| format!("a{a}")).collect();
            names.push("dec".into());
            RawTable { names, rows }
        })
    })
}

/// A random table made deterministic by overwriting each decision with a
/// function of the condition values.
pub fn deterministic_table(max_rows: usize, max_cond: usize) -> impl Strategy<Value = RawTable> {
    raw_decision_table(max_rows, max_cond).prop_map(|mut t| {
        let w = t.width() - 1;
        for r in &mut t.rows {
            let key: usize = r[..w]
                .iter()
                .map(|c| c.len() + c.as_bytes()[1] as usize)
                .sum();
            r[w] = format!("d{}", key % 2);
        }
        t
    })
}
