//! Greedy sequential covering over attribute-value blocks.
//!
//! A rule is grown one pair at a time, always taking the pair whose block
//! covers the most still-uncovered goal objects (ties: smaller block, then
//! attribute order, then value order), until every object it matches lies
//! in the target region. Redundant conditions are then dropped.

use crate::approximation::{decision_boundary, decision_classes, lower_approx};
use crate::error::Result;
use crate::indiscernibility::{block, partition};
use crate::set::{AttributeId, ObjectSet};
use crate::table::{AttributeValuePair, DecisionTable, Value};

use super::{Rule, RuleSet};

/// Blocks of every condition attribute-value pair, in attribute then domain order.
struct BlockTable {
    pairs: Vec<(AttributeValuePair, ObjectSet)>,
}

impl BlockTable {
    fn new(d: &DecisionTable) -> Result<Self> {
        let t = d.base();
        let mut pairs = Vec::new();
        for a in d.conditions().iter() {
            for v in t.value_domain(a)? {
                let p = AttributeValuePair::new(a, v.clone());
                let b = block(t, &p)?;
                pairs.push((p, b));
            }
        }
        Ok(BlockTable { pairs })
    }

    fn matches(&self, universe: usize, chosen: &[usize]) -> ObjectSet {
        chosen.iter().fold(ObjectSet::full(universe), |mut m, &i| {
            m.intersect_with(&self.pairs[i].1);
            m
        })
    }

    /// Grows a conjunction covering part of `goal` whose match set lies in `target`.
    fn grow(&self, goal: &ObjectSet, target: &ObjectSet) -> Vec<usize> {
        let universe = goal.universe();
        let mut chosen: Vec<usize> = Vec::new();
        let mut used: Vec<AttributeId> = Vec::new();
        let mut matched = ObjectSet::full(universe);
        let mut focus = goal.clone();
        while chosen.is_empty() || !matched.is_subset(target) {
            let best = self
                .pairs
                .iter()
                .enumerate()
                .filter(|(_, (p, _))| !used.contains(&p.attribute))
                .map(|(i, (_, b))| (i, b.intersection(&focus).len(), b.len()))
                .filter(|&(_, hit, _)| hit > 0)
                // max hit, then min block size, then earliest pair
                .min_by_key(|&(i, hit, size)| (std::cmp::Reverse(hit), size, i));
            let Some((i, _, _)) = best else { break };
            chosen.push(i);
            used.push(self.pairs[i].0.attribute);
            matched.intersect_with(&self.pairs[i].1);
            focus.intersect_with(&self.pairs[i].1);
        }
        chosen
    }

    /// Drops conditions whose removal keeps the match set inside `target`.
    /// One pass suffices: match sets only grow as conditions are removed.
    fn minimize(&self, mut chosen: Vec<usize>, target: &ObjectSet) -> Vec<usize> {
        let universe = target.universe();
        let mut k = 0;
        while k < chosen.len() {
            if chosen.len() > 1 {
                let mut rest = chosen.clone();
                rest.remove(k);
                if self.matches(universe, &rest).is_subset(target) {
                    chosen = rest;
                    continue;
                }
            }
            k += 1;
        }
        chosen
    }

    fn conditions(&self, chosen: &[usize]) -> Vec<AttributeValuePair> {
        chosen.iter().map(|&i| self.pairs[i].0.clone()).collect()
    }
}

/// Exact rules per decision class, jointly covering exactly its lower approximation.
pub fn induce_exact_rules(d: &DecisionTable) -> Result<RuleSet> {
    let blocks = BlockTable::new(d)?;
    let n = d.base().n_objects();
    let mut rules = Vec::new();
    for (value, class) in decision_classes(d) {
        let lower = lower_approx(d.base(), &class, d.conditions())?;
        let mut found: Vec<(Vec<usize>, ObjectSet)> = Vec::new();
        let mut uncovered = lower.clone();
        while !uncovered.is_empty() {
            let chosen = blocks.minimize(blocks.grow(&uncovered, &lower), &lower);
            let m = blocks.matches(n, &chosen);
            debug_assert!(m.is_subset(&lower) && m.intersects(&uncovered));
            uncovered.difference_with(&m);
            found.push((chosen, m));
        }
        // drop rules whose objects the others already cover
        let mut i = 0;
        while i < found.len() {
            let others = found
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(ObjectSet::empty(n), |acc, (_, (_, m))| acc.union(m));
            if found.len() > 1 && lower.is_subset(&others) {
                found.remove(i);
            } else {
                i += 1;
            }
        }
        for (chosen, _) in found {
            rules.push(Rule::new(
                d,
                blocks.conditions(&chosen),
                vec![value.clone()],
            )?);
        }
    }
    RuleSet::assemble(d, rules)
}

/// One approximate rule per not-yet-covered inconsistent condition granule,
/// with its match set confined to the boundary region.
pub fn induce_approximate_rules(d: &DecisionTable) -> Result<RuleSet> {
    let blocks = BlockTable::new(d)?;
    let t = d.base();
    let n = t.n_objects();
    let boundary = decision_boundary(d);
    let granules = partition(t, d.conditions())?;
    let mut covered = ObjectSet::empty(n);
    let mut rules = Vec::new();
    for g in granules.blocks() {
        if !g.is_subset(&boundary) || g.intersects(&covered) {
            continue;
        }
        let chosen = blocks.minimize(blocks.grow(g, &boundary), &boundary);
        let m = blocks.matches(n, &chosen);
        debug_assert!(g.is_subset(&m) && m.is_subset(&boundary));
        covered.union_with(&m);
        let decisions: Vec<Value> = d
            .decision_domain()
            .iter()
            .filter(|v| m.iter().any(|x| d.decision_value(x) == *v))
            .cloned()
            .collect();
        rules.push(Rule::new(d, blocks.conditions(&chosen), decisions)?);
    }
    RuleSet::assemble(d, rules)
}

/// Exact rules followed by approximate rules.
pub fn induce_rules(d: &DecisionTable) -> Result<RuleSet> {
    RuleSet::merge(d, induce_exact_rules(d)?, induce_approximate_rules(d)?)
}
