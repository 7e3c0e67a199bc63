use std::collections::HashMap;

use crate::error::{Result, RoughError};
use crate::set::AttributeId;
use crate::table::Value;

use super::{RuleKind, RuleSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Decision(Value),
    /// Only approximate rules fired; any of these may hold.
    Possible(Vec<Value>),
    Abstain,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    /// Indices into `RuleSet::rules` of the rules that fired.
    pub fired: Vec<usize>,
}

/// Classifies one object given as attribute values keyed by schema id.
///
/// Exact rules vote with their strength; ties go to the larger summed
/// support, then to the earlier decision value. Approximate rules only
/// count when no exact rule fires.
pub fn classify(rs: &RuleSet, object: &HashMap<AttributeId, Value>) -> Result<Classification> {
    let mut fired = Vec::new();
    for (i, r) in rs.rules.iter().enumerate() {
        let mut mismatch = false;
        let mut missing = None;
        for c in &r.conditions {
            match object.get(&c.attribute) {
                Some(v) if *v == c.value => {}
                Some(_) => mismatch = true,
                None => missing = Some(c.attribute),
            }
        }
        if mismatch {
            continue;
        }
        if let Some(a) = missing {
            return Err(RoughError::MissingObjectAttribute(
                rs.schema.attribute_name(a).to_owned(),
            ));
        }
        fired.push(i);
    }

    let exact: Vec<usize> = fired
        .iter()
        .copied()
        .filter(|&i| rs.rules[i].kind == RuleKind::Exact)
        .collect();
    let verdict = if !exact.is_empty() {
        // (value, summed strength, summed support)
        let mut tally: Vec<(Value, usize, usize)> = Vec::new();
        for &i in &exact {
            let r = &rs.rules[i];
            let v = &r.decisions[0];
            match tally.iter_mut().find(|(t, _, _)| t == v) {
                Some(e) => {
                    e.1 += r.metrics.strength;
                    e.2 += r.metrics.support;
                }
                None => tally.push((v.clone(), r.metrics.strength, r.metrics.support)),
            }
        }
        let (best, _, _) = tally
            .into_iter()
            .min_by(|a, b| {
                b.1.cmp(&a.1)
                    .then(b.2.cmp(&a.2))
                    .then(rs.schema.value_rank(&a.0).cmp(&rs.schema.value_rank(&b.0)))
                    .then(a.0.cmp(&b.0))
            })
            .expect("nonempty tally");
        Verdict::Decision(best)
    } else if !fired.is_empty() {
        let mut possible: Vec<Value> = Vec::new();
        for &i in &fired {
            for v in &rs.rules[i].decisions {
                if !possible.contains(v) {
                    possible.push(v.clone());
                }
            }
        }
        possible.sort_by_key(|v| (rs.schema.value_rank(v), v.clone()));
        Verdict::Possible(possible)
    } else {
        Verdict::Abstain
    };
    Ok(Classification { verdict, fired })
}
