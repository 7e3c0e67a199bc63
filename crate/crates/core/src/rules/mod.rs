//! Decision rules: induction from lower approximations and boundary
//! regions, rule quality metrics, a line-oriented text format and a
//! strength-voting classifier.

mod classify;
mod format;
mod induce;

use crate::error::{Result, RoughError};
use crate::fraction::Fraction;
use crate::indiscernibility::block;
use crate::set::{AttributeId, ObjectSet};
use crate::table::{AttributeValuePair, DecisionTable, Value};

pub use classify::{classify, Classification, Verdict};
pub use format::{parse_rules, write_rules};
pub use induce::{induce_approximate_rules, induce_exact_rules, induce_rules};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleKind {
    /// Single certain decision, sourced from a lower approximation.
    Exact,
    /// Several possible decisions, sourced from the boundary region.
    Approximate,
}

impl RuleKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RuleKind::Exact => "exact",
            RuleKind::Approximate => "approximate",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleMetrics {
    /// Number of conditions.
    pub length: usize,
    /// Objects matching the conditions and carrying one of the rule's decisions.
    pub strength: usize,
    /// Objects matching the conditions.
    pub support: usize,
    /// Strength over the size of the rule's decision classes.
    pub coverage: Fraction,
    /// Strength over support; `None` when nothing matches.
    pub discrimination_level: Option<Fraction>,
}

impl RuleMetrics {
    fn from_counts(length: usize, strength: usize, support: usize, class_size: usize) -> Self {
        RuleMetrics {
            length,
            strength,
            support,
            coverage: if class_size == 0 {
                Fraction::new(0, 1)
            } else {
                Fraction::new(strength, class_size)
            },
            discrimination_level: (support > 0).then(|| Fraction::new(strength, support)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    /// Sorted by attribute, at most one per attribute.
    pub conditions: Vec<AttributeValuePair>,
    /// Nonempty, in decision-domain order.
    pub decisions: Vec<Value>,
    pub kind: RuleKind,
    pub metrics: RuleMetrics,
}

impl Rule {
    /// Builds a rule and computes its metrics against `d`.
    pub fn new(
        d: &DecisionTable,
        mut conditions: Vec<AttributeValuePair>,
        decisions: Vec<Value>,
    ) -> Result<Self> {
        if decisions.is_empty() {
            return Err(RoughError::NoDecision);
        }
        conditions.sort();
        let kind = if decisions.len() == 1 {
            RuleKind::Exact
        } else {
            RuleKind::Approximate
        };
        let placeholder = RuleMetrics::from_counts(conditions.len(), 0, 0, 0);
        let mut rule = Rule {
            conditions,
            decisions,
            kind,
            metrics: placeholder,
        };
        rule.metrics = rule_metrics(d, &rule)?;
        Ok(rule)
    }

    pub fn decides(&self, v: &Value) -> bool {
        self.decisions.contains(v)
    }
}

/// Attribute names and decision values the rules' ids and tokens refer to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSchema {
    /// Indexed by `AttributeId`.
    pub attributes: Vec<String>,
    pub decision: String,
    /// Decision values in tie-breaking order.
    pub decision_values: Vec<Value>,
}

impl RuleSchema {
    pub fn of(d: &DecisionTable) -> Self {
        RuleSchema {
            attributes: d.base().names().to_vec(),
            decision: d.decision_name().to_owned(),
            decision_values: d.decision_domain().to_vec(),
        }
    }

    pub fn attribute_id(&self, name: &str) -> Option<AttributeId> {
        self.attributes
            .iter()
            .position(|a| a == name)
            .map(AttributeId)
    }

    pub fn attribute_name(&self, a: AttributeId) -> &str {
        &self.attributes[a.0]
    }

    fn value_rank(&self, v: &Value) -> usize {
        self.decision_values
            .iter()
            .position(|x| x == v)
            .unwrap_or(usize::MAX)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSet {
    pub schema: RuleSchema,
    /// Fingerprint of the table the rules were induced from.
    pub source: String,
    pub rules: Vec<Rule>,
    /// Rules per decision value (DSM).
    pub decision_support: Vec<(Value, usize)>,
    /// Mutually disjoint rules per decision value (DRF).
    pub redundancy: Vec<(Value, usize)>,
}

impl RuleSet {
    pub(crate) fn assemble(d: &DecisionTable, rules: Vec<Rule>) -> Result<Self> {
        let mut rs = RuleSet {
            schema: RuleSchema::of(d),
            source: d.base().fingerprint(),
            rules,
            decision_support: Vec::new(),
            redundancy: Vec::new(),
        };
        rs.decision_support = decision_support_measure(&rs);
        rs.redundancy = decision_redundancy_factor(d, &rs)?;
        Ok(rs)
    }

    /// Concatenates two rule sets induced from the same table.
    pub(crate) fn merge(d: &DecisionTable, a: RuleSet, b: RuleSet) -> Result<Self> {
        let mut rules = a.rules;
        rules.extend(b.rules);
        RuleSet::assemble(d, rules)
    }

    pub fn exact(&self) -> impl Iterator<Item = &Rule> {
        self.rules.iter().filter(|r| r.kind == RuleKind::Exact)
    }

    pub fn approximate(&self) -> impl Iterator<Item = &Rule> {
        self.rules
            .iter()
            .filter(|r| r.kind == RuleKind::Approximate)
    }

    /// Renders one rule as `IF a=v AND ... THEN d=v [OR d=v]`.
    pub fn describe(&self, r: &Rule) -> String {
        format::rule_body(&self.schema, r)
    }
}

/// Objects satisfying every condition; the universe for an empty list.
pub fn match_set(d: &DecisionTable, conditions: &[AttributeValuePair]) -> Result<ObjectSet> {
    let t = d.base();
    let mut m = t.universe();
    for (i, c) in conditions.iter().enumerate() {
        t.check_attribute(c.attribute)?;
        let name = t.attribute_name(c.attribute);
        if !d.conditions().contains(c.attribute) {
            return Err(RoughError::NotCondition(name.to_owned()));
        }
        if conditions[..i].iter().any(|p| p.attribute == c.attribute) {
            return Err(RoughError::DuplicateCondition(name.to_owned()));
        }
        m.intersect_with(&block(t, c)?);
    }
    Ok(m)
}

fn decision_objects(d: &DecisionTable, decisions: &[Value]) -> ObjectSet {
    let mut s = ObjectSet::empty(d.base().n_objects());
    for x in d.base().objects() {
        if decisions.contains(d.decision_value(x)) {
            s.insert(x);
        }
    }
    s
}

/// Length, support, strength, coverage and discrimination level of `r` on `d`.
pub fn rule_metrics(d: &DecisionTable, r: &Rule) -> Result<RuleMetrics> {
    let matched = match_set(d, &r.conditions)?;
    let classes = decision_objects(d, &r.decisions);
    let strength = matched.intersection(&classes).len();
    Ok(RuleMetrics::from_counts(
        r.conditions.len(),
        strength,
        matched.len(),
        classes.len(),
    ))
}

/// Number of rules crediting each decision value; zero counts are omitted.
pub fn decision_support_measure(rs: &RuleSet) -> Vec<(Value, usize)> {
    let mut values: Vec<Value> = rs.schema.decision_values.clone();
    for r in &rs.rules {
        for v in &r.decisions {
            if !values.contains(v) {
                values.push(v.clone());
            }
        }
    }
    values
        .into_iter()
        .filter_map(|v| {
            let n = rs.rules.iter().filter(|r| r.decides(&v)).count();
            (n > 0).then_some((v, n))
        })
        .collect()
}

/// Per decision value, the size of a disjoint family of its rules' match
/// sets picked greedily smallest-first (ties by rule order). A lower bound
/// on the largest such family.
pub fn decision_redundancy_factor(d: &DecisionTable, rs: &RuleSet) -> Result<Vec<(Value, usize)>> {
    let matches: Vec<ObjectSet> = rs
        .rules
        .iter()
        .map(|r| match_set(d, &r.conditions))
        .collect::<Result<_>>()?;
    Ok(decision_support_measure(rs)
        .into_iter()
        .map(|(v, _)| {
            let mut idx: Vec<usize> = (0..rs.rules.len())
                .filter(|&i| rs.rules[i].decides(&v))
                .collect();
            idx.sort_by_key(|&i| (matches[i].len(), i));
            let mut taken = ObjectSet::empty(d.base().n_objects());
            let mut count = 0;
            for i in idx {
                if taken.is_disjoint(&matches[i]) {
                    taken.union_with(&matches[i]);
                    count += 1;
                }
            }
            (v, count)
        })
        .collect())
}
