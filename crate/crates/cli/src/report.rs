//! Serializable report types, one per subcommand.
//!
//! Object sets are carried as lists of object labels, attribute sets as
//! lists of names, and every rational as a numerator/denominator pair with
//! a four-place decimal rendering alongside.

use roughset::Fraction;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rational {
    pub numerator: usize,
    pub denominator: usize,
    pub decimal: String,
}

impl From<Fraction> for Rational {
    fn from(f: Fraction) -> Self {
        Rational {
            numerator: f.numerator,
            denominator: f.denominator,
            decimal: f.decimal(),
        }
    }
}

impl Rational {
    pub fn fraction(&self) -> Fraction {
        Fraction::new(self.numerator, self.denominator)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttributeDomain {
    pub name: String,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InspectReport {
    pub source: String,
    pub fingerprint: String,
    pub objects: usize,
    pub attributes: usize,
    pub id_column: Option<String>,
    pub domains: Vec<AttributeDomain>,
    /// Groups of two or more objects identical on every attribute.
    pub duplicate_groups: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproxReport {
    pub source: String,
    pub fingerprint: String,
    pub decision: String,
    pub class: String,
    pub attributes: Vec<String>,
    pub target: Vec<String>,
    pub lower: Vec<String>,
    pub upper: Vec<String>,
    pub positive: Vec<String>,
    pub boundary: Vec<String>,
    pub negative: Vec<String>,
    pub accuracy: Option<Rational>,
    pub definability: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductReport {
    pub source: String,
    pub fingerprint: String,
    /// `information` or `decision`.
    pub mode: String,
    pub decision: Option<String>,
    pub candidates: Vec<String>,
    pub reducts: Vec<Vec<String>>,
    pub core: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSummary {
    pub value: String,
    pub size: usize,
    pub lower: Vec<String>,
    pub upper: Vec<String>,
    pub boundary: Vec<String>,
    pub negative: Vec<String>,
    pub accuracy: Option<Rational>,
    pub definability: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductSummary {
    pub reducts: Vec<Vec<String>>,
    pub core: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub attribute: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleEntry {
    /// One-based position in the rule list.
    pub id: usize,
    /// `exact` or `approximate`.
    pub kind: String,
    pub conditions: Vec<Condition>,
    pub decisions: Vec<String>,
    pub text: String,
    pub length: usize,
    pub support: usize,
    pub strength: usize,
    pub coverage: Rational,
    pub discrimination_level: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueCount {
    pub value: String,
    pub count: usize,
}

/// Full analysis of a decision table, produced by `rules`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub source: String,
    pub fingerprint: String,
    pub objects: usize,
    pub decision: String,
    pub conditions: Vec<String>,
    pub consistency: Rational,
    pub deterministic: bool,
    pub classes: Vec<ClassSummary>,
    /// Absent when the condition count exceeds the search cap.
    pub reducts: Option<ReductSummary>,
    pub exact_rules: usize,
    pub approximate_rules: usize,
    pub rules: Vec<RuleEntry>,
    pub decision_support: Vec<ValueCount>,
    pub redundancy: Vec<ValueCount>,
    pub rules_file: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectVerdict {
    pub object: String,
    /// `decision`, `possible` or `abstain`.
    pub verdict: String,
    pub decisions: Vec<String>,
    /// Ids of the rules that fired.
    pub fired: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub rules: String,
    pub rules_source: String,
    pub objects_source: String,
    pub decision: String,
    pub results: Vec<ObjectVerdict>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Report {
    Inspect(InspectReport),
    Approx(ApproxReport),
    Reducts(ReductReport),
    Rules(AnalysisReport),
    Classify(ClassifyReport),
}
