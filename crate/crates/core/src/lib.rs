//! Rough set analysis of categorical data tables.
//!
//! The crate is organised bottom-up:
//!
//! * [`table`]: information and decision tables, CSV loading;
//! * [`indiscernibility`]: attribute-value blocks, elementary sets, partitions;
//! * [`approximation`]: lower/upper approximations, regions, accuracy,
//!   positive region and consistency factor;
//! * [`reducts`]: exhaustive reduct and core computation;
//! * [`rules`]: exact and approximate rule induction, metrics, rule files
//!   and classification.
//!
//! Objects are identified by zero-based row order; rendered object sets
//! ([`ObjectSet`]'s `Display`) are one-based.

pub mod approximation;
pub mod error;
pub mod fraction;
pub mod indiscernibility;
pub mod reducts;
pub mod rules;
pub mod set;
pub mod table;

pub use approximation::{
    accuracy, classify_definability, consistency_factor, decision_boundary, decision_class,
    decision_classes, is_deterministic, lower_approx, positive_region_of_decision, regions,
    upper_approx, ApproximationResult, Definability,
};
pub use error::{ErrorKind, Result, RoughError};
pub use fraction::Fraction;
pub use indiscernibility::{
    block, elementary_set, indiscernible, partition, signature, support, ElementarySetIndex,
    Partition,
};
pub use reducts::{
    core_attributes, find_decision_reducts, find_reducts, is_decision_reduct, is_reduct,
    preserves_partition, preserves_positive_region, ReductMode, ReductSet, SearchOptions,
};
pub use rules::{
    classify, decision_redundancy_factor, decision_support_measure, induce_approximate_rules,
    induce_exact_rules, induce_rules, match_set, parse_rules, rule_metrics, write_rules,
    Classification, Rule, RuleKind, RuleMetrics, RuleSchema, RuleSet, Verdict,
};
pub use set::{AttributeId, AttributeSet, ObjectId, ObjectSet};
pub use table::{
    load_decision_table, load_information_table, AttributeValuePair, CsvOptions, DecisionTable,
    InformationTable, SidecarConfig, Value,
};
