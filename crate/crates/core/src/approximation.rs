//! Lower and upper approximations, regions, accuracy and the
//! decision-table measures built on them.

use serde::{Deserialize, Serialize};

use crate::error::{Result, RoughError};
use crate::fraction::Fraction;
use crate::indiscernibility::{partition, signature_of, Partition};
use crate::set::{AttributeId, AttributeSet, ObjectId, ObjectSet};
use crate::table::{DecisionTable, InformationTable, Value};

/// How well a concept is described by an attribute subset.
///
/// `Crisp` means lower = upper and takes precedence over the four rough cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Definability {
    Crisp,
    RoughlyDefinable,
    InternallyUndefinable,
    ExternallyUndefinable,
    TotallyUndefinable,
}

impl Definability {
    pub fn as_str(self) -> &'static str {
        match self {
            Definability::Crisp => "crisp",
            Definability::RoughlyDefinable => "roughly-definable",
            Definability::InternallyUndefinable => "internally-undefinable",
            Definability::ExternallyUndefinable => "externally-undefinable",
            Definability::TotallyUndefinable => "totally-undefinable",
        }
    }

    fn of(lower: &ObjectSet, upper: &ObjectSet) -> Self {
        if lower == upper {
            return Definability::Crisp;
        }
        match (lower.is_empty(), upper.is_full()) {
            (false, false) => Definability::RoughlyDefinable,
            (true, false) => Definability::InternallyUndefinable,
            (false, true) => Definability::ExternallyUndefinable,
            (true, true) => Definability::TotallyUndefinable,
        }
    }
}

impl std::fmt::Display for Definability {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproximationResult {
    pub target: ObjectSet,
    pub subset: AttributeSet,
    pub lower: ObjectSet,
    pub upper: ObjectSet,
    pub positive: ObjectSet,
    pub negative: ObjectSet,
    pub boundary: ObjectSet,
    /// `None` when the upper approximation is empty.
    pub accuracy: Option<Fraction>,
    pub category: Definability,
}

fn approximate(p: &Partition, x: &ObjectSet) -> (ObjectSet, ObjectSet) {
    let mut lower = ObjectSet::empty(x.universe());
    let mut upper = ObjectSet::empty(x.universe());
    for b in p.blocks() {
        if b.is_subset(x) {
            lower.union_with(b);
        }
        if b.intersects(x) {
            upper.union_with(b);
        }
    }
    (lower, upper)
}

fn approximations(
    t: &InformationTable,
    x: &ObjectSet,
    b: &AttributeSet,
) -> Result<(ObjectSet, ObjectSet)> {
    t.check_object_set(x)?;
    Ok(approximate(&partition(t, b)?, x))
}

/// Union of the `B`-elementary sets contained in `x`.
pub fn lower_approx(t: &InformationTable, x: &ObjectSet, b: &AttributeSet) -> Result<ObjectSet> {
    approximations(t, x, b).map(|(l, _)| l)
}

/// Union of the `B`-elementary sets meeting `x`.
pub fn upper_approx(t: &InformationTable, x: &ObjectSet, b: &AttributeSet) -> Result<ObjectSet> {
    approximations(t, x, b).map(|(_, u)| u)
}

pub fn regions(
    t: &InformationTable,
    x: &ObjectSet,
    b: &AttributeSet,
) -> Result<ApproximationResult> {
    let (lower, upper) = approximations(t, x, b)?;
    let accuracy = (!upper.is_empty()).then(|| Fraction::new(lower.len(), upper.len()));
    let category = Definability::of(&lower, &upper);
    Ok(ApproximationResult {
        target: x.clone(),
        subset: b.clone(),
        positive: lower.clone(),
        negative: upper.complement(),
        boundary: upper.difference(&lower),
        lower,
        upper,
        accuracy,
        category,
    })
}

/// `|lower| / |upper|`; an error when the upper approximation is empty.
pub fn accuracy(t: &InformationTable, x: &ObjectSet, b: &AttributeSet) -> Result<Fraction> {
    let (lower, upper) = approximations(t, x, b)?;
    if upper.is_empty() {
        return Err(RoughError::UndefinedAccuracy);
    }
    Ok(Fraction::new(lower.len(), upper.len()))
}

pub fn classify_definability(
    t: &InformationTable,
    x: &ObjectSet,
    b: &AttributeSet,
) -> Result<Definability> {
    let (lower, upper) = approximations(t, x, b)?;
    Ok(Definability::of(&lower, &upper))
}

/// One `(value, objects)` entry per decision value, in first-seen order.
pub fn decision_classes(d: &DecisionTable) -> Vec<(Value, ObjectSet)> {
    let n = d.base().n_objects();
    let mut classes: Vec<(Value, ObjectSet)> = d
        .decision_domain()
        .iter()
        .map(|v| (v.clone(), ObjectSet::empty(n)))
        .collect();
    for (x, &c) in d.decision_codes().iter().enumerate() {
        classes[c as usize].1.insert(ObjectId(x));
    }
    classes
}

/// The objects of `class` (a decision value), or an unknown-class error.
pub fn decision_class(d: &DecisionTable, class: &str) -> Result<ObjectSet> {
    decision_classes(d)
        .into_iter()
        .find(|(v, _)| v.as_str() == class)
        .map(|(_, s)| s)
        .ok_or_else(|| RoughError::UnknownClass(class.to_owned()))
}

/// Union over decision classes of their `B`-lower approximations.
pub fn positive_region_of_decision(d: &DecisionTable, b: &AttributeSet) -> Result<ObjectSet> {
    d.check_conditions(b)?;
    let attrs: Vec<AttributeId> = b.iter().collect();
    Ok(positive_region_of(d, &attrs))
}

/// A block is in the positive region iff all its objects share one decision.
pub(crate) fn positive_region_of(d: &DecisionTable, attrs: &[AttributeId]) -> ObjectSet {
    let labels = signature_of(d.base(), attrs);
    let decisions = d.decision_codes();
    let n_blocks = labels.iter().max().map_or(0, |&m| m as usize + 1);
    // per block: unseen, pure with one decision, or mixed
    let mut purity: Vec<Option<Option<u32>>> = vec![None; n_blocks];
    for (x, &l) in labels.iter().enumerate() {
        let slot = &mut purity[l as usize];
        *slot = match *slot {
            None => Some(Some(decisions[x])),
            Some(Some(c)) if c == decisions[x] => Some(Some(c)),
            _ => Some(None),
        };
    }
    let mut pos = ObjectSet::empty(labels.len());
    for (x, &l) in labels.iter().enumerate() {
        if matches!(purity[l as usize], Some(Some(_))) {
            pos.insert(ObjectId(x));
        }
    }
    pos
}

/// Fraction of objects in the positive region of the full condition set.
pub fn consistency_factor(d: &DecisionTable) -> Fraction {
    let attrs: Vec<AttributeId> = d.conditions().iter().collect();
    let pos = positive_region_of(d, &attrs);
    Fraction::new(pos.len(), d.base().n_objects())
}

pub fn is_deterministic(d: &DecisionTable) -> bool {
    consistency_factor(d).is_one()
}

/// Objects whose condition-elementary set carries more than one decision.
pub fn decision_boundary(d: &DecisionTable) -> ObjectSet {
    let attrs: Vec<AttributeId> = d.conditions().iter().collect();
    positive_region_of(d, &attrs).complement()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::{load_decision_table, CsvOptions};

    const CANONICAL: &str = "Coal,Sulfur,Phosphorus,Cracks\nHigh,High,Low,Yes\nAvg,High,Low,No\n\
        Avg,High,Low,Yes\nLow,Low,Low,No\nAvg,Low,High,Yes\nHigh,Low,High,Yes\n";

    fn canonical() -> DecisionTable {
        load_decision_table(CANONICAL.as_bytes(), "Cracks", &CsvOptions::default()).unwrap()
    }

    fn s(ids: &[usize]) -> ObjectSet {
        ObjectSet::from_indices(6, ids.iter().map(|i| i - 1)).unwrap()
    }

    #[test]
    fn canonical_approximations() {
        let d = canonical();
        let t = d.base();
        let cond = d.conditions();
        let yes = s(&[1, 3, 5, 6]);
        let no = s(&[2, 4]);
        assert_eq!(lower_approx(t, &yes, cond).unwrap(), s(&[1, 5, 6]));
        assert_eq!(upper_approx(t, &yes, cond).unwrap(), s(&[1, 2, 3, 5, 6]));
        assert_eq!(upper_approx(t, &no, cond).unwrap(), s(&[2, 3, 4]));

        let r = regions(t, &yes, cond).unwrap();
        assert_eq!(r.boundary, s(&[2, 3]));
        assert_eq!(r.negative, s(&[4]));
        assert_eq!(r.accuracy, Some(Fraction::new(3, 5)));
        assert_eq!(r.category, Definability::RoughlyDefinable);

        let r = regions(t, &no, cond).unwrap();
        assert_eq!(r.lower, s(&[4]));
        assert_eq!(r.upper, s(&[2, 3, 4]));
        assert_eq!(r.accuracy, Some(Fraction::new(1, 3)));
    }

    #[test]
    fn trivial_targets() {
        let d = canonical();
        let t = d.base();
        let cond = d.conditions();
        let r = regions(t, &t.universe(), cond).unwrap();
        assert_eq!(r.lower, t.universe());
        assert!(r.boundary.is_empty());
        assert_eq!(r.accuracy, Some(Fraction::one()));
        assert_eq!(r.category, Definability::Crisp);

        let empty = ObjectSet::empty(6);
        assert!(lower_approx(t, &empty, cond).unwrap().is_empty());
        assert!(upper_approx(t, &empty, cond).unwrap().is_empty());
        assert_eq!(
            accuracy(t, &empty, cond),
            Err(RoughError::UndefinedAccuracy)
        );
        assert!(lower_approx(t, &ObjectSet::empty(7), cond).is_err());
    }

    #[test]
    fn definability_under_subsets() {
        let d = canonical();
        let t = d.base();
        let yes = s(&[1, 3, 5, 6]);
        let sulfur = t.attribute_set(&["Sulfur"]).unwrap();
        assert_eq!(
            classify_definability(t, &yes, &sulfur).unwrap(),
            Definability::TotallyUndefinable
        );
        let coal = t.attribute_set(&["Coal"]).unwrap();
        assert_eq!(accuracy(t, &s(&[4]), &coal).unwrap(), Fraction::one());
    }

    #[test]
    fn decision_measures() {
        let d = canonical();
        let classes = decision_classes(&d);
        assert_eq!(classes[0], (Value::from("Yes"), s(&[1, 3, 5, 6])));
        assert_eq!(classes[1], (Value::from("No"), s(&[2, 4])));
        assert_eq!(
            positive_region_of_decision(&d, d.conditions()).unwrap(),
            s(&[1, 4, 5, 6])
        );
        let t = d.base();
        let sulfur = t.attribute_set(&["Sulfur"]).unwrap();
        assert!(positive_region_of_decision(&d, &sulfur).unwrap().is_empty());
        let coal = t.attribute_set(&["Coal"]).unwrap();
        assert_eq!(
            positive_region_of_decision(&d, &coal).unwrap(),
            s(&[1, 4, 6])
        );
        let cf = consistency_factor(&d);
        assert_eq!((cf.numerator, cf.denominator), (4, 6));
        assert!(!is_deterministic(&d));
        assert_eq!(decision_boundary(&d), s(&[2, 3]));
        assert!(matches!(
            positive_region_of_decision(&d, &AttributeSet::from([3])),
            Err(RoughError::NotCondition(_))
        ));
        assert_eq!(
            decision_class(&d, "Maybe"),
            Err(RoughError::UnknownClass("Maybe".into()))
        );
    }

    #[test]
    fn row3_high_variant_is_deterministic() {
        let src = CANONICAL.replacen("Avg,High,Low,Yes", "High,High,Low,Yes", 1);
        let d = load_decision_table(src.as_bytes(), "Cracks", &CsvOptions::default()).unwrap();
        assert!(is_deterministic(&d));
        assert_eq!(consistency_factor(&d), Fraction::new(6, 6));
    }

    #[test]
    fn small_edge_tables() {
        let d = load_decision_table("A,D\nx,y\n".as_bytes(), "D", &CsvOptions::default()).unwrap();
        assert!(is_deterministic(&d));
        assert_eq!(decision_classes(&d).len(), 1);
        let d =
            load_decision_table("A,D\nx,y\nx,z\n".as_bytes(), "D", &CsvOptions::default()).unwrap();
        assert_eq!(consistency_factor(&d), Fraction::new(0, 2));
        let d =
            load_decision_table("A,D\nx,y\nw,y\n".as_bytes(), "D", &CsvOptions::default()).unwrap();
        assert_eq!(
            decision_classes(&d),
            vec![(Value::from("y"), ObjectSet::full(2))]
        );
        assert_eq!(consistency_factor(&d), Fraction::one());
    }
}
