//! Table model: categorical information tables, decision tables, CSV
//! ingestion and the small `key = value` sidecar format.

use std::borrow::Borrow;
use std::collections::HashMap;
use std::fmt;
use std::io::Read;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Result, RoughError};
use crate::set::{AttributeId, AttributeSet, ObjectId, ObjectSet};

/// A categorical value token. Comparison is exact byte equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Value(pub String);

impl Value {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value(s.to_owned())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value(s)
    }
}

impl Borrow<str> for Value {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// The pair `(a, v)` whose block is every object taking `v` on `a`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AttributeValuePair {
    pub attribute: AttributeId,
    pub value: Value,
}

impl AttributeValuePair {
    pub fn new(attribute: AttributeId, value: impl Into<Value>) -> Self {
        AttributeValuePair {
            attribute,
            value: value.into(),
        }
    }
}

/// Options for reading a table from CSV.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CsvOptions {
    /// Column carried as a display label instead of an attribute.
    pub id_column: Option<String>,
}

/// Observed per-attribute domain with values interned in first-seen order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Domain {
    values: Vec<Value>,
    codes: HashMap<String, u32>,
}

impl Domain {
    fn intern(&mut self, token: &str) -> u32 {
        if let Some(&c) = self.codes.get(token) {
            return c;
        }
        let c = self.values.len() as u32;
        self.values.push(Value::from(token));
        self.codes.insert(token.to_owned(), c);
        c
    }
}

/// A total mapping from objects × attributes to categorical values.
///
/// Immutable once built. Cells are stored column-major as per-attribute
/// integer codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InformationTable {
    names: Vec<String>,
    label_column: Option<String>,
    labels: Option<Vec<String>>,
    columns: Vec<Vec<u32>>,
    domains: Vec<Domain>,
    n_objects: usize,
}

impl InformationTable {
    /// Builds a table from attribute names and row-major cells.
    pub fn from_rows<S, T>(names: &[S], rows: &[Vec<T>]) -> Result<Self>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_owned()).collect();
        let rows: Vec<Vec<String>> = rows
            .iter()
            .map(|r| r.iter().map(|c| c.as_ref().to_owned()).collect())
            .collect();
        Self::build(names, None, None, rows, 1)
    }

    /// Like [`from_rows`](Self::from_rows) with a display label per row.
    pub fn with_labels<S, T>(
        names: &[S],
        label_column: &str,
        labels: Vec<String>,
        rows: &[Vec<T>],
    ) -> Result<Self>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let mut t = Self::from_rows(names, rows)?;
        if labels.len() != t.n_objects {
            return Err(RoughError::RaggedRow {
                row: 0,
                expected: t.n_objects,
                found: labels.len(),
            });
        }
        t.label_column = Some(label_column.to_owned());
        t.labels = Some(labels);
        Ok(t)
    }

    fn build(
        names: Vec<String>,
        label_column: Option<String>,
        labels: Option<Vec<String>>,
        rows: Vec<Vec<String>>,
        first_row_number: usize,
    ) -> Result<Self> {
        if names.is_empty() {
            return Err(RoughError::NoAttributes);
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) || label_column.as_deref() == Some(n) {
                return Err(RoughError::DuplicateAttribute(n.clone()));
            }
        }
        if rows.is_empty() {
            return Err(RoughError::NoObjects);
        }
        let mut columns = vec![Vec::with_capacity(rows.len()); names.len()];
        let mut domains = vec![Domain::default(); names.len()];
        for (r, row) in rows.iter().enumerate() {
            let row_number = first_row_number + r;
            if row.len() != names.len() {
                return Err(RoughError::RaggedRow {
                    row: row_number,
                    expected: names.len(),
                    found: row.len(),
                });
            }
            for (a, cell) in row.iter().enumerate() {
                if cell.trim().is_empty() {
                    return Err(RoughError::MissingValue {
                        row: row_number,
                        column: names[a].clone(),
                    });
                }
                columns[a].push(domains[a].intern(cell));
            }
        }
        Ok(InformationTable {
            names,
            label_column,
            labels,
            columns,
            domains,
            n_objects: rows.len(),
        })
    }

    pub fn n_objects(&self) -> usize {
        self.n_objects
    }

    pub fn n_attributes(&self) -> usize {
        self.names.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjectId> {
        (0..self.n_objects).map(ObjectId)
    }

    pub fn attributes(&self) -> impl Iterator<Item = AttributeId> {
        (0..self.names.len()).map(AttributeId)
    }

    pub fn all_attributes(&self) -> AttributeSet {
        self.attributes().collect()
    }

    pub fn universe(&self) -> ObjectSet {
        ObjectSet::full(self.n_objects)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Panics if `a` is out of range; use [`check_attribute`](Self::check_attribute) first
    /// for unchecked input.
    pub fn attribute_name(&self, a: AttributeId) -> &str {
        &self.names[a.0]
    }

    pub fn attribute_id(&self, name: &str) -> Result<AttributeId> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(AttributeId)
            .ok_or_else(|| RoughError::UnknownAttribute(name.to_owned()))
    }

    pub fn attribute_set<S: AsRef<str>>(&self, names: &[S]) -> Result<AttributeSet> {
        names
            .iter()
            .map(|n| self.attribute_id(n.as_ref()))
            .collect()
    }

    pub fn check_attribute(&self, a: AttributeId) -> Result<()> {
        if a.0 < self.names.len() {
            Ok(())
        } else {
            Err(RoughError::AttributeOutOfRange(a.0))
        }
    }

    pub fn check_attributes(&self, b: &AttributeSet) -> Result<()> {
        b.iter().try_for_each(|a| self.check_attribute(a))
    }

    pub fn check_object(&self, x: ObjectId) -> Result<()> {
        if x.0 < self.n_objects {
            Ok(())
        } else {
            Err(RoughError::UnknownObject(x.0))
        }
    }

    pub fn check_object_set(&self, s: &ObjectSet) -> Result<()> {
        if s.universe() == self.n_objects {
            Ok(())
        } else {
            Err(RoughError::UniverseMismatch {
                expected: self.n_objects,
                found: s.universe(),
            })
        }
    }

    pub fn value(&self, x: ObjectId, a: AttributeId) -> &Value {
        &self.domains[a.0].values[self.columns[a.0][x.0] as usize]
    }

    pub(crate) fn code(&self, x: ObjectId, a: AttributeId) -> u32 {
        self.columns[a.0][x.0]
    }

    pub(crate) fn column(&self, a: AttributeId) -> &[u32] {
        &self.columns[a.0]
    }

    pub(crate) fn code_of(&self, a: AttributeId, v: &str) -> Option<u32> {
        self.domains[a.0].codes.get(v).copied()
    }

    /// Distinct values of `a` in order of first appearance.
    pub fn value_domain(&self, a: AttributeId) -> Result<&[Value]> {
        self.check_attribute(a)?;
        Ok(&self.domains[a.0].values)
    }

    pub fn row(&self, x: ObjectId) -> Vec<&Value> {
        self.attributes().map(|a| self.value(x, a)).collect()
    }

    pub fn label_column(&self) -> Option<&str> {
        self.label_column.as_deref()
    }

    /// Display label for `x`: the id column if present, else the one-based row number.
    pub fn label(&self, x: ObjectId) -> String {
        match &self.labels {
            Some(l) => l[x.0].clone(),
            None => (x.0 + 1).to_string(),
        }
    }

    pub fn labels(&self, s: &ObjectSet) -> Vec<String> {
        s.iter().map(|x| self.label(x)).collect()
    }

    /// Serializes back to CSV, id column first when present.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header: Vec<&str> = Vec::new();
        if let Some(l) = &self.label_column {
            header.push(l);
        }
        header.extend(self.names.iter().map(String::as_str));
        w.write_record(&header).expect("in-memory write");
        for x in self.objects() {
            let mut rec: Vec<String> = Vec::with_capacity(header.len());
            if self.labels.is_some() {
                rec.push(self.label(x));
            }
            rec.extend(self.row(x).into_iter().map(|v| v.0.clone()));
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
    }

    /// Short stable content hash of the CSV rendering.
    pub fn fingerprint(&self) -> String {
        let digest = Sha256::digest(self.to_csv().as_bytes());
        hex::encode(&digest[..8])
    }
}

/// Reads an information table from CSV. The first record is the header.
pub fn load_information_table<R: Read>(
    source: R,
    options: &CsvOptions,
) -> Result<InformationTable> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(source);
    let mut records = reader.records();
    let header = match records.next() {
        None => return Err(RoughError::NoAttributes),
        Some(h) => h.map_err(csv_error)?,
    };
    let header: Vec<String> = header.iter().map(str::to_owned).collect();
    let id_index = match &options.id_column {
        None => None,
        Some(name) => Some(
            header
                .iter()
                .position(|h| h == name)
                .ok_or_else(|| RoughError::UnknownAttribute(name.clone()))?,
        ),
    };

    let mut labels = Vec::new();
    let mut rows = Vec::new();
    for (i, rec) in records.enumerate() {
        let rec = rec.map_err(csv_error)?;
        // header is line 1
        let line = i + 2;
        if rec.len() != header.len() {
            return Err(RoughError::RaggedRow {
                row: line,
                expected: header.len(),
                found: rec.len(),
            });
        }
        let mut row = Vec::with_capacity(header.len());
        for (c, cell) in rec.iter().enumerate() {
            if Some(c) == id_index {
                labels.push(cell.to_owned());
            } else {
                row.push(cell.to_owned());
            }
        }
        rows.push(row);
    }

    let (names, label_column) = match id_index {
        None => (header, None),
        Some(i) => {
            let mut names = header;
            let label = names.remove(i);
            (names, Some(label))
        }
    };
    let labels = label_column.as_ref().map(|_| labels);
    InformationTable::build(names, label_column, labels, rows, 2)
}

fn csv_error(e: csv::Error) -> RoughError {
    let row = e.position().map(|p| p.line() as usize).unwrap_or(0);
    RoughError::Parse {
        row,
        message: e.to_string(),
    }
}

/// An information table with one attribute designated as the decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionTable {
    base: InformationTable,
    decision: AttributeId,
    conditions: AttributeSet,
}

impl DecisionTable {
    pub fn new(base: InformationTable, decision_name: &str) -> Result<Self> {
        let decision = base.attribute_id(decision_name)?;
        let conditions: AttributeSet = base.attributes().filter(|&a| a != decision).collect();
        if conditions.is_empty() {
            return Err(RoughError::NoConditions);
        }
        Ok(DecisionTable {
            base,
            decision,
            conditions,
        })
    }

    pub fn base(&self) -> &InformationTable {
        &self.base
    }

    pub fn decision(&self) -> AttributeId {
        self.decision
    }

    pub fn decision_name(&self) -> &str {
        self.base.attribute_name(self.decision)
    }

    pub fn conditions(&self) -> &AttributeSet {
        &self.conditions
    }

    pub fn condition_names(&self) -> Vec<&str> {
        self.conditions
            .iter()
            .map(|a| self.base.attribute_name(a))
            .collect()
    }

    pub fn decision_value(&self, x: ObjectId) -> &Value {
        self.base.value(x, self.decision)
    }

    pub(crate) fn decision_codes(&self) -> &[u32] {
        self.base.column(self.decision)
    }

    pub fn decision_domain(&self) -> &[Value] {
        &self.base.domains[self.decision.0].values
    }

    /// Fails unless every attribute of `b` is a condition attribute.
    pub fn check_conditions(&self, b: &AttributeSet) -> Result<()> {
        self.base.check_attributes(b)?;
        match b.iter().find(|&a| !self.conditions.contains(a)) {
            Some(a) => Err(RoughError::NotCondition(
                self.base.attribute_name(a).to_owned(),
            )),
            None => Ok(()),
        }
    }
}

pub fn load_decision_table<R: Read>(
    source: R,
    decision_name: &str,
    options: &CsvOptions,
) -> Result<DecisionTable> {
    DecisionTable::new(load_information_table(source, options)?, decision_name)
}

/// Sidecar settings read from `key = value` lines. `#` starts a comment.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SidecarConfig {
    pub decision: Option<String>,
    pub id_column: Option<String>,
}

impl SidecarConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = SidecarConfig::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| RoughError::Config {
                line: i + 1,
                message: format!("expected key = value, got `{line}`"),
            })?;
            let value = value.trim().to_owned();
            match key.trim() {
                "decision" => cfg.decision = Some(value),
                "id" | "id_column" => cfg.id_column = Some(value),
                other => {
                    return Err(RoughError::Config {
                        line: i + 1,
                        message: format!("unknown key `{other}`"),
                    })
                }
            }
        }
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TABLE1: &str = "Coal,Sulfur,Phosphorus\n\
        High,High,Low\nAvg,High,Low\nAvg,High,Low\nLow,Low,Low\nAvg,Low,High\nHigh,Low,High\n";

    fn table1() -> InformationTable {
        load_information_table(TABLE1.as_bytes(), &CsvOptions::default()).unwrap()
    }

    #[test]
    fn loads_table1_dimensions_and_domains() {
        let t = table1();
        assert_eq!((t.n_objects(), t.n_attributes()), (6, 3));
        let coal = t.attribute_id("Coal").unwrap();
        let phos = t.attribute_id("Phosphorus").unwrap();
        let names = |vs: &[Value]| vs.iter().map(|v| v.0.clone()).collect::<Vec<_>>();
        assert_eq!(names(t.value_domain(coal).unwrap()), ["High", "Avg", "Low"]);
        assert_eq!(names(t.value_domain(phos).unwrap()), ["Low", "High"]);
        assert_eq!(t.value(ObjectId(0), coal).as_str(), "High");
    }

    #[test]
    fn minimal_table() {
        let t = load_information_table("A\nx\n".as_bytes(), &CsvOptions::default()).unwrap();
        assert_eq!((t.n_objects(), t.n_attributes()), (1, 1));
        assert_eq!(t.value_domain(AttributeId(0)).unwrap().len(), 1);
    }

    #[test]
    fn blank_cell_is_missing_value() {
        let src = TABLE1.replacen("Avg,Low,High", "Avg,,High", 1);
        let err = load_information_table(src.as_bytes(), &CsvOptions::default()).unwrap_err();
        assert_eq!(
            err,
            RoughError::MissingValue {
                row: 6,
                column: "Sulfur".into()
            }
        );
    }

    #[test]
    fn ragged_and_duplicate_headers() {
        let err =
            load_information_table("A,B\nx,y\nz\n".as_bytes(), &CsvOptions::default()).unwrap_err();
        assert_eq!(
            err,
            RoughError::RaggedRow {
                row: 3,
                expected: 2,
                found: 1
            }
        );
        let err =
            load_information_table("A,A\nx,y\n".as_bytes(), &CsvOptions::default()).unwrap_err();
        assert_eq!(err, RoughError::DuplicateAttribute("A".into()));
        assert_eq!(
            load_information_table("".as_bytes(), &CsvOptions::default()).unwrap_err(),
            RoughError::NoAttributes
        );
        assert_eq!(
            load_information_table("A,B\n".as_bytes(), &CsvOptions::default()).unwrap_err(),
            RoughError::NoObjects
        );
    }

    #[test]
    fn values_are_case_sensitive_and_not_numeric() {
        let t = load_information_table("A\nhigh\nHigh\n1\n01\n".as_bytes(), &CsvOptions::default())
            .unwrap();
        assert_eq!(t.value_domain(AttributeId(0)).unwrap().len(), 4);
    }

    #[test]
    fn id_column_is_a_label_not_an_attribute() {
        let src = "Pipe,Coal\np1,High\np2,Low\n";
        let opts = CsvOptions {
            id_column: Some("Pipe".into()),
        };
        let t = load_information_table(src.as_bytes(), &opts).unwrap();
        assert_eq!(t.names(), ["Coal"]);
        assert_eq!(t.label(ObjectId(1)), "p2");
        assert_eq!(t.to_csv(), src);
        let t = load_information_table("Coal\nHigh\n".as_bytes(), &CsvOptions::default()).unwrap();
        assert_eq!(t.label(ObjectId(0)), "1");
    }

    #[test]
    fn decision_split() {
        let src = "Coal,Sulfur,Phosphorus,Cracks\nHigh,High,Low,Yes\nAvg,High,Low,No\n";
        let d = load_decision_table(src.as_bytes(), "Cracks", &CsvOptions::default()).unwrap();
        assert_eq!(d.condition_names(), ["Coal", "Sulfur", "Phosphorus"]);
        assert_eq!(d.decision_name(), "Cracks");
        assert_eq!(
            load_decision_table(src.as_bytes(), "Rust", &CsvOptions::default()).unwrap_err(),
            RoughError::UnknownAttribute("Rust".into())
        );
        let d = load_decision_table("A,D\nx,y\n".as_bytes(), "D", &CsvOptions::default()).unwrap();
        assert_eq!(d.conditions().len(), 1);
        assert_eq!(
            load_decision_table("D\ny\n".as_bytes(), "D", &CsvOptions::default()).unwrap_err(),
            RoughError::NoConditions
        );
    }

    #[test]
    fn sidecar_config() {
        let cfg = SidecarConfig::parse("# comment\ndecision = Cracks\nid=Pipe\n\n").unwrap();
        assert_eq!(cfg.decision.as_deref(), Some("Cracks"));
        assert_eq!(cfg.id_column.as_deref(), Some("Pipe"));
        assert!(SidecarConfig::parse("colour = red").is_err());
        assert!(SidecarConfig::parse("decision").is_err());
    }

    #[test]
    fn quoted_cells_are_honoured() {
        let t = load_information_table("\"A,1\",B\n\"x,y\",z\n".as_bytes(), &CsvOptions::default())
            .unwrap();
        assert_eq!(t.names(), ["A,1", "B"]);
        assert_eq!(t.value(ObjectId(0), AttributeId(0)).as_str(), "x,y");
        let again = load_information_table(t.to_csv().as_bytes(), &CsvOptions::default()).unwrap();
        assert_eq!(again, t);
    }
}
