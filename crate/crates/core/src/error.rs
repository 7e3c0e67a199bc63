use thiserror::Error;

/// Everything that can go wrong while loading tables or running an analysis.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RoughError {
    #[error("csv error at row {row}: {message}")]
    Parse { row: usize, message: String },

    #[error("row {row} has {found} fields, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("duplicate attribute name `{0}`")]
    DuplicateAttribute(String),

    #[error("missing value at row {row}, column `{column}`")]
    MissingValue { row: usize, column: String },

    #[error("table has no objects")]
    NoObjects,

    #[error("table has no attributes")]
    NoAttributes,

    #[error("unknown attribute `{0}`")]
    UnknownAttribute(String),

    #[error("attribute index {0} out of range")]
    AttributeOutOfRange(usize),

    #[error("object {0} out of range")]
    UnknownObject(usize),

    #[error("object set over {found} objects does not fit a universe of {expected}")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("decision table needs at least one condition attribute")]
    NoConditions,

    #[error("attribute `{0}` is not a condition attribute")]
    NotCondition(String),

    #[error("attribute `{0}` appears more than once in a condition list")]
    DuplicateCondition(String),

    #[error("unknown decision value `{0}`")]
    UnknownClass(String),

    #[error("a rule needs at least one decision value")]
    NoDecision,

    #[error("accuracy is undefined for an empty upper approximation")]
    UndefinedAccuracy,

    #[error("attribute subset must be nonempty")]
    EmptySubset,

    #[error("{attributes} attributes exceed the exhaustive search cap of {cap}")]
    Capacity { attributes: usize, cap: usize },

    #[error("rule file line {line}: {message}")]
    RuleFormat { line: usize, message: String },

    #[error("object lacks a value for attribute `{0}`")]
    MissingObjectAttribute(String),

    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
}

impl RoughError {
    /// Coarse grouping used for process exit codes.
    pub fn kind(&self) -> ErrorKind {
        use RoughError::*;
        match self {
            Parse { .. }
            | RaggedRow { .. }
            | DuplicateAttribute(_)
            | MissingValue { .. }
            | NoObjects
            | NoAttributes
            | RuleFormat { .. }
            | Config { .. } => ErrorKind::Parse,
            Capacity { .. } => ErrorKind::Capacity,
            _ => ErrorKind::Semantic,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Semantic,
    Capacity,
}

pub type Result<T, E = RoughError> = std::result::Result<T, E>;
