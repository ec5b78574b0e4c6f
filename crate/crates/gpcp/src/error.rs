//! Crate-wide error type.

use thiserror::Error;

/// Errors produced while loading data, resolving an axis spec, computing a
/// layout, or building a scene. Row numbers are 1-based data rows (the header
/// does not count); axis numbers are 1-based positions in the axis spec.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty input: no data")]
    EmptyInput,

    #[error("no data rows after header")]
    NoDataRows,

    #[error("csv parse error at data row {row}: {msg}")]
    Csv { row: usize, msg: String },

    #[error("missing value at data row {row}, column {column:?}")]
    MissingValue { row: usize, column: String },

    #[error("duplicate column name {name:?}")]
    DuplicateColumnName { name: String },

    #[error("column {column:?} has {len} values, expected {expected}")]
    ColumnLengthMismatch {
        column: String,
        len: usize,
        expected: usize,
    },

    #[error("column {column:?} contains a non-finite value at row {row}")]
    NonFiniteValue { column: String, row: usize },

    #[error("column {column:?} has duplicate level {level:?}")]
    DuplicateLevel { column: String, level: String },

    #[error("column {column:?}: level code {code} out of range for {n_levels} levels")]
    LevelCodeOutOfRange {
        column: String,
        code: usize,
        n_levels: usize,
    },

    #[error("column {column:?} is not categorical")]
    NotCategorical { column: String },

    #[error(
        "level order for column {column:?} is not a permutation: \
         missing label(s) [{}], extra label(s) [{}]",
        missing.join(", "),
        extra.join(", ")
    )]
    LevelOrderMismatch {
        column: String,
        missing: Vec<String>,
        extra: Vec<String>,
    },

    #[error("invalid axis spec: {msg}")]
    SpecSyntax { msg: String },

    #[error("unknown column {name:?}")]
    UnknownColumn { name: String },

    #[error("breakpoint on numeric axis {axis} ({column:?})")]
    BreakOnNumericAxis { axis: usize, column: String },

    #[error(
        "breakpoint after axis {axis} ({column:?}) requires categorical neighbors on both sides"
    )]
    BreakOutsideFactorBlock { axis: usize, column: String },

    #[error("parameter {name} = {value} outside valid range {expected}")]
    InvalidParam {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("frame has no rows; layout requires at least one observation")]
    EmptyFrame,

    #[error("raw-scale value {value} at row {row} of column {column:?} outside [0, 1]")]
    RawOutOfRange {
        column: String,
        row: usize,
        value: f64,
    },

    #[error("grouping column {column:?} is numeric; grouping requires a categorical column")]
    NumericGroupColumn { column: String },

    #[error("palette has {palette} colors but {groups} groups are mapped")]
    PaletteTooSmall { palette: usize, groups: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
