use std::io;

use thiserror::Error;

use crate::matrix::IntersectMode;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("row set must not be empty")]
    EmptyRowSet,

    #[error("row index {row} outside 1..={rows}")]
    RowOutOfRange { row: usize, rows: usize },

    #[error("column index {col} outside 1..={cols}")]
    ColumnOutOfRange { col: usize, cols: usize },

    #[error("column set must not be empty")]
    EmptyColumnSet,

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,

    #[error("matrix entry at row {row}, column {col} is {value}, expected 0 or 1")]
    NonBinaryEntry { row: usize, col: usize, value: u8 },

    #[error("seed row {row} has |N_v| = {available}, below the bound {bound}")]
    InfeasibleSeed { row: usize, available: usize, bound: usize },

    #[error("bound {bound} exceeds the row count {rows}")]
    BoundTooLarge { bound: usize, rows: usize },

    #[error("exhaustive enumeration over {rows} rows exceeds the limit of {limit}")]
    EnumerationLimit { rows: usize, limit: usize },

    #[error("exact enumeration exceeded its time budget")]
    TimeBudgetExceeded,

    #[error("{op} is undefined for mode {mode}")]
    UnsupportedMode { op: &'static str, mode: IntersectMode },

    #[error("bicluster mode {found} does not match requested mode {expected}")]
    ModeMismatch { expected: IntersectMode, found: IntersectMode },

    #[error("every row is excluded; no seed can be selected")]
    AllRowsExcluded,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
