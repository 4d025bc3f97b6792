use alloc::vec::Vec;

/// Errors reported by matrix construction and the operations on top of it.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,

    #[error("dense data length {len} does not match {rows}x{cols}")]
    DenseLengthMismatch { rows: usize, cols: usize, len: usize },

    #[error("row {row} has {len} entries, expected {expected}")]
    RaggedRow { row: usize, len: usize, expected: usize },

    #[error("sparse entry ({row}, {col}) lies outside a {rows}x{cols} matrix")]
    EntryOutOfBounds {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    #[error("duplicate sparse entry at ({row}, {col})")]
    DuplicateEntry { row: usize, col: usize },

    #[error("sparse storage must not contain explicit zeros: ({row}, {col})")]
    ExplicitZero { row: usize, col: usize },

    #[error("scaling vector has length {got}, expected {expected}")]
    ScalingLengthMismatch { expected: usize, got: usize },

    #[error("scaling factor at index {index} is zero")]
    ZeroScalingFactor { index: usize },

    #[error("scaling factor at index {index} is {value}, expected strictly positive")]
    NonPositiveScalingFactor { index: usize, value: f64 },

    #[error("negative entry {value} at ({row}, {col}) cannot be raised to non-integer power {exponent}")]
    NegativeBaseFractionalExponent {
        row: usize,
        col: usize,
        value: f64,
        exponent: f64,
    },

    #[error("matrix is entirely zero")]
    AllZeroMatrix,

    #[error("unit row/column RMS is unattainable: all-zero rows {zero_rows:?}, all-zero columns {zero_cols:?} (0-based)")]
    InfeasibleZeroLines {
        zero_rows: Vec<usize>,
        zero_cols: Vec<usize>,
    },

    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("index ({row}, {col}) is outside a {rows}x{cols} matrix")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    #[error("shape mismatch: {a_rows}x{a_cols} vs {b_rows}x{b_cols}")]
    ShapeMismatch {
        a_rows: usize,
        a_cols: usize,
        b_rows: usize,
        b_cols: usize,
    },

    #[error("column {col} is constant (zero variance), z-scores are undefined")]
    ConstantColumn { col: usize },

    #[error("need at least {needed} rows, got {got}")]
    TooFewRows { needed: usize, got: usize },

    #[error("entry {value} at ({row}, {col}) is not strictly positive, this data cannot be log-transformed")]
    NonPositiveEntry { row: usize, col: usize, value: f64 },

    #[error("ratio comparisons need at least 2 rows and 2 columns, got {rows}x{cols}")]
    TooSmallForRatios { rows: usize, cols: usize },

    #[error("expected exactly 2 columns, got {cols}")]
    NotTwoColumns { cols: usize },
}
