//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("dimension r+s = {n} exceeds the configured maximum {max}")]
    DimensionCapExceeded { n: usize, max: usize },

    #[error("generator index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("blade indices must be strictly increasing (saw {prev} before {next})")]
    IndicesNotIncreasing { prev: usize, next: usize },

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("matrix is not orthogonal for this signature: (M^T q M)[{row}][{col}] = {value}, expected {expected}")]
    NotOrthogonal {
        row: usize,
        col: usize,
        value: String,
        expected: String,
    },

    #[error("matrix has {rows}x{cols} entries, expected {expected}x{expected}")]
    BadMatrixShape {
        rows: usize,
        cols: usize,
        expected: usize,
    },

    #[error("element does not square to -1: x*x = {square}")]
    NotComplexStructure { square: String },

    #[error("element is not idempotent: x*x - x = {defect}")]
    NotIdempotent { defect: String },

    #[error("image of the idempotent is not closed under the complex structure")]
    NotJClosed,

    #[error("element lies outside the span of the given basis")]
    NotInSpan,

    #[error("basis elements are linearly dependent over the complex scalars")]
    DependentBasis,

    #[error("basis has {got} elements, expected {expected}")]
    BadBasisSize { got: usize, expected: usize },

    #[error("operation requires a complex structure with J(1) = +/-omega")]
    NotVolumeStructure,

    #[error("expected {expected} matrices of equal size, got {detail}")]
    BadMatrixFamily { expected: usize, detail: String },

    #[error("invalid JSON for {kind}: {message}")]
    Json { kind: &'static str, message: String },

    #[error("internal consistency fault: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, CliffordError>;
