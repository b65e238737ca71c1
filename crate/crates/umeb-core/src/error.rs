//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("incompatible shapes: {0}x{1} vs {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),

    #[error("non-finite entry rejected")]
    NonFinite,

    #[error("tolerance must be positive, got {0}")]
    NonPositiveTolerance(f64),

    #[error("state is not normalized: sum of squared moduli is {0}")]
    NotNormalized(f64),

    #[error("matrix trace norm must equal the row dimension {expected}, measured {got}")]
    WrongTraceNorm { expected: f64, got: f64 },

    #[error("elements are not orthonormal: max Gram deviation {0}")]
    NotOrthonormal(f64),

    #[error("empty basis")]
    EmptyBasis,

    #[error("dimensions must satisfy 2 <= d < d', got d={d}, d'={d_prime}")]
    DimensionOrder { d: usize, d_prime: usize },

    #[error("hole pattern must contain exactly {d} holes, got {got}")]
    WrongHoleCount { d: usize, got: usize },

    #[error("duplicate hole in row {0}: holes must occupy distinct rows")]
    DuplicateHoleRow(usize),

    #[error("hole row {row} out of range for d={d}")]
    HoleRowOutOfRange { row: usize, d: usize },

    #[error("column {col} out of range for d'={d_prime}")]
    ColumnOutOfRange { col: usize, d_prime: usize },

    #[error("holes occupy {n_cols} columns; N must be < d = {d}")]
    TooManyHoleColumns { n_cols: usize, d: usize },

    #[error("group index {j} out of range: 0 <= j <= d'-2 = {max}")]
    GroupIndexOutOfRange { j: usize, max: usize },

    #[error("row index {k} out of range for d={d}")]
    RowIndexOutOfRange { k: usize, d: usize },

    #[error("partition part {part} is smaller than d = {d}")]
    PartTooSmall { part: usize, d: usize },

    #[error("partition remainder r = {r} must satisfy 0 < r < d = {d}")]
    RemainderOutOfRange { r: isize, d: usize },

    #[error("partition parts sum to {sum}, leaving no valid remainder for d' = {d_prime}")]
    PartitionSum { sum: usize, d_prime: usize },

    #[error("cannot compose bases with different row dimensions {0} and {1}")]
    ComposeDimensionMismatch(usize, usize),

    #[error("column supports overlap at column {0} after applying the offset")]
    OverlappingSupports(usize),

    #[error("basis has {count} states but the space dimension is only {dim}")]
    TooManyStates { count: usize, dim: usize },

    #[error("index list of length {len} is not a permutation of 0..{n}")]
    NotAPermutation { len: usize, n: usize },

    #[error("state {index} is not a product state (Schmidt number {schmidt})")]
    NonProductState { index: usize, schmidt: usize },

    #[error("eigensolver did not converge")]
    EigenNoConvergence,
}
