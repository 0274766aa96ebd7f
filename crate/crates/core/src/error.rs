//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by sample construction, depth computation, simulation,
/// and the benchmark driver.
#[derive(Debug, Error)]
pub enum Error {
    /// A grid must contain at least one point.
    #[error("grid must contain at least one point")]
    EmptyGrid,

    /// Grid abscissae must be strictly increasing.
    #[error("grid points must be strictly increasing (violation at index {index})")]
    GridNotIncreasing { index: usize },

    /// Grid abscissae must be finite.
    #[error("non-finite grid point at index {index}")]
    GridNotFinite { index: usize },

    /// A curve must contain at least one value.
    #[error("curve must contain at least one value")]
    EmptyCurve,

    /// A curve value is NaN or infinite.
    #[error("non-finite value at position {index}")]
    NonFinite { index: usize },

    /// A sample row holds a NaN or infinite value.
    #[error("curve {row}: non-finite value at position {index}")]
    CurveNonFinite { row: usize, index: usize },

    /// A sample must contain at least one curve.
    #[error("sample must contain at least one curve")]
    EmptySample,

    /// A sample row does not match the grid length.
    #[error("curve {row} has {actual} values, expected {expected}")]
    CurveLength {
        row: usize,
        expected: usize,
        actual: usize,
    },

    /// Two curves (or a curve and a grid) disagree on length.
    #[error("length mismatch: expected {expected} values, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    /// Label vector length differs from the number of curves.
    #[error("{count} labels supplied for {n} curves")]
    LabelCount { count: usize, n: usize },

    /// A band is defined by at least two curves.
    #[error("band requires at least 2 curves, got {size}")]
    BandTooSmall { size: usize },

    /// Subset order for band-type depths must be at least 2.
    #[error("subset order must be at least 2, got {order}")]
    OrderTooSmall { order: usize },

    /// Subset order cannot exceed the sample size.
    #[error("subset order {order} exceeds sample size {n}")]
    OrderExceedsSample { order: usize, n: usize },

    /// Kernel bandwidth must be strictly positive.
    #[error("bandwidth must be positive, got {value}")]
    NonPositiveBandwidth { value: f64 },

    /// Bandwidth quantile must lie in (0, 1].
    #[error("bandwidth quantile must lie in (0, 1], got {value}")]
    InvalidBandwidthQuantile { value: f64 },

    /// The pairwise-distance bandwidth rule needs at least two curves.
    #[error("pairwise-distance bandwidth requires at least 2 curves")]
    BandwidthNeedsPairs,

    /// Depth vector length differs from the sample size.
    #[error("depth vector has {actual} entries for a sample of {expected} curves")]
    DepthLength { expected: usize, actual: usize },

    /// Trim fraction must lie in [0, 1).
    #[error("trim fraction must lie in [0, 1), got {alpha}")]
    InvalidTrim { alpha: f64 },

    /// Matrix passed to the factorization has the wrong number of entries.
    #[error("matrix has {actual} entries, expected {expected} for dimension {dim}")]
    MatrixShape {
        dim: usize,
        expected: usize,
        actual: usize,
    },

    /// Cholesky factorization failed even after diagonal regularization.
    #[error("matrix is not positive definite (pivot {index})")]
    NotPositiveDefinite { index: usize },

    /// Contamination model identifiers run from 0 to 5.
    #[error("unknown model id {id}, expected 0..=5")]
    UnknownModel { id: u8 },

    /// Contamination probability must lie in [0, 1].
    #[error("contamination probability must lie in [0, 1], got {value}")]
    InvalidProbability { value: f64 },

    /// Peak width must lie in (0, 1).
    #[error("peak width must lie in (0, 1), got {value}")]
    InvalidPeakWidth { value: f64 },

    /// Contamination size must be finite.
    #[error("contamination size must be finite, got {value}")]
    InvalidContaminationSize { value: f64 },

    /// A benchmark needs at least one replication.
    #[error("replication count must be at least 1")]
    NoReplications,

    /// A benchmark needs at least one method and one model.
    #[error("benchmark requires at least one method and one model")]
    EmptyBenchmark,

    /// A replication failed; reports which one.
    #[error("model {model}, replication {rep}: {source}")]
    Replication {
        model: u8,
        rep: usize,
        #[source]
        source: Box<Error>,
    },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
