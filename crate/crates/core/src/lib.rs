//! Depth statistics for functional data.
//!
//! This crate scores curves observed on a common grid by statistical
//! depth, builds depth-trimmed location estimates from those scores, and
//! benchmarks the estimators on simulated Gaussian-process data under six
//! contamination models.
//!
//! - [`sample`]: grids, curves, labelled samples.
//! - [`depth`]: half-region, majority, band, modified band, spatial, and
//!   kernel (h-mode) depth.
//! - [`estimator`]: depth-trimmed and untrimmed pointwise means.
//! - [`simulate`]: seeded Gaussian-process samples and contamination
//!   models 0-5.
//! - [`benchmark`]: the replicated ISE study comparing the estimators.
//! - [`rng`], [`linalg`]: deterministic random streams and the small
//!   Cholesky kernel behind the simulator.
//!
//! ```
//! use curvedepth::{compute_depths, DepthMethod, FunctionalSample, Grid};
//!
//! let grid = Grid::equidistant(3)?;
//! let rows = vec![vec![0.0; 3], vec![1.0; 3], vec![2.0; 3]];
//! let sample = FunctionalSample::from_rows(grid, rows)?;
//! let depths = compute_depths(&sample, DepthMethod::HalfRegion)?;
//! assert_eq!(depths.values, vec![1.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0]);
//! # Ok::<(), curvedepth::Error>(())
//! ```

pub mod benchmark;
pub mod depth;
pub mod error;
pub mod estimator;
pub mod linalg;
pub mod rng;
pub mod sample;
pub mod simulate;

pub use benchmark::{
    ise, run_benchmark, run_replication, BenchmarkConfig, BenchmarkMethod, ResultRow, ResultTable,
};
pub use depth::{
    band_depth, band_fraction, compute_depths, dominates, functional_majority_depth,
    functional_spatial_depth, h_mode_depth, half_region_depth, in_band, modified_band_depth,
    BandwidthRule, DepthMethod, DepthVector,
};
pub use error::{Error, Result};
pub use estimator::{depth_trimmed_mean, rank_by_depth, untrimmed_mean, TrimSpec};
pub use rng::RngStream;
pub use sample::{Curve, FunctionalSample, Grid, Label};
pub use simulate::{
    generate_model, gp_sample, ContaminationModel, CovarianceKernel, ModelSpec, Simulator,
};
