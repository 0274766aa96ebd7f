//! Depth-trimmed location estimation.
//!
//! The trimmed mean ranks curves by depth, discards the shallowest
//! fraction, and averages what remains pointwise. Ranking breaks depth
//! ties by original sample index, so results are deterministic; retained
//! curves are summed in sample order, which makes the untrimmed case
//! coincide with the plain mean bit-for-bit.

use crate::depth::DepthVector;
use crate::error::{Error, Result};
use crate::sample::{Curve, FunctionalSample};

/// Validated trim fraction in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrimSpec {
    alpha: f64,
}

impl TrimSpec {
    /// Wraps a trim fraction, rejecting values outside `[0, 1)`.
    pub fn new(alpha: f64) -> Result<TrimSpec> {
        if !alpha.is_finite() || !(0.0..1.0).contains(&alpha) {
            return Err(Error::InvalidTrim { alpha });
        }
        Ok(TrimSpec { alpha })
    }

    /// The trim fraction.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Number of curves kept out of `n`: `n - floor(n * alpha)`.
    pub fn retained(&self, n: usize) -> usize {
        n - (n as f64 * self.alpha).floor() as usize
    }
}

impl Default for TrimSpec {
    /// The benchmark default, `alpha = 0.2`.
    fn default() -> Self {
        TrimSpec { alpha: 0.2 }
    }
}

/// Curve indices ordered deepest first; depth ties resolve by ascending
/// original index.
pub fn rank_by_depth(depths: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..depths.len()).collect();
    order.sort_by(|&a, &b| depths[b].total_cmp(&depths[a]).then(a.cmp(&b)));
    order
}

/// Depth-based trimmed mean: averages the `n - floor(n * alpha)` deepest
/// curves pointwise.
pub fn depth_trimmed_mean(
    sample: &FunctionalSample,
    depths: &DepthVector,
    trim: &TrimSpec,
) -> Result<Curve> {
    if depths.len() != sample.len() {
        return Err(Error::DepthLength {
            expected: sample.len(),
            actual: depths.len(),
        });
    }
    let keep = trim.retained(sample.len());
    let mut retained: Vec<usize> = rank_by_depth(&depths.values)[..keep].to_vec();
    retained.sort_unstable();
    Ok(mean_of_rows(sample, &retained))
}

/// Pointwise mean of every curve in the sample.
pub fn untrimmed_mean(sample: &FunctionalSample) -> Curve {
    let all: Vec<usize> = (0..sample.len()).collect();
    mean_of_rows(sample, &all)
}

/// Pointwise mean over the given rows, accumulated in index order.
fn mean_of_rows(sample: &FunctionalSample, rows: &[usize]) -> Curve {
    let t = sample.grid().len();
    let mut acc = vec![0.0; t];
    for &i in rows {
        for (a, v) in acc.iter_mut().zip(sample.curve(i).values()) {
            *a += v;
        }
    }
    let m = rows.len() as f64;
    for a in &mut acc {
        *a /= m;
    }
    Curve::new(acc).expect("mean of finite curves is finite")
}
