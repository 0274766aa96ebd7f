//! Discretized functional data: evaluation grids, curves, and samples.
//!
//! A curve is a function observed on a common grid of abscissae, so all
//! depth and estimation routines operate on plain `f64` vectors of equal
//! length. Construction validates shape and finiteness once; downstream
//! code relies on those invariants.

use crate::error::{Error, Result};

/// Strictly increasing, finite evaluation abscissae shared by all curves
/// of a sample.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    points: Vec<f64>,
}

impl Grid {
    /// Equidistant grid `k / size` for `k = 1, ..., size` on `(0, 1]`.
    ///
    /// # Arguments
    ///
    /// * `size` - Number of grid points; must be at least 1.
    pub fn equidistant(size: usize) -> Result<Grid> {
        if size == 0 {
            return Err(Error::EmptyGrid);
        }
        let points = (1..=size).map(|k| k as f64 / size as f64).collect();
        Ok(Grid { points })
    }

    /// Grid from explicit abscissae, which must be finite and strictly
    /// increasing.
    pub fn from_points(points: Vec<f64>) -> Result<Grid> {
        if points.is_empty() {
            return Err(Error::EmptyGrid);
        }
        for (index, &p) in points.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::GridNotFinite { index });
            }
            if index > 0 && p <= points[index - 1] {
                return Err(Error::GridNotIncreasing { index });
            }
        }
        Ok(Grid { points })
    }

    /// Abscissae in increasing order.
    pub fn points(&self) -> &[f64] {
        &self.points
    }

    /// Number of grid points.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// True when the grid holds no points; never the case for a
    /// constructed grid.
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// One function observed on a grid: a non-empty vector of finite values.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    values: Vec<f64>,
}

impl Curve {
    /// Wraps a value vector, rejecting empty input and non-finite entries.
    pub fn new(values: Vec<f64>) -> Result<Curve> {
        if values.is_empty() {
            return Err(Error::EmptyCurve);
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Curve { values })
    }

    /// Observed values, one per grid point.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Number of observed values.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// True when the curve holds no values; never the case for a
    /// constructed curve.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Euclidean norm of the value vector, `sqrt(sum(x_k^2))`.
    pub fn norm(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

/// Ground-truth tag attached to simulated curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    Normal,
    Outlier,
}

impl Label {
    /// Lower-case name used in CSV files.
    pub fn as_str(&self) -> &'static str {
        match self {
            Label::Normal => "normal",
            Label::Outlier => "outlier",
        }
    }
}

/// A set of curves observed on one common grid, optionally labelled.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionalSample {
    grid: Grid,
    curves: Vec<Curve>,
    labels: Option<Vec<Label>>,
}

impl FunctionalSample {
    /// Builds a sample from constructed curves, checking that every curve
    /// matches the grid length.
    pub fn new(grid: Grid, curves: Vec<Curve>) -> Result<FunctionalSample> {
        if curves.is_empty() {
            return Err(Error::EmptySample);
        }
        for (row, curve) in curves.iter().enumerate() {
            if curve.len() != grid.len() {
                return Err(Error::CurveLength {
                    row,
                    expected: grid.len(),
                    actual: curve.len(),
                });
            }
        }
        Ok(FunctionalSample {
            grid,
            curves,
            labels: None,
        })
    }

    /// Builds a sample from raw rows, validating shape and finiteness.
    /// Errors name the offending row.
    pub fn from_rows(grid: Grid, rows: Vec<Vec<f64>>) -> Result<FunctionalSample> {
        if rows.is_empty() {
            return Err(Error::EmptySample);
        }
        let mut curves = Vec::with_capacity(rows.len());
        for (row, values) in rows.into_iter().enumerate() {
            if values.len() != grid.len() {
                return Err(Error::CurveLength {
                    row,
                    expected: grid.len(),
                    actual: values.len(),
                });
            }
            if let Some(index) = values.iter().position(|v| !v.is_finite()) {
                return Err(Error::CurveNonFinite { row, index });
            }
            curves.push(Curve { values });
        }
        Ok(FunctionalSample {
            grid,
            curves,
            labels: None,
        })
    }

    /// Attaches one label per curve.
    pub fn with_labels(mut self, labels: Vec<Label>) -> Result<FunctionalSample> {
        if labels.len() != self.curves.len() {
            return Err(Error::LabelCount {
                count: labels.len(),
                n: self.curves.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Shared evaluation grid.
    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    /// All curves in input order.
    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    /// Curve at `index`; panics when out of range.
    pub fn curve(&self, index: usize) -> &Curve {
        &self.curves[index]
    }

    /// Number of curves.
    pub fn len(&self) -> usize {
        self.curves.len()
    }

    /// True when the sample holds no curves; never the case for a
    /// constructed sample.
    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    /// Labels, when the sample carries them.
    pub fn labels(&self) -> Option<&[Label]> {
        self.labels.as_deref()
    }
}
