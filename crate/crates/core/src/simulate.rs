//! Gaussian process curve generation and contamination models.
//!
//! Normal curves follow the mean `g(t) = 4t` plus a zero-mean Gaussian
//! process; contaminated curves replace the trend, the shape, or add a
//! magnitude-`K` shift over all or part of the domain. Six models (0-5)
//! cover the clean case and five contamination patterns. Generation is
//! fully deterministic given an [`RngStream`].

use crate::error::{Error, Result};
use crate::linalg::{cholesky_factor, lower_triangular_matvec};
use crate::rng::RngStream;
use crate::sample::{Curve, FunctionalSample, Grid, Label};

/// Stationary covariance function of the noise process.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CovarianceKernel {
    /// `exp(-0.45 |s - t|)`: rough paths, used by Models 0-2.
    ExpAbs,
    /// `exp(-(s - t)^2)`: smooth paths, used by Models 3-5.
    SquaredExp,
}

impl CovarianceKernel {
    /// Kernel value at a pair of abscissae; `value(t, t) = 1`.
    pub fn value(&self, s: f64, t: f64) -> f64 {
        match self {
            CovarianceKernel::ExpAbs => (-0.45 * (s - t).abs()).exp(),
            CovarianceKernel::SquaredExp => (-(s - t) * (s - t)).exp(),
        }
    }

    /// Row-major Gram matrix of the kernel on a grid.
    pub fn gram(&self, grid: &Grid) -> Vec<f64> {
        let pts = grid.points();
        let t = pts.len();
        let mut m = vec![0.0; t * t];
        for i in 0..t {
            for j in 0..t {
                m[i * t + j] = self.value(pts[i], pts[j]);
            }
        }
        m
    }
}

/// The six data-generating models.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContaminationModel {
    /// Model 0: no contamination.
    Clean,
    /// Model 1: outliers follow the trend `8t - 2` instead of `4t`.
    Trend,
    /// Model 2: outliers follow the shape `4 e^t` instead of `4t`.
    Shape,
    /// Model 3: outliers gain a `±K` peak over `[T_i, T_i + l]`.
    Peaks,
    /// Model 4: outliers gain a `±K` shift from a random onset onward.
    PartialShift,
    /// Model 5: outliers gain a `±K` shift over the whole domain.
    Shift,
}

impl ContaminationModel {
    /// All models in id order.
    pub const ALL: [ContaminationModel; 6] = [
        ContaminationModel::Clean,
        ContaminationModel::Trend,
        ContaminationModel::Shape,
        ContaminationModel::Peaks,
        ContaminationModel::PartialShift,
        ContaminationModel::Shift,
    ];

    /// Model from its numeric id `0..=5`.
    pub fn from_id(id: u8) -> Result<ContaminationModel> {
        ContaminationModel::ALL
            .get(id as usize)
            .copied()
            .ok_or(Error::UnknownModel { id })
    }

    /// Numeric id `0..=5`.
    pub fn id(&self) -> u8 {
        ContaminationModel::ALL
            .iter()
            .position(|m| m == self)
            .unwrap() as u8
    }

    /// Noise covariance used by this model's curves.
    pub fn kernel(&self) -> CovarianceKernel {
        match self {
            ContaminationModel::Clean | ContaminationModel::Trend | ContaminationModel::Shape => {
                CovarianceKernel::ExpAbs
            }
            _ => CovarianceKernel::SquaredExp,
        }
    }

    fn draws_sign(&self) -> bool {
        matches!(
            self,
            ContaminationModel::Peaks | ContaminationModel::PartialShift | ContaminationModel::Shift
        )
    }
}

/// Parameters of one data-generating model.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelSpec {
    pub model: ContaminationModel,
    /// Curves per sample.
    pub n: usize,
    /// Contamination probability per curve.
    pub q: f64,
    /// Contamination size `K` (Models 3-5).
    pub contamination_size: f64,
    /// Peak width `l` (Model 3).
    pub peak_width: f64,
    pub grid: Grid,
}

impl ModelSpec {
    /// Benchmark defaults: `n = 50`, `q = 0.1`, `K = 25`, `l = 2/30`,
    /// 30 grid points.
    pub fn new(model: ContaminationModel) -> ModelSpec {
        ModelSpec {
            model,
            n: 50,
            q: 0.1,
            contamination_size: 25.0,
            peak_width: 2.0 / 30.0,
            grid: Grid::equidistant(30).expect("nonzero size"),
        }
    }

    /// Checks parameter ranges.
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::EmptySample);
        }
        if !self.q.is_finite() || !(0.0..=1.0).contains(&self.q) {
            return Err(Error::InvalidProbability { value: self.q });
        }
        if !self.peak_width.is_finite() || self.peak_width <= 0.0 || self.peak_width >= 1.0 {
            return Err(Error::InvalidPeakWidth {
                value: self.peak_width,
            });
        }
        if !self.contamination_size.is_finite() {
            return Err(Error::InvalidContaminationSize {
                value: self.contamination_size,
            });
        }
        Ok(())
    }
}

/// One zero-mean Gaussian process path on the grid: `L z` for the
/// Cholesky factor `L` of the kernel Gram matrix and independent standard
/// normals `z`.
///
/// Factors the Gram matrix on every call; use [`Simulator`] to reuse the
/// factor across many samples.
pub fn gp_sample(grid: &Grid, kernel: CovarianceKernel, rng: &mut RngStream) -> Result<Curve> {
    let t = grid.len();
    let l = cholesky_factor(t, &kernel.gram(grid))?;
    let mut z = vec![0.0; t];
    rng.fill_standard_normal(&mut z);
    let mut path = vec![0.0; t];
    lower_triangular_matvec(t, &l, &z, &mut path);
    Curve::new(path)
}

/// Curve generator for one model with the noise Cholesky factor computed
/// once up front.
#[derive(Debug, Clone)]
pub struct Simulator {
    spec: ModelSpec,
    chol: Vec<f64>,
}

impl Simulator {
    /// Validates the spec and factors the kernel Gram matrix.
    pub fn new(spec: ModelSpec) -> Result<Simulator> {
        spec.validate()?;
        let gram = spec.model.kernel().gram(&spec.grid);
        let chol = cholesky_factor(spec.grid.len(), &gram)?;
        Ok(Simulator { spec, chol })
    }

    /// The generating parameters.
    pub fn spec(&self) -> &ModelSpec {
        &self.spec
    }

    /// One labelled sample of `n` curves.
    ///
    /// Draws per curve, in fixed order: the contamination flag `c_i`
    /// (every model, ignored by Model 0), the sign `sigma_i` (Models 3-5,
    /// drawn regardless of `c_i` so streams stay aligned across `q`), the
    /// onset `T_i` (Model 3 on `[0, 1-l)`, Model 4 on `[0, 1)`), then the
    /// grid's worth of standard normals for the noise path.
    pub fn generate(&self, rng: &mut RngStream) -> Result<FunctionalSample> {
        let spec = &self.spec;
        let model = spec.model;
        let pts = spec.grid.points();
        let t = pts.len();
        let k_size = spec.contamination_size;
        let mut rows = Vec::with_capacity(spec.n);
        let mut labels = Vec::with_capacity(spec.n);
        let mut z = vec![0.0; t];
        let mut noise = vec![0.0; t];
        for _ in 0..spec.n {
            let contaminated = rng.bernoulli(spec.q);
            let sign = if model.draws_sign() {
                rng.random_sign()
            } else {
                0.0
            };
            let onset = match model {
                ContaminationModel::Peaks => rng.uniform_range(0.0, 1.0 - spec.peak_width),
                ContaminationModel::PartialShift => rng.uniform_range(0.0, 1.0),
                _ => 0.0,
            };
            rng.fill_standard_normal(&mut z);
            lower_triangular_matvec(t, &self.chol, &z, &mut noise);

            let mut values = Vec::with_capacity(t);
            for (k, &tk) in pts.iter().enumerate() {
                let v = match model {
                    ContaminationModel::Clean => 4.0 * tk + noise[k],
                    ContaminationModel::Trend => {
                        if contaminated {
                            8.0 * tk - 2.0 + noise[k]
                        } else {
                            4.0 * tk + noise[k]
                        }
                    }
                    ContaminationModel::Shape => {
                        if contaminated {
                            4.0 * tk.exp() + noise[k]
                        } else {
                            4.0 * tk + noise[k]
                        }
                    }
                    ContaminationModel::Peaks => {
                        let in_peak = onset <= tk && tk <= onset + spec.peak_width;
                        let bump = if contaminated && in_peak {
                            sign * k_size
                        } else {
                            0.0
                        };
                        4.0 * tk + noise[k] + bump
                    }
                    ContaminationModel::PartialShift => {
                        let bump = if contaminated && tk >= onset {
                            sign * k_size
                        } else {
                            0.0
                        };
                        4.0 * tk + noise[k] + bump
                    }
                    ContaminationModel::Shift => {
                        let bump = if contaminated { sign * k_size } else { 0.0 };
                        4.0 * tk + noise[k] + bump
                    }
                };
                values.push(v);
            }
            rows.push(values);
            let is_outlier = contaminated && model != ContaminationModel::Clean;
            labels.push(if is_outlier {
                Label::Outlier
            } else {
                Label::Normal
            });
        }
        FunctionalSample::from_rows(spec.grid.clone(), rows)?.with_labels(labels)
    }
}

/// One labelled sample from `spec`. Builds a [`Simulator`] internally;
/// callers generating many samples should hold one themselves.
pub fn generate_model(spec: &ModelSpec, rng: &mut RngStream) -> Result<FunctionalSample> {
    Simulator::new(spec.clone())?.generate(rng)
}
