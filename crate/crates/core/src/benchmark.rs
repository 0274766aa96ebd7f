//! Monte Carlo robustness benchmark.
//!
//! For each requested model, `S` independent samples are generated and
//! every requested estimator is applied to the same sample, so method
//! comparisons are paired. The score per replication is the integrated
//! squared error of the estimate against the true location `g(t) = 4t`.
//! Replications run in parallel on deterministic per-replication streams
//! and are aggregated in index order, making results independent of the
//! thread count.

use rayon::prelude::*;

use crate::depth::{compute_depths, DepthMethod};
use crate::error::{Error, Result};
use crate::estimator::{depth_trimmed_mean, untrimmed_mean, TrimSpec};
use crate::rng::RngStream;
use crate::sample::{Curve, Grid};
use crate::simulate::{ContaminationModel, ModelSpec, Simulator};

/// An estimator compared by the benchmark: five depth-trimmed means and
/// the untrimmed mean.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchmarkMethod {
    HalfRegion,
    Majority,
    Band,
    ModifiedBand,
    Spatial,
    Mean,
}

impl BenchmarkMethod {
    /// All methods in report order.
    pub const ALL: [BenchmarkMethod; 6] = [
        BenchmarkMethod::HalfRegion,
        BenchmarkMethod::Majority,
        BenchmarkMethod::Band,
        BenchmarkMethod::ModifiedBand,
        BenchmarkMethod::Spatial,
        BenchmarkMethod::Mean,
    ];

    /// Short name used in result tables.
    pub fn name(&self) -> &'static str {
        match self {
            BenchmarkMethod::HalfRegion => "hrd",
            BenchmarkMethod::Majority => "fmj",
            BenchmarkMethod::Band => "bd",
            BenchmarkMethod::ModifiedBand => "mbd",
            BenchmarkMethod::Spatial => "fsd",
            BenchmarkMethod::Mean => "mean",
        }
    }

    /// Method by its short name.
    pub fn from_name(name: &str) -> Option<BenchmarkMethod> {
        BenchmarkMethod::ALL.iter().copied().find(|m| m.name() == name)
    }

    /// The depth driving the trimmed mean; `None` for the untrimmed mean.
    pub fn depth_method(&self, band_order: usize, mbd_order: usize) -> Option<DepthMethod> {
        match self {
            BenchmarkMethod::HalfRegion => Some(DepthMethod::HalfRegion),
            BenchmarkMethod::Majority => Some(DepthMethod::Majority),
            BenchmarkMethod::Band => Some(DepthMethod::Band { order: band_order }),
            BenchmarkMethod::ModifiedBand => Some(DepthMethod::ModifiedBand { order: mbd_order }),
            BenchmarkMethod::Spatial => Some(DepthMethod::Spatial),
            BenchmarkMethod::Mean => None,
        }
    }
}

/// Full description of one benchmark run.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkConfig {
    /// Seed from which every replication stream is derived.
    pub master_seed: u64,
    /// Replications per model.
    pub replications: usize,
    pub models: Vec<ContaminationModel>,
    pub methods: Vec<BenchmarkMethod>,
    /// Curves per sample.
    pub n: usize,
    /// Grid points per curve.
    pub grid_size: usize,
    /// Contamination probability.
    pub q: f64,
    /// Trim fraction for the depth-trimmed means.
    pub alpha: f64,
    /// Contamination size `K`.
    pub contamination_size: f64,
    /// Peak width `l` for Model 3.
    pub peak_width: f64,
    /// Largest subset size for band depth.
    pub band_order: usize,
    /// Subset size for modified band depth.
    pub mbd_order: usize,
}

impl Default for BenchmarkConfig {
    /// The full study: all models, all methods, `S = 1000`, `n = 50`,
    /// `T = 30`, `q = 0.1`, `alpha = 0.2`, `K = 25`, `J = 3`, `j = 2`.
    fn default() -> Self {
        BenchmarkConfig {
            master_seed: 0,
            replications: 1000,
            models: ContaminationModel::ALL.to_vec(),
            methods: BenchmarkMethod::ALL.to_vec(),
            n: 50,
            grid_size: 30,
            q: 0.1,
            alpha: 0.2,
            contamination_size: 25.0,
            peak_width: 2.0 / 30.0,
            band_order: 3,
            mbd_order: 2,
        }
    }
}

impl BenchmarkConfig {
    /// Checks counts, ranges, and subset orders against the sample size.
    pub fn validate(&self) -> Result<()> {
        if self.replications == 0 {
            return Err(Error::NoReplications);
        }
        if self.methods.is_empty() || self.models.is_empty() {
            return Err(Error::EmptyBenchmark);
        }
        TrimSpec::new(self.alpha)?;
        for order in [self.band_order, self.mbd_order] {
            if order < 2 {
                return Err(Error::OrderTooSmall { order });
            }
            if order > self.n {
                return Err(Error::OrderExceedsSample { order, n: self.n });
            }
        }
        for &model in &self.models {
            self.model_spec(model)?.validate()?;
        }
        Ok(())
    }

    /// The generation parameters for one model under this config.
    pub fn model_spec(&self, model: ContaminationModel) -> Result<ModelSpec> {
        Ok(ModelSpec {
            model,
            n: self.n,
            q: self.q,
            contamination_size: self.contamination_size,
            peak_width: self.peak_width,
            grid: Grid::equidistant(self.grid_size)?,
        })
    }
}

/// Aggregated score of one (method, model) cell.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultRow {
    pub method: BenchmarkMethod,
    pub model: ContaminationModel,
    /// Mean ISE over the replications.
    pub mean_ise: f64,
    /// Standard error of the mean ISE (sample standard deviation divided
    /// by `sqrt(S)`); zero when `S = 1`.
    pub se_ise: f64,
    /// Replications behind this row.
    pub replications: usize,
}

/// All requested cells, methods outermost in config order.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultTable {
    pub rows: Vec<ResultRow>,
}

impl ResultTable {
    /// Row for one (method, model) cell, if requested.
    pub fn get(&self, method: BenchmarkMethod, model: ContaminationModel) -> Option<&ResultRow> {
        self.rows
            .iter()
            .find(|r| r.method == method && r.model == model)
    }
}

/// Integrated squared error of an estimate against the true location
/// `g(t) = 4t`: the grid average of the squared pointwise deviation.
pub fn ise(estimate: &Curve, grid: &Grid) -> Result<f64> {
    if estimate.len() != grid.len() {
        return Err(Error::LengthMismatch {
            expected: grid.len(),
            actual: estimate.len(),
        });
    }
    let sum: f64 = estimate
        .values()
        .iter()
        .zip(grid.points())
        .map(|(v, t)| {
            let d = v - 4.0 * t;
            d * d
        })
        .sum();
    Ok(sum / grid.len() as f64)
}

/// One replication: generates a sample and scores every method on it.
/// Returns `(method, ISE)` pairs in method order.
pub fn run_replication(
    spec: &ModelSpec,
    methods: &[BenchmarkMethod],
    trim: &TrimSpec,
    band_order: usize,
    mbd_order: usize,
    rng: &mut RngStream,
) -> Result<Vec<(BenchmarkMethod, f64)>> {
    let sim = Simulator::new(spec.clone())?;
    let scores = replicate(&sim, methods, trim, band_order, mbd_order, rng)?;
    Ok(methods.iter().copied().zip(scores).collect())
}

fn replicate(
    sim: &Simulator,
    methods: &[BenchmarkMethod],
    trim: &TrimSpec,
    band_order: usize,
    mbd_order: usize,
    rng: &mut RngStream,
) -> Result<Vec<f64>> {
    let sample = sim.generate(rng)?;
    let mut scores = Vec::with_capacity(methods.len());
    for method in methods {
        let estimate = match method.depth_method(band_order, mbd_order) {
            None => untrimmed_mean(&sample),
            Some(depth) => {
                let depths = compute_depths(&sample, depth)?;
                depth_trimmed_mean(&sample, &depths, trim)?
            }
        };
        scores.push(ise(&estimate, sample.grid())?);
    }
    Ok(scores)
}

/// Runs the full study described by `config`.
///
/// The stream for replication `r` of model `m` is seeded by a
/// deterministic hash of `(master_seed, m, r)`, so every cell is
/// reproducible in isolation. Replications execute in parallel; scores
/// land in a per-replication buffer and are aggregated in index order. A
/// failed replication aborts the run and reports its model and index.
pub fn run_benchmark(config: &BenchmarkConfig) -> Result<ResultTable> {
    config.validate()?;
    let trim = TrimSpec::new(config.alpha)?;
    let s = config.replications;
    // scores[model][method][replication]
    let mut scores: Vec<Vec<Vec<f64>>> = Vec::with_capacity(config.models.len());
    for &model in &config.models {
        let sim = Simulator::new(config.model_spec(model)?)?;
        let per_rep: Vec<Vec<f64>> = (0..s)
            .into_par_iter()
            .map(|rep| {
                let mut rng = RngStream::derived(config.master_seed, model.id() as u64, rep as u64);
                replicate(
                    &sim,
                    &config.methods,
                    &trim,
                    config.band_order,
                    config.mbd_order,
                    &mut rng,
                )
                .map_err(|e| Error::Replication {
                    model: model.id(),
                    rep,
                    source: Box::new(e),
                })
            })
            .collect::<Result<_>>()?;
        let mut by_method = vec![Vec::with_capacity(s); config.methods.len()];
        for rep_scores in &per_rep {
            for (m, &v) in rep_scores.iter().enumerate() {
                by_method[m].push(v);
            }
        }
        scores.push(by_method);
    }
    let mut rows = Vec::with_capacity(config.methods.len() * config.models.len());
    for (m, &method) in config.methods.iter().enumerate() {
        for (g, &model) in config.models.iter().enumerate() {
            let (mean_ise, se_ise) = mean_and_se(&scores[g][m]);
            rows.push(ResultRow {
                method,
                model,
                mean_ise,
                se_ise,
                replications: s,
            });
        }
    }
    Ok(ResultTable { rows })
}

/// Mean and standard error of the mean; the standard error is zero for a
/// single observation.
fn mean_and_se(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ise_of_the_truth_is_zero() {
        let grid = Grid::equidistant(30).unwrap();
        let truth = Curve::new(grid.points().iter().map(|t| 4.0 * t).collect()).unwrap();
        assert_eq!(ise(&truth, &grid).unwrap(), 0.0);
    }

    #[test]
    fn constant_offset_gives_its_square() {
        let grid = Grid::equidistant(30).unwrap();
        let est = Curve::new(grid.points().iter().map(|t| 4.0 * t + 0.5).collect()).unwrap();
        assert_eq!(ise(&est, &grid).unwrap(), 0.25);
    }

    #[test]
    fn single_point_deviation_averages_over_the_grid() {
        let grid = Grid::equidistant(30).unwrap();
        let mut values: Vec<f64> = grid.points().iter().map(|t| 4.0 * t).collect();
        values[0] += 1.0;
        let est = Curve::new(values).unwrap();
        assert_eq!(ise(&est, &grid).unwrap(), 1.0 / 30.0);
    }

    #[test]
    fn ise_checks_grid_length() {
        let grid = Grid::equidistant(3).unwrap();
        let est = Curve::new(vec![0.0; 2]).unwrap();
        assert!(matches!(
            ise(&est, &grid),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn zero_trim_reduces_every_method_to_the_mean() {
        let spec = ModelSpec::new(ContaminationModel::Trend);
        let trim = TrimSpec::new(0.0).unwrap();
        let mut rng = RngStream::from_seed(8);
        let scores =
            run_replication(&spec, &BenchmarkMethod::ALL, &trim, 3, 2, &mut rng).unwrap();
        let mean_score = scores
            .iter()
            .find(|(m, _)| *m == BenchmarkMethod::Mean)
            .unwrap()
            .1;
        for (method, score) in scores {
            assert_eq!(score, mean_score, "{method:?}");
        }
    }

    #[test]
    fn full_contamination_dominates_the_untrimmed_mean() {
        // Model 5 with every curve shifted by +-25: the mean's ISE is
        // driven by the K-scale displacement.
        let mut config = BenchmarkConfig {
            replications: 20,
            models: vec![ContaminationModel::Shift],
            methods: vec![BenchmarkMethod::Mean],
            n: 20,
            master_seed: 77,
            ..BenchmarkConfig::default()
        };
        config.q = 1.0;
        let table = run_benchmark(&config).unwrap();
        let row = &table.rows[0];
        assert!(row.mean_ise > 5.0, "mean ISE {}", row.mean_ise);
    }

    #[test]
    fn single_replication_has_zero_standard_error() {
        let config = BenchmarkConfig {
            replications: 1,
            models: vec![ContaminationModel::Clean],
            methods: vec![BenchmarkMethod::Mean],
            ..BenchmarkConfig::default()
        };
        let table = run_benchmark(&config).unwrap();
        assert_eq!(table.rows.len(), 1);
        assert_eq!(table.rows[0].se_ise, 0.0);
        assert!(table.rows[0].mean_ise >= 0.0);
    }

    #[test]
    fn rows_are_method_major_in_config_order() {
        let config = BenchmarkConfig {
            replications: 2,
            models: vec![ContaminationModel::Trend, ContaminationModel::Clean],
            methods: vec![BenchmarkMethod::Mean, BenchmarkMethod::Spatial],
            n: 10,
            grid_size: 5,
            ..BenchmarkConfig::default()
        };
        let table = run_benchmark(&config).unwrap();
        let order: Vec<(&str, u8)> = table
            .rows
            .iter()
            .map(|r| (r.method.name(), r.model.id()))
            .collect();
        assert_eq!(
            order,
            vec![("mean", 1), ("mean", 0), ("fsd", 1), ("fsd", 0)]
        );
    }

    #[test]
    fn benchmark_is_reproducible_for_a_fixed_seed() {
        let config = BenchmarkConfig {
            replications: 5,
            models: vec![ContaminationModel::Peaks],
            methods: vec![BenchmarkMethod::Spatial, BenchmarkMethod::Mean],
            n: 15,
            grid_size: 10,
            master_seed: 4242,
            ..BenchmarkConfig::default()
        };
        let a = run_benchmark(&config).unwrap();
        let b = run_benchmark(&config).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let no_reps = BenchmarkConfig {
            replications: 0,
            ..BenchmarkConfig::default()
        };
        assert!(matches!(run_benchmark(&no_reps), Err(Error::NoReplications)));

        let no_methods = BenchmarkConfig {
            methods: Vec::new(),
            ..BenchmarkConfig::default()
        };
        assert!(matches!(
            run_benchmark(&no_methods),
            Err(Error::EmptyBenchmark)
        ));

        let oversize_band = BenchmarkConfig {
            band_order: 51,
            ..BenchmarkConfig::default()
        };
        assert!(matches!(
            run_benchmark(&oversize_band),
            Err(Error::OrderExceedsSample { order: 51, n: 50 })
        ));

        let full_trim = BenchmarkConfig {
            alpha: 1.0,
            ..BenchmarkConfig::default()
        };
        assert!(matches!(
            run_benchmark(&full_trim),
            Err(Error::InvalidTrim { .. })
        ));
    }

    #[test]
    fn methods_parse_by_short_name() {
        for method in BenchmarkMethod::ALL {
            assert_eq!(BenchmarkMethod::from_name(method.name()), Some(method));
        }
        assert_eq!(BenchmarkMethod::from_name("hmode"), None);
    }
}
