//! `curvedepth`: depth scores, trimmed means, simulated samples, and the
//! replicated robustness benchmark from the command line.
//!
//! Subcommands:
//!
//! - `depth`: score every curve of a CSV sample by a chosen depth.
//! - `estimate`: depth-trimmed (or plain) pointwise mean of a CSV sample.
//! - `simulate`: draw a labelled sample from one contamination model.
//! - `benchmark`: run the replicated ISE study and emit the result table.
//!
//! Exit codes: `0` success, `1` computation error, `2` usage error, `3` I/O
//! error, `4` malformed input file. Diagnostics go to stderr; results go to
//! stdout (or `--output` where offered).

mod config;
mod error;
mod io;

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use curvedepth::simulate::ContaminationModel;
use curvedepth::{
    compute_depths, depth_trimmed_mean, generate_model, run_benchmark, untrimmed_mean,
    BandwidthRule, Curve, DepthMethod, FunctionalSample, Grid, ModelSpec, RngStream, TrimSpec,
};

use crate::error::CliError;

#[derive(Parser)]
#[command(
    name = "curvedepth",
    version,
    about = "Functional data depth, depth-trimmed means, and a robustness benchmark"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Score every curve of a CSV sample by depth.
    ///
    /// Emits `index,depth` rows in input order, or full curves ranked
    /// deepest-first with `--sorted`.
    Depth {
        /// Sample CSV: header of grid points, one curve per row.
        #[arg(long)]
        input: PathBuf,
        /// Depth measure: hrd, fmj, bd, mbd, fsd, or hmode.
        #[arg(long)]
        method: String,
        /// Largest subset size J for band depth.
        #[arg(long, default_value_t = 3)]
        band_order: usize,
        /// Subset size j for modified band depth.
        #[arg(long, default_value_t = 2)]
        mbd_order: usize,
        /// Fixed kernel bandwidth for hmode (default: the 15% quantile of
        /// pairwise distances).
        #[arg(long)]
        bandwidth: Option<f64>,
        /// Emit `index,depth,<values...>` rows ranked deepest-first.
        #[arg(long)]
        sorted: bool,
    },
    /// Depth-trimmed pointwise mean of a CSV sample.
    ///
    /// Emits a two-line CSV: the grid header and the estimate row.
    Estimate {
        /// Sample CSV: header of grid points, one curve per row.
        #[arg(long)]
        input: PathBuf,
        /// Ranking method: hrd, fmj, bd, mbd, fsd, hmode, or mean (untrimmed).
        #[arg(long)]
        method: String,
        /// Fraction of least-deep curves to discard.
        #[arg(long, default_value_t = 0.2)]
        alpha: f64,
        /// Largest subset size J for band depth.
        #[arg(long, default_value_t = 3)]
        band_order: usize,
        /// Subset size j for modified band depth.
        #[arg(long, default_value_t = 2)]
        mbd_order: usize,
        /// Fixed kernel bandwidth for hmode (default: the 15% quantile of
        /// pairwise distances).
        #[arg(long)]
        bandwidth: Option<f64>,
    },
    /// Draw a labelled sample from one contamination model.
    ///
    /// Emits sample CSV with a trailing normal/outlier label column. The
    /// same seed always produces the same bytes.
    Simulate {
        /// Model id: 0 clean, 1 trend, 2 shape, 3 peaks, 4 partial shift,
        /// 5 shift.
        #[arg(long)]
        model: u8,
        /// Curves per sample.
        #[arg(long, default_value_t = 50)]
        n: usize,
        /// Contamination probability per curve.
        #[arg(long, default_value_t = 0.1)]
        q: f64,
        /// RNG seed.
        #[arg(long)]
        seed: u64,
        /// Grid points per curve.
        #[arg(long, default_value_t = 30)]
        grid_size: usize,
        /// Contamination size K.
        #[arg(long, default_value_t = 25.0)]
        contamination_size: f64,
        /// Peak width l for model 3.
        #[arg(long, default_value_t = 2.0 / 30.0)]
        peak_width: f64,
        /// Write the sample here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the replicated ISE study and emit the result table.
    Benchmark {
        /// JSON configuration; omitted keys default to the full study.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Write the table here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Table format.
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Depth {
            input,
            method,
            band_order,
            mbd_order,
            bandwidth,
            sorted,
        } => {
            let sample = io::read_sample(&input)?;
            let method = parse_depth_method(&method, band_order, mbd_order, bandwidth)?;
            let depths = compute_depths(&sample, method)?;
            let text = if sorted {
                io::format_ranked_curves(&sample, &depths)
            } else {
                io::format_depths(&depths)
            };
            emit(None, &text)
        }
        Command::Estimate {
            input,
            method,
            alpha,
            band_order,
            mbd_order,
            bandwidth,
        } => {
            let sample = io::read_sample(&input)?;
            let estimate = estimate(&sample, &method, alpha, band_order, mbd_order, bandwidth)?;
            emit(None, &io::format_curve(sample.grid(), &estimate))
        }
        Command::Simulate {
            model,
            n,
            q,
            seed,
            grid_size,
            contamination_size,
            peak_width,
            output,
        } => {
            let model =
                ContaminationModel::from_id(model).map_err(|e| CliError::Usage(e.to_string()))?;
            let mut spec = ModelSpec::new(model);
            spec.n = n;
            spec.q = q;
            spec.contamination_size = contamination_size;
            spec.peak_width = peak_width;
            spec.grid =
                Grid::equidistant(grid_size).map_err(|e| CliError::Usage(e.to_string()))?;
            spec.validate().map_err(|e| CliError::Usage(e.to_string()))?;
            let mut rng = RngStream::from_seed(seed);
            let sample = generate_model(&spec, &mut rng)?;
            emit(output.as_deref(), &io::format_sample(&sample))
        }
        Command::Benchmark {
            config,
            output,
            format,
        } => {
            let config = config::load_config(config.as_deref())?;
            let table = run_benchmark(&config)?;
            let text = match format {
                OutputFormat::Csv => io::format_results_csv(&table),
                OutputFormat::Json => io::format_results_json(&table),
            };
            emit(output.as_deref(), &text)
        }
    }
}

/// Resolves a depth method name and its parameter flags.
fn parse_depth_method(
    name: &str,
    band_order: usize,
    mbd_order: usize,
    bandwidth: Option<f64>,
) -> Result<DepthMethod, CliError> {
    if bandwidth.is_some() && name != "hmode" {
        return Err(CliError::Usage(
            "--bandwidth only applies to the hmode method".into(),
        ));
    }
    match name {
        "hrd" => Ok(DepthMethod::HalfRegion),
        "fmj" => Ok(DepthMethod::Majority),
        "bd" => Ok(DepthMethod::Band { order: band_order }),
        "mbd" => Ok(DepthMethod::ModifiedBand { order: mbd_order }),
        "fsd" => Ok(DepthMethod::Spatial),
        "hmode" => Ok(DepthMethod::HMode {
            bandwidth: bandwidth.map_or_else(BandwidthRule::default, BandwidthRule::Fixed),
        }),
        other => Err(CliError::Usage(format!(
            "unknown depth method '{other}', expected hrd|fmj|bd|mbd|fsd|hmode"
        ))),
    }
}

/// Computes the requested location estimate for a parsed sample.
fn estimate(
    sample: &FunctionalSample,
    method: &str,
    alpha: f64,
    band_order: usize,
    mbd_order: usize,
    bandwidth: Option<f64>,
) -> Result<Curve, CliError> {
    if method == "mean" {
        return Ok(untrimmed_mean(sample));
    }
    let method = parse_depth_method(method, band_order, mbd_order, bandwidth).map_err(|e| {
        match e {
            CliError::Usage(_) => CliError::Usage(format!(
                "unknown estimate method '{method}', expected hrd|fmj|bd|mbd|fsd|hmode|mean"
            )),
            other => other,
        }
    })?;
    let trim = TrimSpec::new(alpha).map_err(|e| CliError::Usage(e.to_string()))?;
    let depths = compute_depths(sample, method)?;
    depth_trimmed_mean(sample, &depths, &trim).map_err(CliError::Compute)
}

/// Writes `text` to the given file, or to stdout when `path` is `None`.
fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(path) => io::write_file(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn method_names_map_to_depth_methods() {
        assert_eq!(
            parse_depth_method("hrd", 3, 2, None).unwrap(),
            DepthMethod::HalfRegion
        );
        assert_eq!(
            parse_depth_method("fmj", 3, 2, None).unwrap(),
            DepthMethod::Majority
        );
        assert_eq!(
            parse_depth_method("bd", 4, 2, None).unwrap(),
            DepthMethod::Band { order: 4 }
        );
        assert_eq!(
            parse_depth_method("mbd", 3, 3, None).unwrap(),
            DepthMethod::ModifiedBand { order: 3 }
        );
        assert_eq!(
            parse_depth_method("fsd", 3, 2, None).unwrap(),
            DepthMethod::Spatial
        );
        assert_eq!(
            parse_depth_method("hmode", 3, 2, Some(0.5)).unwrap(),
            DepthMethod::HMode {
                bandwidth: BandwidthRule::Fixed(0.5)
            }
        );
    }

    #[test]
    fn unknown_method_is_a_usage_error() {
        let err = parse_depth_method("tukey", 3, 2, None).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn bandwidth_with_non_hmode_method_is_rejected() {
        let err = parse_depth_method("fsd", 3, 2, Some(0.5)).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("hmode"));
    }

    #[test]
    fn estimate_method_mean_ignores_depth_flags() {
        let grid = Grid::equidistant(2).unwrap();
        let sample =
            FunctionalSample::from_rows(grid, vec![vec![0.0, 0.0], vec![2.0, 4.0]]).unwrap();
        let mean = estimate(&sample, "mean", 0.9, 3, 2, None).unwrap();
        assert_eq!(mean.values(), &[1.0, 2.0]);
    }

    #[test]
    fn estimate_rejects_out_of_range_alpha() {
        let grid = Grid::equidistant(2).unwrap();
        let sample =
            FunctionalSample::from_rows(grid, vec![vec![0.0, 0.0], vec![2.0, 4.0]]).unwrap();
        let err = estimate(&sample, "fsd", 1.0, 3, 2, None).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
