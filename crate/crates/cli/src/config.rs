//! JSON configuration for the `benchmark` subcommand.
//!
//! Every key is optional; omitted keys fall back to the full-study defaults
//! (`S = 1000`, `n = 50`, `T = 30`, `q = 0.1`, `alpha = 0.2`, `K = 25`, all
//! models, all methods, `band_J = 3`, `mbd_j = 2`, `master_seed = 0`).
//! Unknown keys and wrongly-typed values are usage errors, not silently
//! ignored, so a typo cannot quietly run the wrong study.

use std::fs;
use std::path::Path;

use curvedepth::simulate::ContaminationModel;
use curvedepth::{BenchmarkConfig, BenchmarkMethod};
use serde::Deserialize;

use crate::error::CliError;

/// The raw on-disk shape. Field names match the JSON keys exactly.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub master_seed: Option<u64>,
    #[serde(rename = "S")]
    pub replications: Option<usize>,
    pub n: Option<usize>,
    #[serde(rename = "T")]
    pub grid_size: Option<usize>,
    pub q: Option<f64>,
    pub alpha: Option<f64>,
    #[serde(rename = "K")]
    pub contamination_size: Option<f64>,
    pub models: Option<Vec<u8>>,
    pub methods: Option<Vec<String>>,
    #[serde(rename = "band_J")]
    pub band_order: Option<usize>,
    pub mbd_j: Option<usize>,
}

impl ConfigFile {
    /// Applies this file over the default study configuration.
    pub fn into_benchmark_config(self) -> Result<BenchmarkConfig, CliError> {
        let mut config = BenchmarkConfig::default();
        if let Some(seed) = self.master_seed {
            config.master_seed = seed;
        }
        if let Some(s) = self.replications {
            config.replications = s;
        }
        if let Some(n) = self.n {
            config.n = n;
        }
        if let Some(t) = self.grid_size {
            config.grid_size = t;
        }
        if let Some(q) = self.q {
            config.q = q;
        }
        if let Some(alpha) = self.alpha {
            config.alpha = alpha;
        }
        if let Some(k) = self.contamination_size {
            config.contamination_size = k;
        }
        if let Some(ids) = self.models {
            config.models = ids
                .into_iter()
                .map(|id| {
                    ContaminationModel::from_id(id)
                        .map_err(|e| CliError::Usage(e.to_string()))
                })
                .collect::<Result<_, _>>()?;
        }
        if let Some(names) = self.methods {
            config.methods = names
                .iter()
                .map(|name| {
                    BenchmarkMethod::from_name(name).ok_or_else(|| {
                        CliError::Usage(format!(
                            "unknown method '{name}', expected hrd|fmj|bd|mbd|fsd|mean"
                        ))
                    })
                })
                .collect::<Result<_, _>>()?;
        }
        if let Some(j) = self.band_order {
            config.band_order = j;
        }
        if let Some(j) = self.mbd_j {
            config.mbd_order = j;
        }
        config
            .validate()
            .map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(config)
    }
}

/// Loads the benchmark configuration, or the default study when `path` is
/// `None`.
pub fn load_config(path: Option<&Path>) -> Result<BenchmarkConfig, CliError> {
    let Some(path) = path else {
        return Ok(BenchmarkConfig::default());
    };
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let file: ConfigFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    file.into_benchmark_config()
}
