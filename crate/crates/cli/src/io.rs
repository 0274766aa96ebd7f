//! CSV and JSON readers/writers for samples, depth scores, and result tables.
//!
//! The sample format is a plain CSV with no quoting: the header row lists the
//! grid abscissae (strictly increasing), and each following row is one curve.
//! Rows may carry a trailing `normal`/`outlier` label cell, but either every
//! row has one or none does. Floats are written with the shortest
//! representation that parses back to the same value, so a write/read
//! round-trip is exact.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use curvedepth::{
    Curve, DepthVector, FunctionalSample, Grid, Label, ResultTable,
};
use serde::Serialize;

use crate::error::CliError;

/// Reads a functional sample from a CSV file.
pub fn read_sample(path: &Path) -> Result<FunctionalSample, CliError> {
    let file = File::open(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_sample(BufReader::new(file), path)
}

/// Parses a functional sample from any reader; `path` is used in errors only.
pub fn parse_sample<R: BufRead>(reader: R, path: &Path) -> Result<FunctionalSample, CliError> {
    let parse_err = |line: usize, message: String| CliError::Parse {
        path: path.to_path_buf(),
        line,
        message,
    };
    let mut lines = reader.lines().enumerate();

    let (_, header) = lines.next().ok_or_else(|| {
        parse_err(1, "empty file: expected a header row of grid points".into())
    })?;
    let header = header.map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let points = split_numbers(&header, path, 1)?;
    let grid = Grid::from_points(points).map_err(|e| parse_err(1, e.to_string()))?;
    let t = grid.len();

    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut labels: Vec<Label> = Vec::new();
    let mut has_labels: Option<bool> = None;
    for (index, line) in lines {
        let line_no = index + 1;
        let line = line.map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let cells: Vec<&str> = line.split(',').map(str::trim).collect();
        let labelled = match cells.len() {
            len if len == t => false,
            len if len == t + 1 => true,
            len => {
                return Err(parse_err(
                    line_no,
                    format!("row has {len} cells, expected {t} values (plus an optional label)"),
                ))
            }
        };
        if *has_labels.get_or_insert(labelled) != labelled {
            return Err(parse_err(
                line_no,
                "label column must be present on every row or on none".into(),
            ));
        }
        let mut values = Vec::with_capacity(t);
        for (column, cell) in cells[..t].iter().enumerate() {
            let value: f64 = cell.parse().map_err(|_| {
                parse_err(line_no, format!("column {}: invalid number '{cell}'", column + 1))
            })?;
            if !value.is_finite() {
                return Err(parse_err(
                    line_no,
                    format!("column {}: non-finite value '{cell}'", column + 1),
                ));
            }
            values.push(value);
        }
        if labelled {
            let label = match cells[t] {
                "normal" => Label::Normal,
                "outlier" => Label::Outlier,
                other => {
                    return Err(parse_err(
                        line_no,
                        format!("invalid label '{other}', expected 'normal' or 'outlier'"),
                    ))
                }
            };
            labels.push(label);
        }
        rows.push(values);
    }
    if rows.is_empty() {
        return Err(parse_err(1, "header only: expected at least one curve row".into()));
    }

    let sample = FunctionalSample::from_rows(grid, rows).map_err(CliError::Compute)?;
    if labels.is_empty() {
        Ok(sample)
    } else {
        sample.with_labels(labels).map_err(CliError::Compute)
    }
}

fn split_numbers(line: &str, path: &Path, line_no: usize) -> Result<Vec<f64>, CliError> {
    line.split(',')
        .map(str::trim)
        .enumerate()
        .map(|(column, cell)| {
            cell.parse().map_err(|_| CliError::Parse {
                path: path.to_path_buf(),
                line: line_no,
                message: format!("column {}: invalid number '{cell}'", column + 1),
            })
        })
        .collect()
}

fn push_joined(out: &mut String, values: &[f64]) {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{v}");
    }
}

/// Renders a sample as CSV, labels included when the sample carries them.
pub fn format_sample(sample: &FunctionalSample) -> String {
    let mut out = String::new();
    push_joined(&mut out, sample.grid().points());
    out.push('\n');
    for (i, curve) in sample.curves().iter().enumerate() {
        push_joined(&mut out, curve.values());
        if let Some(labels) = sample.labels() {
            let _ = write!(out, ",{}", labels[i].as_str());
        }
        out.push('\n');
    }
    out
}

/// Renders one curve on its grid as a two-line CSV (header plus values).
pub fn format_curve(grid: &Grid, curve: &Curve) -> String {
    let mut out = String::new();
    push_joined(&mut out, grid.points());
    out.push('\n');
    push_joined(&mut out, curve.values());
    out.push('\n');
    out
}

/// Renders depth scores as `index,depth` rows in input order.
pub fn format_depths(depths: &DepthVector) -> String {
    let mut out = String::from("index,depth\n");
    for (index, value) in depths.values.iter().enumerate() {
        let _ = writeln!(out, "{index},{value}");
    }
    out
}

/// Renders full curves ranked deepest-first: `index,depth,<values...>`.
///
/// Ties rank the earlier input index first, so the output is deterministic.
pub fn format_ranked_curves(sample: &FunctionalSample, depths: &DepthVector) -> String {
    let order = curvedepth::rank_by_depth(&depths.values);
    let mut out = String::from("index,depth");
    push_header_points(&mut out, sample.grid().points());
    out.push('\n');
    for index in order {
        let _ = write!(out, "{index},{}", depths.values[index]);
        for v in sample.curve(index).values() {
            let _ = write!(out, ",{v}");
        }
        out.push('\n');
    }
    out
}

fn push_header_points(out: &mut String, points: &[f64]) {
    for p in points {
        let _ = write!(out, ",{p}");
    }
}

/// Renders a benchmark result table as CSV.
pub fn format_results_csv(table: &ResultTable) -> String {
    let mut out = String::from("method,model,mean_ise,se_ise,S\n");
    for row in &table.rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            row.method.name(),
            row.model.id(),
            row.mean_ise,
            row.se_ise,
            row.replications
        );
    }
    out
}

#[derive(Serialize)]
struct JsonRow<'a> {
    method: &'a str,
    model: u8,
    mean_ise: f64,
    se_ise: f64,
    #[serde(rename = "S")]
    replications: usize,
}

/// Renders a benchmark result table as a JSON array of row objects.
pub fn format_results_json(table: &ResultTable) -> String {
    let rows: Vec<JsonRow> = table
        .rows
        .iter()
        .map(|row| JsonRow {
            method: row.method.name(),
            model: row.model.id(),
            mean_ise: row.mean_ise,
            se_ise: row.se_ise,
            replications: row.replications,
        })
        .collect();
    let mut out = serde_json::to_string_pretty(&rows).expect("result rows serialize");
    out.push('\n');
    out
}

/// Writes `content` to `path`, mapping failures to [`CliError::Io`].
pub fn write_file(path: &Path, content: &str) -> Result<(), CliError> {
    let map = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut file = File::create(path).map_err(map)?;
    file.write_all(content.as_bytes()).map_err(map)?;
    file.flush().map_err(map)
}
