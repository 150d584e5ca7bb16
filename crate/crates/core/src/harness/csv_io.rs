use super::config::Cell;
use super::run::TrialResult;
use super::stats::AggregateStats;
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::path::{Path, PathBuf};

pub const CSV_HEADER: &str = "algorithm,n,d_mode,d_nominal,trials,censored,mean_evals,std_evals,mean_norm,std_norm";

pub const RAW_CSV_HEADER: &str =
    "algorithm,n,d_mode,d_nominal,trial,seed,start_distance,iterations,evaluations,found_optimum";

/// Six significant digits, printed as the shortest string that parses back
/// to the rounded value.
pub fn format_real(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    let rounded: f64 = format!("{v:.5e}").parse().expect("formatted float parses");
    rounded.to_string()
}

fn row_order(a: &AggregateStats, b: &AggregateStats) -> Ordering {
    a.algorithm
        .cmp(&b.algorithm)
        .then(a.n.cmp(&b.n))
        .then(a.d_nominal.total_cmp(&b.d_nominal))
}

/// The CSV document for `stats`, rows sorted by `(algorithm, n, d_nominal)`.
pub fn render_csv(stats: &[AggregateStats]) -> String {
    let mut rows: Vec<&AggregateStats> = stats.iter().collect();
    rows.sort_by(|a, b| row_order(a, b));
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for s in rows {
        let line = [
            s.algorithm.clone(),
            s.n.to_string(),
            s.d_mode.clone(),
            format_real(s.d_nominal),
            s.trials.to_string(),
            s.censored.to_string(),
            format_real(s.mean_evals),
            format_real(s.std_evals),
            format_real(s.mean_norm),
            format_real(s.std_norm),
        ]
        .join(",");
        out.push_str(&line);
        out.push('\n');
    }
    out
}

pub fn emit_csv(stats: &[AggregateStats], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, render_csv(stats)).map_err(|e| Error::io(path, e))
}

/// Per-trial dump: realized start distance, `T_I`, `T_F` and the seed.
pub fn render_raw_csv(cells: &[(Cell, Vec<TrialResult>)]) -> String {
    let mut out = String::from(RAW_CSV_HEADER);
    out.push('\n');
    for (cell, trials) in cells {
        for t in trials {
            let r = &t.record;
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{}\n",
                cell.algorithm,
                cell.n,
                cell.start.mode_label(),
                format_real(cell.d_nominal),
                t.trial,
                t.seed,
                r.start_distance,
                r.iterations,
                r.evaluations,
                r.found_optimum
            ));
        }
    }
    out
}

pub fn emit_raw_csv(cells: &[(Cell, Vec<TrialResult>)], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, render_raw_csv(cells)).map_err(|e| Error::io(path, e))
}

/// Rows of a previously emitted stats CSV.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub path: PathBuf,
    pub rows: Vec<AggregateStats>,
}

pub const NUMERIC_COLUMNS: [&str; 8] =
    ["n", "d_nominal", "trials", "censored", "mean_evals", "std_evals", "mean_norm", "std_norm"];

impl Table {
    /// The value of a numeric column in `row`.
    pub fn value(row: &AggregateStats, column: &str) -> Result<f64> {
        Ok(match column {
            "n" => row.n as f64,
            "d_nominal" => row.d_nominal,
            "trials" => row.trials as f64,
            "censored" => row.censored as f64,
            "mean_evals" => row.mean_evals,
            "std_evals" => row.std_evals,
            "mean_norm" => row.mean_norm,
            "std_norm" => row.std_norm,
            other => {
                return Err(Error::Config(format!(
                    "unknown column {other:?}; numeric columns are {}",
                    NUMERIC_COLUMNS.join(", ")
                )))
            }
        })
    }
}

pub fn load_table(path: impl AsRef<Path>) -> Result<Table> {
    let path = path.as_ref();
    let parse_err = |reason: String| Error::Parse {
        path: path.to_path_buf(),
        reason,
    };
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    let mut reader = csv::Reader::from_reader(file);
    let header = reader.headers().map_err(|e| parse_err(e.to_string()))?;
    let header: Vec<&str> = header.iter().collect();
    if header.join(",") != CSV_HEADER {
        return Err(parse_err(format!("header {:?} does not match {CSV_HEADER:?}", header.join(","))));
    }
    let rows = reader
        .deserialize()
        .collect::<std::result::Result<Vec<AggregateStats>, _>>()
        .map_err(|e| parse_err(e.to_string()))?;
    Ok(Table {
        path: path.to_path_buf(),
        rows,
    })
}
