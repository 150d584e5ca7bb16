use super::algo_spec::AlgorithmSpec;
use crate::algorithms::RunOptions;
use crate::error::{Error, Result};
use crate::init::{start_spec_for_figure, FigureMode, StartSpec};
use serde::{Deserialize, Serialize};
use std::path::Path;

/// How starting distances are chosen for each `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DMode {
    /// Exactly `D` for every listed `d_values` entry.
    Exact,
    /// Bits zero with probability `D/n` for every listed `d_values` entry.
    Bernoulli,
    /// Bits zero with probability `1/√n`.
    Sqrt,
    /// Bits zero with probability `ln(n+1)/n`.
    Log,
}

/// A sweep over algorithms × lengths × start distances.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub algorithms: Vec<String>,
    pub n_values: Vec<usize>,
    pub d_mode: DMode,
    #[serde(default)]
    pub d_values: Vec<usize>,
    pub trials: usize,
    pub master_seed: u64,
    #[serde(default = "default_budget_factor")]
    pub budget_factor: f64,
    #[serde(default)]
    pub output_path: Option<String>,
    /// Optional per-trial dump (realized start distance, T_I, T_F).
    #[serde(default)]
    pub raw_output_path: Option<String>,
    #[serde(default = "default_a")]
    pub a: f64,
    #[serde(default = "default_lambda0")]
    pub lambda0: f64,
    #[serde(default = "default_workers")]
    pub workers: usize,
    /// Redraw offspring identical to the parent instead of evaluating them.
    #[serde(default)]
    pub resample_identical: bool,
    #[serde(default = "default_true")]
    pub strict_success: bool,
    #[serde(default)]
    pub count_initial: bool,
}

fn default_budget_factor() -> f64 {
    1e4
}
fn default_a() -> f64 {
    1.2
}
fn default_lambda0() -> f64 {
    2.0
}
fn default_workers() -> usize {
    1
}
fn default_true() -> bool {
    true
}

/// One `(algorithm, n, D)` grid point.
#[derive(Clone, Debug, PartialEq)]
pub struct Cell {
    /// Row-major position in the grid; part of every trial seed.
    pub index: u64,
    pub algorithm: AlgorithmSpec,
    pub n: usize,
    pub start: StartSpec,
    pub d_nominal: f64,
}

impl ExperimentConfig {
    /// A config with the defaults for everything but the grid.
    pub fn new(algorithms: Vec<String>, n_values: Vec<usize>, d_mode: DMode, d_values: Vec<usize>, trials: usize, master_seed: u64) -> Self {
        ExperimentConfig {
            algorithms,
            n_values,
            d_mode,
            d_values,
            trials,
            master_seed,
            budget_factor: default_budget_factor(),
            output_path: None,
            raw_output_path: None,
            a: default_a(),
            lambda0: default_lambda0(),
            workers: default_workers(),
            resample_identical: false,
            strict_success: true,
            count_initial: false,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        serde_json::from_str(&text).map_err(|e| Error::Parse {
            path: path.to_path_buf(),
            reason: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn algorithm_specs(&self) -> Result<Vec<AlgorithmSpec>> {
        self.algorithms.iter().map(|a| a.parse()).collect()
    }

    pub fn validate(&self) -> Result<()> {
        if self.algorithms.is_empty() {
            return Err(Error::Config("no algorithms given".into()));
        }
        self.algorithm_specs()?;
        if self.n_values.is_empty() || self.n_values.contains(&0) {
            return Err(Error::Config("n_values must be a non-empty list of positive lengths".into()));
        }
        if self.trials == 0 {
            return Err(Error::Config("trials must be positive".into()));
        }
        if !(self.budget_factor > 0.0) || !self.budget_factor.is_finite() {
            return Err(Error::Config(format!("budget_factor must be positive, got {}", self.budget_factor)));
        }
        if !(self.a > 1.0) {
            return Err(Error::Config(format!("a must exceed 1, got {}", self.a)));
        }
        if !(self.lambda0 > 0.0) {
            return Err(Error::Config(format!("lambda0 must be positive, got {}", self.lambda0)));
        }
        if self.workers == 0 {
            return Err(Error::Config("workers must be positive".into()));
        }
        match self.d_mode {
            DMode::Exact | DMode::Bernoulli => {
                if self.d_values.is_empty() {
                    return Err(Error::Config(format!("d_mode {:?} needs d_values", self.d_mode)));
                }
                if self.d_values.contains(&0) {
                    return Err(Error::Config("D = 0 is already optimal; nothing to normalize by".into()));
                }
                for &n in &self.n_values {
                    if let Some(d) = self.d_values.iter().find(|&&d| d > n) {
                        return Err(Error::Config(format!("distance {d} exceeds n = {n}")));
                    }
                }
            }
            DMode::Sqrt | DMode::Log => {
                if !self.d_values.is_empty() {
                    return Err(Error::Config(format!("d_mode {:?} derives D from n; drop d_values", self.d_mode)));
                }
            }
        }
        Ok(())
    }

    pub fn budget(&self, n: usize) -> u64 {
        (self.budget_factor * n as f64).ceil().max(1.0) as u64
    }

    pub fn run_options(&self, n: usize) -> RunOptions {
        RunOptions {
            budget: self.budget(n),
            resample_identical: self.resample_identical,
            strict_success: self.strict_success,
            count_initial: self.count_initial,
            trace_lambda: false,
        }
    }

    /// All grid cells in row-major `(algorithm, n, D)` order.
    pub fn cells(&self) -> Result<Vec<Cell>> {
        self.validate()?;
        let specs = self.algorithm_specs()?;
        let per_n = match self.d_mode {
            DMode::Exact | DMode::Bernoulli => self.d_values.len(),
            DMode::Sqrt | DMode::Log => 1,
        };
        let mut cells = Vec::new();
        for (ai, spec) in specs.iter().enumerate() {
            for (ni, &n) in self.n_values.iter().enumerate() {
                for di in 0..per_n {
                    let start = match self.d_mode {
                        DMode::Exact => StartSpec::ExactDistance { distance: self.d_values[di] },
                        DMode::Bernoulli => start_spec_for_figure(FigureMode::FixedN, n, Some(self.d_values[di]))?,
                        DMode::Sqrt => start_spec_for_figure(FigureMode::Sqrt, n, None)?,
                        DMode::Log => start_spec_for_figure(FigureMode::Log, n, None)?,
                    };
                    cells.push(Cell {
                        index: ((ai * self.n_values.len() + ni) * per_n + di) as u64,
                        algorithm: *spec,
                        n,
                        d_nominal: start.nominal_distance(n),
                        start,
                    });
                }
            }
        }
        Ok(cells)
    }
}
