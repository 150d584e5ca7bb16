use super::config::{DMode, ExperimentConfig};
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Ready-made sweeps: normalized runtime against `n` with `D ≈ √n` (`Fig1`)
/// or `D ≈ ln(n+1)` (`Fig2`), and against `D = 2^i` at the largest `n` (`Fig3`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    Fig1,
    Fig2,
    Fig3,
}

pub const DEFAULT_MAX_N: usize = 1 << 16;
const LARGEST_N: usize = 1 << 22;
const SMALLEST_N: usize = 1 << 5;
const PRESET_TRIALS: usize = 100;

fn base_algorithms() -> Vec<String> {
    let mut algs = vec!["sa-log".to_string(), "sa".to_string()];
    algs.extend(["2.1", "2.3", "2.5", "2.7", "2.9"].iter().map(|b| format!("ht:{b}:n/2")));
    algs.push("ea".into());
    algs.push("rls".into());
    algs
}

impl Preset {
    /// The sweep with lengths capped at `max_n`.
    pub fn config(self, max_n: usize, master_seed: u64) -> Result<ExperimentConfig> {
        let top = max_n.min(LARGEST_N);
        if top < SMALLEST_N {
            return Err(Error::Config(format!("max_n must be at least {SMALLEST_N}, got {max_n}")));
        }
        let powers: Vec<usize> = (5..=22).map(|i| 1usize << i).filter(|&n| n <= top).collect();
        Ok(match self {
            Preset::Fig1 => ExperimentConfig::new(base_algorithms(), powers, DMode::Sqrt, vec![], PRESET_TRIALS, master_seed),
            Preset::Fig2 => ExperimentConfig::new(base_algorithms(), powers, DMode::Log, vec![], PRESET_TRIALS, master_seed),
            Preset::Fig3 => {
                let n = *powers.last().expect("non-empty");
                let mut algs = base_algorithms();
                algs.extend(["1.5", "1.7", "1.9"].iter().map(|b| format!("ht:{b}:sqrt-n")));
                let ds: Vec<usize> = (0..).map(|i| 1usize << i).take_while(|&d| d < n).collect();
                ExperimentConfig::new(algs, vec![n], DMode::Bernoulli, ds, PRESET_TRIALS, master_seed)
            }
        })
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Preset::Fig1 => "fig1",
            Preset::Fig2 => "fig2",
            Preset::Fig3 => "fig3",
        })
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fig1" => Ok(Preset::Fig1),
            "fig2" => Ok(Preset::Fig2),
            "fig3" => Ok(Preset::Fig3),
            _ => Err(Error::Config(format!("unknown preset {s:?}; expected fig1, fig2 or fig3"))),
        }
    }
}

/// Looks up a preset by name.
pub fn preset(name: &str, max_n: usize, master_seed: u64) -> Result<ExperimentConfig> {
    name.parse::<Preset>()?.config(max_n, master_seed)
}
