use super::config::Cell;
use super::run::TrialResult;
use serde::{Deserialize, Serialize};

/// Per-cell summary; one CSV row.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AggregateStats {
    pub algorithm: String,
    pub n: usize,
    pub d_mode: String,
    pub d_nominal: f64,
    pub trials: u64,
    /// Trials that hit the budget; each contributes the budget to the mean.
    pub censored: u64,
    pub mean_evals: f64,
    /// Sample standard deviation (divisor `trials − 1`; zero for one trial).
    pub std_evals: f64,
    /// `mean_evals / √(n·d_nominal)`.
    pub mean_norm: f64,
    pub std_norm: f64,
}

/// Summarizes the trials of one cell. Sums are exact integers, so the result
/// does not depend on the order of `trials`.
pub fn aggregate(cell: &Cell, trials: &[TrialResult], budget: u64) -> AggregateStats {
    let mut sum: u128 = 0;
    let mut sum_sq: u128 = 0;
    let mut censored = 0u64;
    for t in trials {
        let value = if t.record.censored() {
            censored += 1;
            budget
        } else {
            t.record.evaluations
        } as u128;
        sum += value;
        sum_sq += value * value;
    }
    let k = trials.len() as u128;
    let (mean, std) = if k == 0 {
        (f64::NAN, f64::NAN)
    } else {
        let mean = sum as f64 / k as f64;
        let std = if k < 2 {
            0.0
        } else {
            // k·Σv² − (Σv)² = k²·(population variance), computed without rounding.
            let spread = k * sum_sq - sum * sum;
            (spread as f64 / (k * (k - 1)) as f64).sqrt()
        };
        (mean, std)
    };
    let scale = (cell.n as f64 * cell.d_nominal).sqrt();
    AggregateStats {
        algorithm: cell.algorithm.to_string(),
        n: cell.n,
        d_mode: cell.start.mode_label().to_string(),
        d_nominal: cell.d_nominal,
        trials: trials.len() as u64,
        censored,
        mean_evals: mean,
        std_evals: std,
        mean_norm: mean / scale,
        std_norm: std / scale,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::RunRecord;
    use crate::harness::AlgorithmSpec;
    use crate::init::StartSpec;

    fn trial(evals: u64, found: bool) -> TrialResult {
        TrialResult {
            cell: 0,
            trial: 0,
            seed: 0,
            record: RunRecord {
                iterations: 0,
                evaluations: evals,
                found_optimum: found,
                final_fitness: 0,
                start_distance: 4,
                lambda_trace: None,
            },
        }
    }

    fn cell() -> Cell {
        Cell {
            index: 0,
            algorithm: AlgorithmSpec::Rls,
            n: 16,
            start: StartSpec::ExactDistance { distance: 4 },
            d_nominal: 4.0,
        }
    }

    #[test]
    fn mean_and_sample_std() {
        let ts: Vec<_> = [2u64, 4, 4, 4, 5, 5, 7, 9].iter().map(|&e| trial(e, true)).collect();
        let s = aggregate(&cell(), &ts, 1000);
        assert_eq!(s.mean_evals, 5.0);
        assert!((s.std_evals - (32.0f64 / 7.0).sqrt()).abs() < 1e-12);
        assert!((s.mean_norm * 8.0 - s.mean_evals).abs() < 1e-12);
        assert_eq!(s.censored, 0);
    }

    #[test]
    fn censored_trials_count_as_budget() {
        let ts = vec![trial(10, true), trial(37, false)];
        let s = aggregate(&cell(), &ts, 100);
        assert_eq!(s.censored, 1);
        assert_eq!(s.mean_evals, 55.0);
    }

    #[test]
    fn single_trial_has_zero_std() {
        let s = aggregate(&cell(), &[trial(12, true)], 100);
        assert_eq!(s.std_evals, 0.0);
        assert_eq!(s.trials, 1);
    }

    #[test]
    fn order_independent() {
        let mut ts: Vec<_> = (0..50u64).map(|i| trial(i * i * 7919 % 1013, true)).collect();
        let a = aggregate(&cell(), &ts, 10_000);
        ts.reverse();
        ts.swap(3, 17);
        assert_eq!(aggregate(&cell(), &ts, 10_000), a);
    }
}
