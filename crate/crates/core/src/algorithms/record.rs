use crate::scalar::Real;
use serde::Serialize;

/// Knobs shared by all engines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    /// Evaluation budget per trial.
    pub budget: u64,
    /// Redraw offspring that would be bit-identical to the parent instead of
    /// evaluating them: the GA draws `ℓ ≥ 1` and crossover offspring that
    /// take at least one bit from the mutation winner, the (1+1) EA flips at
    /// least one bit. Off by default, where every offspring is evaluated.
    pub resample_identical: bool,
    /// One-fifth rule treats only `f(y) > f(x)` as success; `f(y) ≥ f(x)` otherwise.
    pub strict_success: bool,
    /// Add one evaluation for the initial individual.
    pub count_initial: bool,
    /// Keep a geometrically downsampled `(iteration, λ)` trace.
    pub trace_lambda: bool,
}

impl RunOptions {
    pub fn with_budget(budget: u64) -> Self {
        RunOptions {
            budget,
            ..Self::default()
        }
    }

    /// `10⁴·n` evaluations.
    pub fn default_budget(n: usize) -> u64 {
        10_000u64.saturating_mul(n as u64)
    }
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            budget: u64::MAX,
            resample_identical: false,
            strict_success: true,
            count_initial: false,
            trace_lambda: false,
        }
    }
}

/// Outcome of one trial.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunRecord<F> {
    /// `T_I`.
    pub iterations: u64,
    /// `T_F`.
    pub evaluations: u64,
    pub found_optimum: bool,
    pub final_fitness: usize,
    pub start_distance: usize,
    pub lambda_trace: Option<Vec<(u64, F)>>,
}

impl<F: Real> RunRecord<F> {
    /// Budget was hit before the optimum.
    pub fn censored(&self) -> bool {
        !self.found_optimum
    }
}

/// Records `(t, λ)` at `t = 0, 1, 2, 4, 8, …`.
#[derive(Debug, Default)]
pub(crate) struct LambdaTrace<F> {
    points: Option<Vec<(u64, F)>>,
}

impl<F: Real> LambdaTrace<F> {
    pub fn new(enabled: bool) -> Self {
        LambdaTrace {
            points: enabled.then(Vec::new),
        }
    }

    pub fn observe(&mut self, iteration: u64, lambda: F) {
        if let Some(points) = &mut self.points {
            if iteration == 0 || iteration.is_power_of_two() {
                points.push((iteration, lambda));
            }
        }
    }

    pub fn finish(mut self, iteration: u64, lambda: F) -> Option<Vec<(u64, F)>> {
        if let Some(points) = &mut self.points {
            if points.last().map(|p| p.0) != Some(iteration) {
                points.push((iteration, lambda));
            }
        }
        self.points
    }
}
