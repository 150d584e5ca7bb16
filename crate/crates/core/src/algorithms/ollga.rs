//! The (1+(λ,λ)) GA.
//!
//! Offspring are never materialized: a mutant is the list of positions it
//! flips relative to the parent `x`, and a crossover child is a subset of
//! the mutation winner's list. Fitness is `f(x)` plus the signed count of
//! flipped zero-bits, so an evaluation costs `O(ℓ)` instead of `O(n)`.

use super::policy::{update_lambda_one_fifth, GaParams, LambdaPolicy};
use super::record::{LambdaTrace, RunOptions, RunRecord};
use crate::bitstring::BitString;
use crate::error::{Error, Result};
use crate::fitness::{onemax, EvalCounter};
use crate::init::StartSpec;
use crate::samplers::{crossover_subset, sample_binomial, sample_binomial_positive, PowerLawDist, SubsetSampler};
use crate::scalar::Real;
use rand::Rng;
use std::sync::Arc;

/// Result of one GA iteration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaStep {
    pub next: BitString,
    /// `f(y) ≥ f(x)`: the crossover winner was accepted.
    pub improved: bool,
    /// `f(y) > f(x)`.
    pub strict: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct StepOutcome {
    pub improved: bool,
    pub strict: bool,
}

/// Reusable scratch buffers for one trial.
#[derive(Debug)]
pub(crate) struct GaWorkspace {
    subset: SubsetSampler,
    winner: Vec<usize>,
    scratch: Vec<usize>,
    child: Vec<usize>,
    best_child: Vec<usize>,
}

#[inline]
fn gain(x: &BitString, flips: &[usize]) -> usize {
    flips.iter().filter(|&&i| !x.get(i)).count()
}

/// Replaces the incumbent on a strictly better value, or on a tie with
/// probability `1/ties` so that every tied candidate wins equally often.
#[inline]
fn reservoir_better<R: Rng + ?Sized>(value: usize, best: &mut Option<usize>, ties: &mut u64, rng: &mut R) -> bool {
    match *best {
        Some(b) if value < b => false,
        Some(b) if value == b => {
            *ties += 1;
            rng.random_range(0..*ties) == 0
        }
        _ => {
            *best = Some(value);
            *ties = 1;
            true
        }
    }
}

impl GaWorkspace {
    pub fn new(n: usize) -> Self {
        GaWorkspace {
            subset: SubsetSampler::new(n),
            winner: Vec::new(),
            scratch: Vec::new(),
            child: Vec::new(),
            best_child: Vec::new(),
        }
    }

    /// One iteration on `x` in place. `fitness` must equal `onemax(x)`.
    #[allow(clippy::too_many_arguments)]
    pub fn step<R: Rng + ?Sized>(
        &mut self,
        x: &mut BitString,
        fitness: &mut usize,
        params: GaParams,
        forced_ell: Option<usize>,
        resample_identical: bool,
        rng: &mut R,
        counter: &mut EvalCounter,
    ) -> Result<StepOutcome> {
        let n = x.len();
        debug_assert_eq!(self.subset.universe(), n);
        let f = *fitness;
        let ell = match forced_ell {
            Some(l) if l > n => {
                return Err(Error::invalid("ell", format!("cannot flip {l} of {n} bits")));
            }
            Some(l) => l,
            None if resample_identical => sample_binomial_positive(n as u64, params.p, rng)? as usize,
            None => sample_binomial(n as u64, params.p, rng)? as usize,
        };

        // Mutation phase: all mutants flip the same number of bits.
        let mut best = None;
        let mut ties = 0u64;
        for _ in 0..params.offspring {
            let flips = self.subset.sample(ell, rng);
            counter.charge()?;
            let value = f + 2 * gain(x, flips) - ell;
            if reservoir_better(value, &mut best, &mut ties, rng) {
                self.winner.clear();
                self.winner.extend_from_slice(flips);
            }
        }

        // Crossover phase between x and the mutation winner.
        self.scratch.clear();
        self.scratch.extend_from_slice(&self.winner);
        let mut best = None;
        let mut ties = 0u64;
        for _ in 0..params.offspring {
            crossover_subset(&mut self.scratch, params.c, resample_identical, rng, &mut self.child)?;
            counter.charge()?;
            let value = f + 2 * gain(x, &self.child) - self.child.len();
            if reservoir_better(value, &mut best, &mut ties, rng) {
                std::mem::swap(&mut self.best_child, &mut self.child);
            }
        }
        let y_fitness = best.expect("at least one offspring");

        let improved = y_fitness >= f;
        if improved {
            x.flip_all(&self.best_child);
            *fitness = y_fitness;
        }
        Ok(StepOutcome {
            improved,
            strict: y_fitness > f,
        })
    }
}

/// One full iteration with the standard parameterization `p = λ/n`, `c = 1/λ`.
///
/// Consumes exactly `2·max(1, round(λ))` evaluations.
pub fn ga_iteration<F: Real, R: Rng + ?Sized>(
    x: &BitString,
    lambda: F,
    rng: &mut R,
    counter: &mut EvalCounter,
) -> Result<GaStep> {
    ga_iteration_with_strength(x, lambda, None, rng, counter)
}

/// As [`ga_iteration`], optionally forcing the mutation strength `ℓ`.
pub fn ga_iteration_with_strength<F: Real, R: Rng + ?Sized>(
    x: &BitString,
    lambda: F,
    ell: Option<usize>,
    rng: &mut R,
    counter: &mut EvalCounter,
) -> Result<GaStep> {
    if !(lambda > F::zero()) {
        return Err(Error::invalid("lambda", format!("{lambda} must be positive")));
    }
    let mut next = x.clone();
    let mut fitness = onemax(x);
    let mut ws = GaWorkspace::new(x.len());
    let params = GaParams::standard(lambda, x.len());
    let out = ws.step(&mut next, &mut fitness, params, ell, false, rng, counter)?;
    Ok(GaStep {
        next,
        improved: out.improved,
        strict: out.strict,
    })
}

/// A (1+(λ,λ)) GA prepared for a fixed length `n`.
///
/// Preparing builds the power-law table once; the instance is immutable and
/// can run many trials, including concurrently.
#[derive(Clone, Debug)]
pub struct Ollga<F: Real> {
    n: usize,
    policy: LambdaPolicy<F>,
    power_law: Option<Arc<PowerLawDist<F>>>,
    cap: F,
}

impl<F: Real> Ollga<F> {
    pub fn new(n: usize, policy: LambdaPolicy<F>) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("n", "length must be positive"));
        }
        policy.validate(n)?;
        let (power_law, cap) = match policy {
            LambdaPolicy::HeavyTailed { beta, u } => {
                (Some(Arc::new(PowerLawDist::new(beta, u.resolve(n))?)), F::infinity())
            }
            LambdaPolicy::SelfAdjusting { cap, .. } => (None, cap.resolve(n)),
            _ => (None, F::infinity()),
        };
        Ok(Ollga {
            n,
            policy,
            power_law,
            cap,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn policy(&self) -> &LambdaPolicy<F> {
        &self.policy
    }

    /// Runs from a given start until the optimum or the budget.
    pub fn run_from<R: Rng + ?Sized>(&self, mut x: BitString, opts: &RunOptions, rng: &mut R) -> Result<RunRecord<F>> {
        if x.len() != self.n {
            return Err(Error::LengthMismatch {
                left: x.len(),
                right: self.n,
            });
        }
        let n = self.n;
        let mut fitness = onemax(&x);
        let start_distance = n - fitness;
        let mut counter = EvalCounter::with_budget(opts.budget);
        let mut ws = GaWorkspace::new(n);
        let mut lambda = match self.policy {
            LambdaPolicy::SelfAdjusting { lambda0, .. } => lambda0.max(F::one()).min(self.cap),
            LambdaPolicy::Static { lambda } => lambda,
            _ => F::one(),
        };
        let mut trace = LambdaTrace::new(opts.trace_lambda);
        let mut iterations = 0u64;
        let mut last = lambda;

        while fitness < n {
            let current = match self.policy {
                LambdaPolicy::Static { .. } | LambdaPolicy::SelfAdjusting { .. } => lambda,
                LambdaPolicy::FitnessDependent => (F::of(n) / F::of(n - fitness)).sqrt(),
                LambdaPolicy::HeavyTailed { .. } => {
                    F::of(self.power_law.as_ref().expect("prepared").sample(rng))
                }
            };
            trace.observe(iterations, current);
            let params = GaParams::standard(current, n);
            let out = match ws.step(&mut x, &mut fitness, params, None, opts.resample_identical, rng, &mut counter) {
                Ok(out) => out,
                Err(Error::BudgetExhausted { .. }) => break,
                Err(e) => return Err(e),
            };
            iterations += 1;
            if let LambdaPolicy::SelfAdjusting { a, .. } = self.policy {
                let success = if opts.strict_success { out.strict } else { out.improved };
                lambda = update_lambda_one_fifth(lambda, success, a, self.cap);
            }
            last = current;
        }

        Ok(RunRecord {
            iterations,
            evaluations: counter.count() + opts.count_initial as u64,
            found_optimum: fitness == n,
            final_fitness: fitness,
            start_distance,
            lambda_trace: trace.finish(iterations, last),
        })
    }

    pub fn run<R: Rng + ?Sized>(&self, start: &StartSpec, opts: &RunOptions, rng: &mut R) -> Result<RunRecord<F>> {
        let x = start.initialize(self.n, rng)?;
        self.run_from(x, opts, rng)
    }
}

/// Runs the GA with `policy` from `start` until the optimum or `budget` evaluations.
pub fn run_ollga<F: Real, R: Rng + ?Sized>(
    n: usize,
    start: &StartSpec,
    policy: LambdaPolicy<F>,
    budget: u64,
    rng: &mut R,
) -> Result<RunRecord<F>> {
    if budget == 0 {
        return Err(Error::invalid("budget", "must be at least 1"));
    }
    Ollga::new(n, policy)?.run(start, &RunOptions::with_budget(budget), rng)
}
