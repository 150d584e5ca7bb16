//! Mutation-only baselines: the (1+1) EA and randomized local search.

use super::record::{RunOptions, RunRecord};
use crate::bitstring::BitString;
use crate::error::{Error, Result};
use crate::fitness::{onemax, EvalCounter};
use crate::init::StartSpec;
use crate::samplers::{sample_binomial_positive, SubsetSampler};
use crate::scalar::Real;
use rand::Rng;
use rand_distr::{Binomial, Distribution};

/// (1+1) EA: flip each bit independently with probability `1/n`, keep the
/// offspring if it is not worse. One evaluation per iteration, including
/// iterations that flip nothing unless `resample_identical` is on.
pub fn one_plus_one_ea_from<F: Real, R: Rng + ?Sized>(
    mut x: BitString,
    opts: &RunOptions,
    rng: &mut R,
) -> Result<RunRecord<F>> {
    let n = x.len();
    if n == 0 {
        return Err(Error::invalid("n", "length must be positive"));
    }
    let strength = Binomial::new(n as u64, 1.0 / n as f64).map_err(|e| Error::invalid("p", e.to_string()))?;
    let mut subset = SubsetSampler::new(n);
    let mut counter = EvalCounter::with_budget(opts.budget);
    let mut fitness = onemax(&x);
    let start_distance = n - fitness;
    let mut iterations = 0u64;

    while fitness < n {
        let k = if opts.resample_identical {
            sample_binomial_positive(n as u64, 1.0 / n as f64, rng)? as usize
        } else {
            strength.sample(rng) as usize
        };
        if counter.charge().is_err() {
            break;
        }
        iterations += 1;
        let flips = subset.sample(k, rng);
        let gained = flips.iter().filter(|&&i| !x.get(i)).count();
        let value = fitness + 2 * gained - k;
        if value >= fitness {
            x.flip_all(flips);
            fitness = value;
        }
    }

    Ok(finish(iterations, counter.count(), opts, fitness, n, start_distance))
}

/// RLS: flip one uniformly random bit, keep the result if it is not worse.
pub fn rls_from<F: Real, R: Rng + ?Sized>(mut x: BitString, opts: &RunOptions, rng: &mut R) -> Result<RunRecord<F>> {
    let n = x.len();
    if n == 0 {
        return Err(Error::invalid("n", "length must be positive"));
    }
    let mut counter = EvalCounter::with_budget(opts.budget);
    let mut fitness = onemax(&x);
    let start_distance = n - fitness;
    let mut iterations = 0u64;

    while fitness < n {
        if counter.charge().is_err() {
            break;
        }
        iterations += 1;
        let i = rng.random_range(0..n);
        // a 1→0 flip loses fitness and is rejected
        if !x.get(i) {
            x.flip(i);
            fitness += 1;
        }
    }

    Ok(finish(iterations, counter.count(), opts, fitness, n, start_distance))
}

fn finish<F: Real>(
    iterations: u64,
    evaluations: u64,
    opts: &RunOptions,
    fitness: usize,
    n: usize,
    start_distance: usize,
) -> RunRecord<F> {
    RunRecord {
        iterations,
        evaluations: evaluations + opts.count_initial as u64,
        found_optimum: fitness == n,
        final_fitness: fitness,
        start_distance,
        lambda_trace: None,
    }
}

pub fn run_one_plus_one_ea<F: Real, R: Rng + ?Sized>(
    n: usize,
    start: &StartSpec,
    budget: u64,
    rng: &mut R,
) -> Result<RunRecord<F>> {
    if budget == 0 {
        return Err(Error::invalid("budget", "must be at least 1"));
    }
    let x = start.initialize(n, rng)?;
    one_plus_one_ea_from(x, &RunOptions::with_budget(budget), rng)
}

pub fn run_rls<F: Real, R: Rng + ?Sized>(n: usize, start: &StartSpec, budget: u64, rng: &mut R) -> Result<RunRecord<F>> {
    if budget == 0 {
        return Err(Error::invalid("budget", "must be at least 1"));
    }
    let x = start.initialize(n, rng)?;
    rls_from(x, &RunOptions::with_budget(budget), rng)
}
