//! Optimizers on OneMax: the (1+(λ,λ)) GA under several λ policies, the
//! (1+1) EA and RLS. All are elitist and count offspring evaluations only.

mod mutation_only;
mod ollga;
mod policy;
mod record;

pub use mutation_only::{one_plus_one_ea_from, rls_from, run_one_plus_one_ea, run_rls};
pub use ollga::{ga_iteration, ga_iteration_with_strength, run_ollga, GaStep, Ollga};
pub use policy::{update_lambda_one_fifth, Cap, GaParams, LambdaPolicy, UpperLimit};
pub use record::{RunOptions, RunRecord};

use crate::error::{Error, Result};
use crate::init::StartSpec;
use crate::scalar::Real;
use rand::Rng;

/// A concrete optimizer choice.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Algorithm<F> {
    Ollga(LambdaPolicy<F>),
    OnePlusOneEa,
    Rls,
}

/// An [`Algorithm`] bound to a length `n`, ready to run trials.
#[derive(Clone, Debug)]
pub enum Solver<F: Real> {
    Ollga(Ollga<F>),
    OnePlusOneEa { n: usize },
    Rls { n: usize },
}

impl<F: Real> Solver<F> {
    pub fn new(algorithm: Algorithm<F>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("n", "length must be positive"));
        }
        Ok(match algorithm {
            Algorithm::Ollga(policy) => Solver::Ollga(Ollga::new(n, policy)?),
            Algorithm::OnePlusOneEa => Solver::OnePlusOneEa { n },
            Algorithm::Rls => Solver::Rls { n },
        })
    }

    pub fn n(&self) -> usize {
        match self {
            Solver::Ollga(g) => g.n(),
            Solver::OnePlusOneEa { n } | Solver::Rls { n } => *n,
        }
    }

    pub fn run<R: Rng + ?Sized>(&self, start: &StartSpec, opts: &RunOptions, rng: &mut R) -> Result<RunRecord<F>> {
        let x = start.initialize(self.n(), rng)?;
        match self {
            Solver::Ollga(g) => g.run_from(x, opts, rng),
            Solver::OnePlusOneEa { .. } => one_plus_one_ea_from(x, opts, rng),
            Solver::Rls { .. } => rls_from(x, opts, rng),
        }
    }
}

#[cfg(test)]
mod tests;
