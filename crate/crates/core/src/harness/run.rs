use super::config::{Cell, ExperimentConfig};
use super::stats::{aggregate, AggregateStats};
use crate::algorithms::{RunRecord, Solver};
use crate::error::{Error, Result};
use crate::samplers::{derive_seed, rng_from_seed};
use rayon::prelude::*;

/// One executed trial.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialResult {
    pub cell: u64,
    pub trial: u64,
    pub seed: u64,
    pub record: RunRecord<f64>,
}

/// Runs every trial of every cell and returns them grouped per cell, in
/// grid order. Output does not depend on `config.workers`.
pub fn run_experiment_records(config: &ExperimentConfig) -> Result<Vec<(Cell, Vec<TrialResult>)>> {
    let cells = config.cells()?;
    let solvers = cells
        .iter()
        .map(|c| {
            let alg = c.algorithm.resolve(c.n, c.d_nominal, config.a, config.lambda0)?;
            Solver::new(alg, c.n)
        })
        .collect::<Result<Vec<_>>>()?;
    let jobs: Vec<(usize, u64)> = (0..cells.len())
        .flat_map(|ci| (0..config.trials as u64).map(move |t| (ci, t)))
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::Config(format!("cannot start worker pool: {e}")))?;
    let results: Vec<TrialResult> = pool.install(|| {
        jobs.par_iter()
            .map(|&(ci, trial)| {
                let cell = &cells[ci];
                let seed = derive_seed(config.master_seed, cell.index, trial);
                let mut rng = rng_from_seed(seed);
                let record = solvers[ci].run(&cell.start, &config.run_options(cell.n), &mut rng)?;
                Ok(TrialResult {
                    cell: cell.index,
                    trial,
                    seed,
                    record,
                })
            })
            .collect::<Result<Vec<_>>>()
    })?;

    let mut results = results.into_iter();
    Ok(cells
        .into_iter()
        .map(|cell| {
            let trials = results.by_ref().take(config.trials).collect();
            (cell, trials)
        })
        .collect())
}

/// Runs the sweep and aggregates each cell.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Vec<AggregateStats>> {
    Ok(run_experiment_records(config)?
        .iter()
        .map(|(cell, trials)| aggregate(cell, trials, config.budget(cell.n)))
        .collect())
}
