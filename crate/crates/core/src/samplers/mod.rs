//! Randomness primitives: seeding, binomial strengths, power-law λ,
//! uniform bit subsets and biased crossover.

mod binomial;
mod bits;
mod power_law;
mod rng;

pub use binomial::{sample_binomial, sample_binomial_positive};
pub use bits::{biased_crossover, crossover_subset, flip_random_bits, SubsetSampler};
pub use power_law::PowerLawDist;
pub use rng::{derive_seed, mix, rng_from_seed, splitmix64, trial_rng, TrialRng};
