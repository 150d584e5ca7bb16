//! Starting individuals at a prescribed distance from the optimum.

use crate::bitstring::BitString;
use crate::error::{Error, Result};
use crate::samplers::{sample_binomial, SubsetSampler};
use rand::Rng;
use serde::{Deserialize, Serialize};

/// How the initial individual is drawn.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum StartSpec {
    /// Exactly `distance` zero-bits at uniformly random positions.
    ExactDistance { distance: usize },
    /// Every bit independently zero with probability `q`.
    Bernoulli { q: f64 },
}

impl StartSpec {
    pub fn validate(&self, n: usize) -> Result<()> {
        match *self {
            StartSpec::ExactDistance { distance } if distance > n => Err(Error::invalid(
                "D",
                format!("distance {distance} exceeds length {n}"),
            )),
            StartSpec::Bernoulli { q } if !(0.0..=1.0).contains(&q) => {
                Err(Error::invalid("q", format!("{q} is not a probability")))
            }
            _ => Ok(()),
        }
    }

    pub fn initialize<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Result<BitString> {
        match *self {
            StartSpec::ExactDistance { distance } => init_exact_distance(n, distance, rng),
            StartSpec::Bernoulli { q } => init_bernoulli(n, q, rng),
        }
    }

    /// The distance used on the normalization axis: `D` itself, or `n·q`.
    pub fn nominal_distance(&self, n: usize) -> f64 {
        match *self {
            StartSpec::ExactDistance { distance } => distance as f64,
            StartSpec::Bernoulli { q } => n as f64 * q,
        }
    }

    pub fn mode_label(&self) -> &'static str {
        match self {
            StartSpec::ExactDistance { .. } => "exact",
            StartSpec::Bernoulli { .. } => "bernoulli",
        }
    }
}

pub fn init_exact_distance<R: Rng + ?Sized>(n: usize, distance: usize, rng: &mut R) -> Result<BitString> {
    StartSpec::ExactDistance { distance }.validate(n)?;
    let mut x = BitString::ones(n);
    let mut sampler = SubsetSampler::new(n);
    x.flip_all(sampler.sample(distance, rng));
    Ok(x)
}

/// Bits are independently zero with probability `q`.
///
/// Drawn as `D ~ Bin(n, q)` followed by a uniform `D`-subset, which has the
/// same law as `n` independent coin flips.
pub fn init_bernoulli<R: Rng + ?Sized>(n: usize, q: f64, rng: &mut R) -> Result<BitString> {
    StartSpec::Bernoulli { q }.validate(n)?;
    let distance = sample_binomial(n as u64, q, rng)? as usize;
    init_exact_distance(n, distance, rng)
}

/// Initialization protocols of the three reference experiments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FigureMode {
    /// Expected distance `√n`.
    Sqrt,
    /// Expected distance `ln(n+1)`.
    Log,
    /// Expected distance `D` at a fixed length.
    FixedN,
}

pub fn start_spec_for_figure(figure: FigureMode, n: usize, distance: Option<usize>) -> Result<StartSpec> {
    if n == 0 {
        return Err(Error::invalid("n", "length must be positive"));
    }
    let nf = n as f64;
    let q = match figure {
        FigureMode::Sqrt => 1.0 / nf.sqrt(),
        FigureMode::Log => (nf + 1.0).ln() / nf,
        FigureMode::FixedN => {
            let d = distance.ok_or_else(|| Error::invalid("D", "required for the fixed-n protocol"))?;
            if d > n {
                return Err(Error::invalid("D", format!("{d} exceeds length {n}")));
            }
            d as f64 / nf
        }
    };
    Ok(StartSpec::Bernoulli { q: q.min(1.0) })
}
