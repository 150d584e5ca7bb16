use crate::error::{Error, Result};
use crate::scalar::Real;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Upper clamp of the self-adjusting λ.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cap<F> {
    /// `λ ∈ [1, n]`.
    Uncapped,
    /// `λ ∈ [1, 2·ln(n+1)]`.
    LogCapped,
    Fixed(F),
}

impl<F: Real> Cap<F> {
    pub fn resolve(&self, n: usize) -> F {
        match *self {
            Cap::Uncapped => F::of(n),
            Cap::LogCapped => F::of(2) * (F::of(n) + F::one()).ln(),
            Cap::Fixed(c) => c,
        }
    }
}

/// Upper limit `u` of the heavy-tailed λ distribution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UpperLimit {
    Literal(u64),
    /// `⌊√n⌋`.
    SqrtN,
    /// `⌊n/2⌋`.
    HalfN,
}

impl UpperLimit {
    pub fn resolve(&self, n: usize) -> u64 {
        let u = match *self {
            UpperLimit::Literal(u) => u,
            UpperLimit::SqrtN => (n as f64).sqrt().floor() as u64,
            UpperLimit::HalfN => (n / 2) as u64,
        };
        u.max(1)
    }
}

impl fmt::Display for UpperLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UpperLimit::Literal(u) => write!(f, "{u}"),
            UpperLimit::SqrtN => f.write_str("sqrt-n"),
            UpperLimit::HalfN => f.write_str("n/2"),
        }
    }
}

impl std::str::FromStr for UpperLimit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sqrt-n" => Ok(UpperLimit::SqrtN),
            "n/2" => Ok(UpperLimit::HalfN),
            lit => lit
                .parse::<u64>()
                .ok()
                .filter(|&u| u >= 1)
                .map(UpperLimit::Literal)
                .ok_or_else(|| Error::invalid("u", format!("expected a positive integer, `sqrt-n` or `n/2`, got {lit:?}"))),
        }
    }
}

/// How the (1+(λ,λ)) GA chooses λ in each iteration.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LambdaPolicy<F> {
    Static { lambda: F },
    /// `λ = √(n/d)` for the current distance `d`.
    FitnessDependent,
    /// One-fifth rule: `λ·A` after a failure, `λ/A⁴` after a success.
    SelfAdjusting { a: F, lambda0: F, cap: Cap<F> },
    /// `λ` redrawn each iteration from the power law on `[1..u]`.
    HeavyTailed { beta: F, u: UpperLimit },
}

impl<F: Real> LambdaPolicy<F> {
    /// Self-adjusting with `A = 1.2` and `λ₀ = 2`.
    pub fn self_adjusting(cap: Cap<F>) -> Self {
        LambdaPolicy::SelfAdjusting {
            a: F::of(1.2),
            lambda0: F::of(2),
            cap,
        }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        match *self {
            LambdaPolicy::Static { lambda } if !(lambda > F::zero()) || !lambda.is_finite() => {
                Err(Error::invalid("lambda", format!("{lambda} must be positive")))
            }
            LambdaPolicy::SelfAdjusting { a, lambda0, cap } => {
                if !(a > F::one()) || !a.is_finite() {
                    return Err(Error::invalid("A", format!("{a} must exceed 1")));
                }
                if !(lambda0 > F::zero()) || !lambda0.is_finite() {
                    return Err(Error::invalid("lambda0", format!("{lambda0} must be positive")));
                }
                let c = cap.resolve(n);
                if !(c >= F::one()) {
                    return Err(Error::invalid("cap", format!("{c} is below 1")));
                }
                Ok(())
            }
            LambdaPolicy::HeavyTailed { beta, .. } if !(beta > F::zero()) || !beta.is_finite() => {
                Err(Error::invalid("beta", format!("{beta} must be positive")))
            }
            _ => Ok(()),
        }
    }
}

/// One-fifth success rule. Divides by `A⁴` on a success, multiplies by `A`
/// otherwise, and clamps to `[1, cap]`.
pub fn update_lambda_one_fifth<F: Real>(lambda: F, success: bool, a: F, cap: F) -> F {
    let next = if success { lambda / a.powi(4) } else { lambda * a };
    next.max(F::one()).min(cap)
}

/// Mutation rate, crossover bias and per-phase offspring count derived from λ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GaParams {
    pub p: f64,
    pub c: f64,
    pub offspring: usize,
}

impl GaParams {
    /// `p = λ/n`, `c = 1/λ`, offspring `= max(1, round(λ))`; probabilities clamped to `[0, 1]`.
    pub fn standard<F: Real>(lambda: F, n: usize) -> Self {
        let l = lambda.as_f64();
        GaParams {
            p: (l / n as f64).clamp(0.0, 1.0),
            c: (1.0 / l).clamp(0.0, 1.0),
            offspring: (l.round() as usize).max(1),
        }
    }
}
