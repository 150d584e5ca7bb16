//! Closed-form runtime predictions and bounds.
//!
//! Asymptotic expressions are evaluated with implicit constant 1 and are
//! meant for shape comparisons only. Logarithms are natural; inside
//! big-O expressions a logarithm is floored at 1 (so `O(log D)` at `D = 1`
//! stays positive), while the explicit formulas for the optimal static λ
//! and the black-box bound use the plain logarithm.

use crate::error::{Error, Result};
use crate::scalar::Real;
use serde::Serialize;
use std::fmt;

/// Which closed form produced a [`Prediction`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expression {
    /// `(n/λ)·ln(n/λ²) + Dλ`.
    StaticLambda,
    /// `√(nD)`.
    FitnessDependent,
    /// `√(nD)`.
    SelfAdjusting,
    HeavyTailed(HeavyTailedRow),
    /// `e·n·H_D` (fitness-level sum for the (1+1) EA).
    OnePlusOneEa,
    /// `n·H_D` (exact expectation of RLS).
    Rls,
    /// `D·ln(n/D)/ln n`.
    BlackBoxLowerBound,
}

/// Rows of the heavy-tailed runtime table, split by the choice of `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HeavyTailedRow {
    BelowOneSqrtND,
    OneSqrtND,
    OneToTwoSqrtND,
    TwoSqrtND,
    BelowOneSqrtN,
    OneSqrtN,
    OneToTwoSqrtN,
    /// `β = 2` with any `u ≥ √n`: `√(nD)·ln u`.
    TwoLogU,
    TwoToThree,
    Three,
    AboveThree,
}

/// A constant-free predicted number of evaluations.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Prediction<F> {
    pub expression: Expression,
    pub value: F,
    pub n: usize,
    pub distance: usize,
}

impl Expression {
    /// The constant-free formula, for display.
    pub fn formula(&self) -> &'static str {
        use HeavyTailedRow::*;
        match self {
            Expression::StaticLambda => "(n/λ)·ln(n/λ²) + Dλ",
            Expression::FitnessDependent | Expression::SelfAdjusting => "√(nD)",
            Expression::HeavyTailed(row) => match row {
                BelowOneSqrtND => "√(nD)·(n/D)^((1−β)/2)",
                OneSqrtND | TwoSqrtND => "√(nD)·ln(n/D)",
                OneToTwoSqrtND => "√(nD)",
                BelowOneSqrtN => "√(nD)·√(D^β·n^(1−β))",
                OneSqrtN => "√n·D·ln n",
                OneToTwoSqrtN => "√(nD)·D^((2−β)/2)",
                TwoLogU => "√(nD)·ln u",
                TwoToThree => "√(nD)·(n/D)^((β−2)/2)",
                Three => "n·ln D/ln n",
                AboveThree => "n·ln D",
            },
            Expression::OnePlusOneEa => "e·n·H_D",
            Expression::Rls => "n·H_D",
            Expression::BlackBoxLowerBound => "D·ln(n/D)/ln n",
        }
    }
}

/// Upper limit `u` of the power law as seen by the predictions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerLawLimit {
    /// `u = √n`.
    SqrtN,
    /// `u = √(n/d)`, evaluated at `d = D`.
    SqrtNOverD,
    Value(u64),
}

impl fmt::Display for PowerLawLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PowerLawLimit::SqrtN => f.write_str("sqrt(n)"),
            PowerLawLimit::SqrtNOverD => f.write_str("sqrt(n/D)"),
            PowerLawLimit::Value(u) => write!(f, "{u}"),
        }
    }
}

/// What to predict.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Target<F> {
    Static { lambda: F },
    FitnessDependent,
    SelfAdjusting,
    HeavyTailed { beta: F, u: PowerLawLimit },
    OnePlusOneEa,
    Rls,
    BlackBox,
}

/// `ln x` floored at 1.
fn log1<F: Real>(x: F) -> F {
    x.ln().max(F::one())
}

fn harmonic<F: Real>(k: usize) -> F {
    (1..=k).rev().fold(F::zero(), |acc, i| acc + F::of(i).recip())
}

/// `min(1, dλ²/n)`: the progress probability of one GA iteration up to a constant factor.
pub fn progress_bound<F: Real>(d: usize, lambda: F, n: usize) -> Result<F> {
    if d == 0 || d > n {
        return Err(Error::invalid("d", format!("distance must lie in [1, {n}], got {d}")));
    }
    if !(lambda >= F::one()) {
        return Err(Error::invalid("lambda", format!("{lambda} is below 1")));
    }
    Ok((F::of(d) * lambda * lambda / F::of(n)).min(F::one()))
}

/// `λp/(1+λp)`, a lower bound on `1 − (1−p)^λ`.
pub fn bernoulli_bound<F: Real>(p: F, lambda: F) -> Result<F> {
    if !(p >= F::zero() && p <= F::one()) {
        return Err(Error::invalid("p", format!("{p} is not a probability")));
    }
    if !(lambda > F::zero()) {
        return Err(Error::invalid("lambda", format!("{lambda} must be positive")));
    }
    let lp = lambda * p;
    Ok(lp / (F::one() + lp))
}

/// `√(n·ln D / D)`, the static λ balancing both terms of the static runtime.
pub fn optimal_static_lambda<F: Real>(n: usize, distance: usize) -> Result<F> {
    if distance < 2 {
        return Err(Error::invalid("D", format!("needs D >= 2 so that ln D > 0, got {distance}")));
    }
    let d = F::of(distance);
    Ok((F::of(n) * d.ln() / d).sqrt())
}

/// `D·ln(n/D)/ln n`, valid for `1 ≤ D ≤ n/2`.
pub fn blackbox_lower_bound<F: Real>(n: usize, distance: usize) -> Result<F> {
    if distance == 0 || 2 * distance > n {
        return Err(Error::invalid("D", format!("bound holds for 1 <= D <= n/2, got D={distance}, n={n}")));
    }
    let (nf, d) = (F::of(n), F::of(distance));
    Ok(d * (nf / d).ln() / nf.ln())
}

pub fn predicted_runtime<F: Real>(target: Target<F>, n: usize, distance: usize) -> Result<Prediction<F>> {
    if distance == 0 {
        return Err(Error::invalid("D", "start is already optimal; the runtime is 0"));
    }
    if n < 2 || distance > n {
        return Err(Error::invalid("n", format!("need n >= 2 and D <= n, got n={n}, D={distance}")));
    }
    let nf = F::of(n);
    let d = F::of(distance);
    let root = (nf * d).sqrt();
    let (expression, value) = match target {
        Target::Static { lambda } => {
            if !(lambda > F::zero()) {
                return Err(Error::invalid("lambda", format!("{lambda} must be positive")));
            }
            (Expression::StaticLambda, nf / lambda * log1(nf / (lambda * lambda)) + d * lambda)
        }
        Target::FitnessDependent => (Expression::FitnessDependent, root),
        Target::SelfAdjusting => (Expression::SelfAdjusting, root),
        Target::HeavyTailed { beta, u } => {
            let (row, v) = heavy_tailed(beta, u, n, distance)?;
            (Expression::HeavyTailed(row), v)
        }
        Target::OnePlusOneEa => (Expression::OnePlusOneEa, F::E() * nf * harmonic::<F>(distance)),
        Target::Rls => (Expression::Rls, nf * harmonic::<F>(distance)),
        Target::BlackBox => {
            return Ok(Prediction {
                expression: Expression::BlackBoxLowerBound,
                value: blackbox_lower_bound(n, distance)?,
                n,
                distance,
            })
        }
    };
    Ok(Prediction {
        expression,
        value,
        n,
        distance,
    })
}

fn heavy_tailed<F: Real>(beta: F, u: PowerLawLimit, n: usize, distance: usize) -> Result<(HeavyTailedRow, F)> {
    use HeavyTailedRow::*;
    if !(beta > F::zero()) || !beta.is_finite() {
        return Err(Error::invalid("beta", format!("{beta} must be positive")));
    }
    let nf = F::of(n);
    let d = F::of(distance);
    let root = (nf * d).sqrt();
    let (one, two, three) = (F::one(), F::of(2), F::of(3));
    let half = F::of(0.5);

    if beta > two {
        let ok = match u {
            PowerLawLimit::SqrtN | PowerLawLimit::SqrtNOverD => true,
            PowerLawLimit::Value(v) => F::of(v) >= nf.sqrt().floor(),
        };
        if !ok {
            return Err(Error::invalid("u", format!("for beta > 2 the table needs u >= sqrt(n) or u = sqrt(n/D), got {u}")));
        }
        return Ok(if beta < three {
            (TwoToThree, root * (nf / d).powf((beta - two) * half))
        } else if beta == three {
            (Three, nf * log1(d) / nf.ln())
        } else {
            (AboveThree, nf * log1(d))
        });
    }

    let sqrt_n = nf.sqrt().floor();
    let column = match u {
        PowerLawLimit::SqrtNOverD => PowerLawLimit::SqrtNOverD,
        PowerLawLimit::Value(v) if beta == two && F::of(v) >= sqrt_n => {
            return Ok((TwoLogU, root * log1(F::of(v))));
        }
        PowerLawLimit::Value(v) if F::of(v) == sqrt_n => PowerLawLimit::SqrtN,
        PowerLawLimit::SqrtN => PowerLawLimit::SqrtN,
        PowerLawLimit::Value(v) => {
            return Err(Error::invalid(
                "u",
                format!("for beta <= 2 the table only covers u = sqrt(n) or u = sqrt(n/D) (and u >= sqrt(n) at beta = 2), got {v}"),
            ))
        }
    };

    Ok(match column {
        PowerLawLimit::SqrtNOverD => {
            let ratio = nf / d;
            if beta < one {
                (BelowOneSqrtND, root * ratio.sqrt().powf(one - beta))
            } else if beta == one {
                (OneSqrtND, root * log1(ratio))
            } else if beta < two {
                (OneToTwoSqrtND, root)
            } else {
                (TwoSqrtND, root * log1(ratio))
            }
        }
        _ => {
            if beta < one {
                (BelowOneSqrtN, root * (d.powf(beta) * nf.powf(one - beta)).sqrt())
            } else if beta == one {
                (OneSqrtN, nf.sqrt() * d * log1(nf))
            } else if beta < two {
                (OneToTwoSqrtN, root * d.powf((two - beta) * half))
            } else {
                (TwoLogU, root * log1(nf.sqrt()))
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn progress_examples() {
        assert_eq!(progress_bound(100, 1.0f64, 100).unwrap(), 1.0);
        assert!(close(progress_bound(1, 1.0f64, 100).unwrap(), 0.01, 1e-12));
        assert_eq!(progress_bound(4, 5.0f64, 100).unwrap(), 1.0);
        assert!(progress_bound(0, 1.0f64, 100).is_err());
    }

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli_bound(0.0f64, 3.0).unwrap(), 0.0);
        assert_eq!(1.0 - (1.0f64 - 0.0).powf(3.0), 0.0);
        assert_eq!(bernoulli_bound(1.0f64, 1.0).unwrap(), 0.5);
        let b = bernoulli_bound(0.01f64, 10.0).unwrap();
        assert!(close(b, 0.1 / 1.1, 1e-12));
        assert!(b <= 1.0 - 0.99f64.powi(10));
        assert!(bernoulli_bound(1.5f64, 1.0).is_err());
        assert!(bernoulli_bound(0.5f64, 0.0).is_err());
    }

    #[test]
    fn optimal_lambda_examples() {
        let l: f64 = optimal_static_lambda(1024, 32).unwrap();
        assert!(close(l, (1024.0 * 32f64.ln() / 32.0).sqrt(), 1e-12));
        assert!((l - 10.53).abs() < 0.01);
        let l: f64 = optimal_static_lambda(1_000_000, 1000).unwrap();
        assert!((l - 83.11).abs() < 0.01);
        assert!(optimal_static_lambda::<f64>(100, 1).is_err());
        assert!(optimal_static_lambda::<f64>(100, 0).is_err());
    }

    #[test]
    fn optimal_lambda_identity() {
        // n = D·ln D gives λ = ln D
        for d in [10usize, 100, 1000] {
            let n_real = d as f64 * (d as f64).ln();
            let l = (n_real * (d as f64).ln() / d as f64).sqrt();
            assert!(close(l, (d as f64).ln(), 1e-12));
        }
    }

    #[test]
    fn predicted_examples() {
        let p = predicted_runtime(Target::<f64>::SelfAdjusting, 10_000, 100).unwrap();
        assert!(close(p.value, 1000.0, 1e-12));
        let p = predicted_runtime(Target::HeavyTailed { beta: 2.5f64, u: PowerLawLimit::SqrtN }, 10_000, 100).unwrap();
        assert!((p.value - 3162.3).abs() < 0.1);
        assert_eq!(p.expression, Expression::HeavyTailed(HeavyTailedRow::TwoToThree));
        let p = predicted_runtime(Target::Static { lambda: 10.0f64 }, 10_000, 100).unwrap();
        assert!((p.value - 5605.17).abs() < 0.01);
        assert!(predicted_runtime(Target::<f64>::SelfAdjusting, 100, 0).is_err());
    }

    #[test]
    fn table_rows_by_hand() {
        let (n, d) = (10_000usize, 100usize);
        let root = 1000.0f64;
        let eval = |beta: f64, u| predicted_runtime(Target::HeavyTailed { beta, u }, n, d).unwrap().value;
        use PowerLawLimit::*;
        assert!(close(eval(0.5, SqrtN), root * (100f64.powf(0.5) * 10_000f64.powf(0.5)).sqrt(), 1e-12));
        assert!(close(eval(1.0, SqrtN), 100.0 * 100.0 * 10_000f64.ln(), 1e-12));
        assert!(close(eval(1.5, SqrtN), root * 100f64.powf(0.25), 1e-12));
        assert!(close(eval(2.0, SqrtN), root * 100f64.ln(), 1e-12));
        assert!(close(eval(3.0, SqrtN), 10_000.0 * 100f64.ln() / 10_000f64.ln(), 1e-12));
        assert!(close(eval(3.5, SqrtN), 10_000.0 * 100f64.ln(), 1e-12));
        assert!(close(eval(0.5, SqrtNOverD), root * 10f64.powf(0.5), 1e-12));
        assert!(close(eval(1.0, SqrtNOverD), root * 100f64.ln(), 1e-12));
        assert!(close(eval(1.5, SqrtNOverD), root, 1e-12));
        assert!(close(eval(2.0, SqrtNOverD), root * 100f64.ln(), 1e-12));
        // β = 2 evaluates ln u for larger u
        assert!(close(eval(2.0, Value(5000)), root * 5000f64.ln(), 1e-12));
        // β > 2 accepts any u >= √n
        assert!(close(eval(2.5, Value(5000)), eval(2.5, SqrtN), 1e-12));
    }

    #[test]
    fn undefined_combinations_rejected() {
        let bad = |beta: f64, u| predicted_runtime(Target::HeavyTailed { beta, u }, 10_000, 100);
        assert!(bad(1.5, PowerLawLimit::Value(5000)).is_err());
        assert!(bad(2.5, PowerLawLimit::Value(10)).is_err());
        assert!(bad(0.0, PowerLawLimit::SqrtN).is_err());
        assert!(predicted_runtime(Target::Static { lambda: 0.0f64 }, 100, 10).is_err());
    }

    #[test]
    fn blackbox_examples() {
        let n = 1usize << 20;
        assert!(close(blackbox_lower_bound::<f64>(n, 1).unwrap(), 1.0, 1e-12));
        assert!(close(blackbox_lower_bound::<f64>(n, 1 << 10).unwrap(), 512.0, 1e-12));
        // linear in D at a fixed ratio n/D
        let a: f64 = blackbox_lower_bound(1 << 12, 1 << 4).unwrap();
        let b: f64 = blackbox_lower_bound(1 << 12, 1 << 5).unwrap();
        let a2: f64 = blackbox_lower_bound(1 << 13, 1 << 5).unwrap();
        assert!(b > a);
        let ratio = a2 / a * (13f64 / 12.0);
        assert!(close(ratio, 2.0, 1e-12));
        assert!(blackbox_lower_bound::<f64>(100, 51).is_err());
        assert!(blackbox_lower_bound::<f64>(100, 0).is_err());
    }

    #[test]
    fn bernoulli_bound_grid() {
        for i in 0..100 {
            let p = i as f64 / 99.0;
            for j in 1..=100 {
                let lambda = 50.0 * j as f64 / 100.0;
                let lhs = 1.0 - (1.0 - p).powf(lambda);
                assert!(lhs + 1e-15 >= bernoulli_bound(p, lambda).unwrap(), "p={p} λ={lambda}");
            }
        }
    }

    #[test]
    fn continuity_around_beta_two() {
        for &n in &[1usize << 10, 1 << 14, 1 << 20] {
            for &d in &[1usize, 16, 256] {
                for u in [PowerLawLimit::SqrtN, PowerLawLimit::SqrtNOverD] {
                    let lo = predicted_runtime(Target::HeavyTailed { beta: 2.0 - 1e-6, u }, n, d).unwrap().value;
                    let hi = predicted_runtime(Target::HeavyTailed { beta: 2.0 + 1e-6, u }, n, d).unwrap().value;
                    let at = predicted_runtime(Target::HeavyTailed { beta: 2.0f64, u }, n, d).unwrap().value;
                    let bound = 2.0 * (n as f64).ln();
                    for (a, b) in [(lo, hi), (lo, at), (at, hi)] {
                        assert!(a.max(b) / a.min(b) <= bound, "n={n} d={d} {u}: {a} {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn increasing_in_beta_between_two_and_three() {
        let (n, d) = (1usize << 14, 16usize);
        let vals: Vec<f64> = [2.1, 2.3, 2.5, 2.7, 2.9]
            .iter()
            .map(|&b| predicted_runtime(Target::HeavyTailed { beta: b, u: PowerLawLimit::SqrtN }, n, d).unwrap().value)
            .collect();
        assert!(vals.windows(2).all(|w| w[0] < w[1]), "{vals:?}");
    }

    #[test]
    fn blackbox_below_self_adjusting() {
        for k in 2..=20 {
            let n = 1usize << k;
            let mut d = 1;
            while 2 * d <= n {
                let bb: f64 = blackbox_lower_bound(n, d).unwrap();
                let sa = predicted_runtime(Target::<f64>::SelfAdjusting, n, d).unwrap().value;
                assert!(bb <= sa);
                d *= 3;
            }
        }
    }

    #[test]
    fn single_precision() {
        let p = predicted_runtime(Target::<f32>::SelfAdjusting, 10_000, 100).unwrap();
        assert!((p.value - 1000.0).abs() < 1e-2);
    }

    #[test]
    fn baselines_positive() {
        let ea = predicted_runtime(Target::<f64>::OnePlusOneEa, 1024, 32).unwrap().value;
        let rls = predicted_runtime(Target::<f64>::Rls, 1024, 32).unwrap().value;
        assert!(close(ea / rls, std::f64::consts::E, 1e-12));
        for t in [Target::<f64>::Static { lambda: 3.0 }, Target::FitnessDependent, Target::HeavyTailed { beta: 3.0, u: PowerLawLimit::SqrtN }] {
            assert!(predicted_runtime(t, 2, 1).unwrap().value > 0.0);
        }
    }
}
