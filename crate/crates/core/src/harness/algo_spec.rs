use crate::algorithms::{Algorithm, Cap, LambdaPolicy, UpperLimit};
use crate::error::{Error, Result};
use crate::theory::optimal_static_lambda;
use std::fmt;
use std::str::FromStr;

/// An algorithm as named in configs and on the command line.
///
/// | name             | meaning                                      |
/// |------------------|----------------------------------------------|
/// | `rls`            | randomized local search                      |
/// | `ea`             | (1+1) EA                                     |
/// | `static:<λ>`     | GA with fixed λ                              |
/// | `static:opt`     | GA with λ = √(n ln D / D) for the cell's D   |
/// | `fitdep`         | GA with λ = √(n/d)                           |
/// | `sa`             | self-adjusting GA, λ ∈ [1, n]                |
/// | `sa-log`         | self-adjusting GA, λ ∈ [1, 2 ln(n+1)]        |
/// | `ht:<β>:<u>`     | heavy-tailed GA; `u` is an integer, `sqrt-n` or `n/2` |
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AlgorithmSpec {
    Rls,
    Ea,
    Static(f64),
    StaticOptimal,
    FitnessDependent,
    SelfAdjusting { log_capped: bool },
    HeavyTailed { beta: f64, u: UpperLimit },
}

impl AlgorithmSpec {
    /// Binds the spec to a cell. `a` and `lambda0` parameterize the one-fifth rule.
    pub fn resolve(&self, n: usize, distance: f64, a: f64, lambda0: f64) -> Result<Algorithm<f64>> {
        Ok(match *self {
            AlgorithmSpec::Rls => Algorithm::Rls,
            AlgorithmSpec::Ea => Algorithm::OnePlusOneEa,
            AlgorithmSpec::Static(lambda) => Algorithm::Ollga(LambdaPolicy::Static { lambda }),
            AlgorithmSpec::StaticOptimal => {
                let lambda = optimal_static_lambda(n, distance.round() as usize)?;
                Algorithm::Ollga(LambdaPolicy::Static { lambda })
            }
            AlgorithmSpec::FitnessDependent => Algorithm::Ollga(LambdaPolicy::FitnessDependent),
            AlgorithmSpec::SelfAdjusting { log_capped } => Algorithm::Ollga(LambdaPolicy::SelfAdjusting {
                a,
                lambda0,
                cap: if log_capped { Cap::LogCapped } else { Cap::Uncapped },
            }),
            AlgorithmSpec::HeavyTailed { beta, u } => Algorithm::Ollga(LambdaPolicy::HeavyTailed { beta, u }),
        })
    }
}

impl fmt::Display for AlgorithmSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgorithmSpec::Rls => f.write_str("rls"),
            AlgorithmSpec::Ea => f.write_str("ea"),
            AlgorithmSpec::Static(l) => write!(f, "static:{l}"),
            AlgorithmSpec::StaticOptimal => f.write_str("static:opt"),
            AlgorithmSpec::FitnessDependent => f.write_str("fitdep"),
            AlgorithmSpec::SelfAdjusting { log_capped: false } => f.write_str("sa"),
            AlgorithmSpec::SelfAdjusting { log_capped: true } => f.write_str("sa-log"),
            AlgorithmSpec::HeavyTailed { beta, u } => write!(f, "ht:{beta}:{u}"),
        }
    }
}

fn positive(name: &'static str, text: &str) -> Result<f64> {
    text.parse::<f64>()
        .ok()
        .filter(|v| *v > 0.0 && v.is_finite())
        .ok_or_else(|| Error::invalid(name, format!("expected a positive number, got {text:?}")))
}

impl FromStr for AlgorithmSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        match parts.as_slice() {
            ["rls"] => Ok(AlgorithmSpec::Rls),
            ["ea"] => Ok(AlgorithmSpec::Ea),
            ["fitdep"] => Ok(AlgorithmSpec::FitnessDependent),
            ["sa"] => Ok(AlgorithmSpec::SelfAdjusting { log_capped: false }),
            ["sa-log"] => Ok(AlgorithmSpec::SelfAdjusting { log_capped: true }),
            ["static", "opt"] => Ok(AlgorithmSpec::StaticOptimal),
            ["static", l] => Ok(AlgorithmSpec::Static(positive("lambda", l)?)),
            ["ht", b, u] => Ok(AlgorithmSpec::HeavyTailed {
                beta: positive("beta", b)?,
                u: u.parse()?,
            }),
            _ => Err(Error::Config(format!(
                "unknown algorithm {s:?}; expected rls, ea, fitdep, sa, sa-log, static:<lambda>, static:opt or ht:<beta>:<u>"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_names() {
        for name in ["rls", "ea", "fitdep", "sa", "sa-log", "static:opt", "static:10.5", "ht:2.1:n/2", "ht:2:sqrt-n", "ht:1.5:100"] {
            let spec: AlgorithmSpec = name.parse().unwrap();
            assert_eq!(spec.to_string(), name);
        }
    }

    #[test]
    fn rejects_garbage() {
        for name in ["", "ga", "static", "static:-1", "ht:2.1", "ht:x:n/2", "ht:2:0", "sa:3"] {
            assert!(name.parse::<AlgorithmSpec>().is_err(), "{name}");
        }
    }

    #[test]
    fn resolves_optimal_static() {
        let alg = AlgorithmSpec::StaticOptimal.resolve(1024, 32.0, 1.2, 2.0).unwrap();
        match alg {
            Algorithm::Ollga(LambdaPolicy::Static { lambda }) => assert!((lambda - 10.53).abs() < 0.01),
            other => panic!("{other:?}"),
        }
        assert!(AlgorithmSpec::StaticOptimal.resolve(1024, 1.0, 1.2, 2.0).is_err());
    }
}
