//! Fixed-start runtime laboratory for evolutionary algorithms on OneMax.
//!
//! The crate runs the (1+(λ,λ)) GA (static, fitness-dependent,
//! self-adjusting and heavy-tailed λ), the (1+1) EA and RLS from initial
//! solutions at a chosen Hamming distance `D` from the optimum, aggregates
//! the number of fitness evaluations, and compares them with closed-form
//! asymptotic predictions and with a black-box query strategy.
//!
//! Numeric code is generic over [`Real`]; the aliases below fix it to `f64`.

pub mod algorithms;
pub mod bitstring;
pub mod blackbox;
pub mod error;
pub mod fitness;
pub mod harness;
pub mod init;
pub mod samplers;
pub mod scalar;
pub mod selftest;
pub mod theory;

pub use bitstring::BitString;
pub use error::{Error, Result};
pub use scalar::Real;

pub type Policy = algorithms::LambdaPolicy<f64>;
pub type Record = algorithms::RunRecord<f64>;
pub type PowerLaw = samplers::PowerLawDist<f64>;
pub type Prediction = theory::Prediction<f64>;
