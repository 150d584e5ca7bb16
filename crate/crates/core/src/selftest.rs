//! Fast invariant checks for a fresh build.

use crate::algorithms::{run_rls, update_lambda_one_fifth};
use crate::bitstring::BitString;
use crate::init::StartSpec;
use crate::samplers::{derive_seed, flip_random_bits, rng_from_seed, PowerLawDist};
use crate::theory::bernoulli_bound;
use std::fmt;

/// Knobs for [`run_selftest`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SelftestOptions {
    pub seed: u64,
    /// Multiplies every power-law normalizer before checking it. Anything
    /// other than 1 must make the normalization check fail.
    pub normalizer_scale: f64,
}

impl Default for SelftestOptions {
    fn default() -> Self {
        SelftestOptions {
            seed: 1,
            normalizer_scale: 1.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SelftestReport {
    pub checks: Vec<Check>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for SelftestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {:<22} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

fn bernoulli_grid() -> Check {
    let mut worst = f64::INFINITY;
    let mut ok = true;
    for i in 0..100 {
        let p = i as f64 / 99.0;
        for j in 0..100 {
            let lambda = 1.0 + j as f64;
            let lhs = 1.0 - (1.0 - p).powf(lambda);
            let rhs = bernoulli_bound(p, lambda).expect("grid values are valid");
            worst = worst.min(lhs - rhs);
            ok &= lhs >= rhs - 1e-15;
            if i == 0 {
                ok &= lhs == 0.0 && rhs == 0.0;
            }
        }
    }
    Check {
        name: "bernoulli-bound-grid",
        passed: ok,
        detail: format!("100x100 grid, min slack {worst:.3e}"),
    }
}

fn pmf_normalization(scale: f64) -> Check {
    let mut worst: f64 = 0.0;
    for beta in [1.5, 2.0, 2.1, 2.9] {
        for u in [10u64, 100, 1000, 65536] {
            let dist = PowerLawDist::<f64>::new(beta, u).expect("valid power law").with_scaled_normalizer(scale);
            let total: f64 = (1..=u).rev().map(|i| dist.pmf(i)).sum();
            worst = worst.max((total - 1.0).abs());
        }
    }
    Check {
        name: "power-law-pmf-sum",
        passed: worst <= 1e-9,
        detail: format!("max |sum - 1| = {worst:.3e}"),
    }
}

fn flip_distance(seed: u64) -> Check {
    let mut rng = rng_from_seed(derive_seed(seed, 1, 0));
    let mut ok = true;
    for n in [1usize, 7, 64, 65, 1000] {
        let x = BitString::ones(n);
        for ell in [0, n / 3, n / 2, n] {
            let y = flip_random_bits(&x, ell, &mut rng).expect("ell ≤ n");
            ok &= y.hamming(&x).expect("same length") == ell;
        }
    }
    Check {
        name: "flip-distance",
        passed: ok,
        detail: "hamming(x, flip(x, l)) = l".into(),
    }
}

fn one_fifth_neutrality() -> Check {
    let mut worst: f64 = 0.0;
    for a in [1.1, 1.2, 1.5] {
        for lambda in [10.0, 100.0, 1000.0] {
            let mut l = update_lambda_one_fifth(lambda, true, a, f64::INFINITY);
            for _ in 0..4 {
                l = update_lambda_one_fifth(l, false, a, f64::INFINITY);
            }
            worst = worst.max((l / lambda - 1.0).abs());
        }
    }
    Check {
        name: "one-fifth-neutrality",
        passed: worst <= 1e-12,
        detail: format!("1 success + 4 failures, max drift {worst:.3e}"),
    }
}

fn rls_closed_form(seed: u64) -> Check {
    let (n, d, trials) = (256usize, 16usize, 1000u64);
    let start = StartSpec::ExactDistance { distance: d };
    let mut total = 0u64;
    for t in 0..trials {
        let mut rng = rng_from_seed(derive_seed(seed, 2, t));
        let rec = run_rls::<f64, _>(n, &start, u64::MAX, &mut rng).expect("unbounded run");
        total += rec.evaluations;
    }
    let mean = total as f64 / trials as f64;
    let expected = n as f64 * (1..=d).map(|i| 1.0 / i as f64).sum::<f64>();
    let rel = (mean / expected - 1.0).abs();
    Check {
        name: "rls-closed-form",
        passed: rel <= 0.1,
        detail: format!("n=256 D=16: mean {mean:.1} vs n*H_D {expected:.1} ({:+.1}%)", 100.0 * (mean / expected - 1.0)),
    }
}

/// Runs every check. The report depends only on `opts`.
pub fn run_selftest(opts: SelftestOptions) -> SelftestReport {
    SelftestReport {
        checks: vec![
            bernoulli_grid(),
            pmf_normalization(opts.normalizer_scale),
            flip_distance(opts.seed),
            one_fifth_neutrality(),
            rls_closed_form(opts.seed),
        ],
    }
}
