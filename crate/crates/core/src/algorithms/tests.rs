use super::*;
use crate::bitstring::BitString;
use crate::fitness::{distance_to_optimum, onemax, EvalCounter};
use crate::init::StartSpec;
use crate::samplers::rng_from_seed;

fn harmonic(k: usize) -> f64 {
    (1..=k).map(|i| 1.0 / i as f64).sum()
}

fn mean_evals<F: Real>(records: &[RunRecord<F>]) -> f64 {
    records.iter().map(|r| r.evaluations as f64).sum::<f64>() / records.len() as f64
}

#[test]
fn optimal_start_is_free() {
    let start = StartSpec::ExactDistance { distance: 0 };
    let mut rng = rng_from_seed(0);
    let r = run_ollga(64, &start, LambdaPolicy::<f64>::self_adjusting(Cap::Uncapped), 1000, &mut rng).unwrap();
    assert!(r.found_optimum);
    assert_eq!((r.iterations, r.evaluations), (0, 0));
    let r: RunRecord<f64> = run_one_plus_one_ea(64, &start, 1000, &mut rng).unwrap();
    assert_eq!(r.evaluations, 0);
    let r: RunRecord<f64> = run_rls(64, &start, 1000, &mut rng).unwrap();
    assert_eq!(r.evaluations, 0);
}

#[test]
fn optimum_is_kept() {
    let x = BitString::ones(40);
    let mut rng = rng_from_seed(1);
    for lambda in [1.0, 3.0, 7.5] {
        let mut c = EvalCounter::unlimited();
        let step = ga_iteration(&x, lambda, &mut rng, &mut c).unwrap();
        assert_eq!(onemax(&step.next), 40);
        assert!(!step.strict);
    }
}

#[test]
fn iteration_cost_is_two_round_lambda() {
    let mut rng = rng_from_seed(2);
    let x: BitString = "1101001110".parse().unwrap();
    for (lambda, cost) in [(1.0, 2), (0.4, 2), (2.4, 4), (2.5, 6), (7.0, 14)] {
        let mut c = EvalCounter::unlimited();
        ga_iteration(&x, lambda, &mut rng, &mut c).unwrap();
        assert_eq!(c.count(), cost, "lambda {lambda}");
    }
}

#[test]
fn budget_error_propagates() {
    let mut rng = rng_from_seed(3);
    let x = BitString::zeros(10);
    let mut c = EvalCounter::with_budget(3);
    assert!(matches!(
        ga_iteration(&x, 2.0, &mut rng, &mut c),
        Err(Error::BudgetExhausted { budget: 3 })
    ));
}

#[test]
fn lambda_one_accepts_whole_mutant() {
    // λ = 1 gives c = 1, so y = x'; an accepted y differs from x in exactly ℓ bits.
    let mut rng = rng_from_seed(4);
    let x: BitString = "0000011111".parse().unwrap();
    for _ in 0..500 {
        let mut c = EvalCounter::unlimited();
        let step = ga_iteration_with_strength(&x, 1.0, Some(3), &mut rng, &mut c).unwrap();
        let h = x.hamming(&step.next).unwrap();
        assert!(h == 0 || h == 3);
        assert_eq!(step.improved, h == 3);
    }
}

#[test]
fn elitism_over_iterations() {
    let mut rng = rng_from_seed(5);
    let mut x = crate::init::init_exact_distance(200, 60, &mut rng).unwrap();
    let mut c = EvalCounter::unlimited();
    let mut lambda = 2.0f64;
    for _ in 0..400 {
        let before = onemax(&x);
        let step = ga_iteration(&x, lambda, &mut rng, &mut c).unwrap();
        assert!(onemax(&step.next) >= before);
        assert_eq!(step.strict, onemax(&step.next) > before);
        lambda = update_lambda_one_fifth(lambda, step.strict, 1.2, 200.0);
        x = step.next;
    }
}

#[test]
fn evaluation_accounting_matches_lambda_trace() {
    // For a static λ every iteration costs 2·round(λ).
    let mut rng = rng_from_seed(6);
    let start = StartSpec::ExactDistance { distance: 20 };
    let r = run_ollga(256, &start, LambdaPolicy::Static { lambda: 3.4f64 }, u64::MAX, &mut rng).unwrap();
    assert!(r.found_optimum);
    assert_eq!(r.evaluations, 6 * r.iterations);
    let r: RunRecord<f64> = run_rls(256, &start, u64::MAX, &mut rng).unwrap();
    assert_eq!(r.evaluations, r.iterations);
    let r: RunRecord<f64> = run_one_plus_one_ea(256, &start, u64::MAX, &mut rng).unwrap();
    assert_eq!(r.evaluations, r.iterations);
}

#[test]
fn self_adjusting_lambda_stays_in_range() {
    let n = 1024;
    for cap in [Cap::Uncapped, Cap::LogCapped] {
        let solver = Ollga::new(n, LambdaPolicy::<f64>::self_adjusting(cap)).unwrap();
        let opts = RunOptions {
            trace_lambda: true,
            ..RunOptions::default()
        };
        let hi = cap.resolve(n);
        for seed in 0..20 {
            let r = solver
                .run(&StartSpec::ExactDistance { distance: 100 }, &opts, &mut rng_from_seed(seed))
                .unwrap();
            let trace = r.lambda_trace.unwrap();
            assert!(trace.len() > 2);
            assert!(trace.iter().all(|&(_, l)| (1.0..=hi).contains(&l)), "{trace:?}");
        }
    }
}

#[test]
fn heavy_tailed_lambda_in_support() {
    let n = 4096;
    let solver = Ollga::new(n, LambdaPolicy::HeavyTailed { beta: 2.1f64, u: UpperLimit::SqrtN }).unwrap();
    let opts = RunOptions {
        trace_lambda: true,
        ..RunOptions::default()
    };
    for seed in 0..20 {
        let r = solver
            .run(&StartSpec::ExactDistance { distance: 64 }, &opts, &mut rng_from_seed(seed))
            .unwrap();
        assert!(r.found_optimum);
        for (_, l) in r.lambda_trace.unwrap() {
            assert!((1.0..=64.0).contains(&l) && l.fract() == 0.0);
        }
    }
}

#[test]
fn fitness_dependent_runs() {
    let mut rng = rng_from_seed(7);
    let r = run_ollga(1024, &StartSpec::ExactDistance { distance: 50 }, LambdaPolicy::<f64>::FitnessDependent, u64::MAX, &mut rng).unwrap();
    assert!(r.found_optimum);
    assert_eq!(r.final_fitness, 1024);
    assert_eq!(r.start_distance, 50);
}

#[test]
fn censored_run_is_flagged() {
    let mut rng = rng_from_seed(8);
    let start = StartSpec::ExactDistance { distance: 500 };
    let r: RunRecord<f64> = run_rls(1000, &start, 50, &mut rng).unwrap();
    assert!(r.censored());
    assert_eq!(r.evaluations, 50);
    let r = run_ollga(1000, &start, LambdaPolicy::Static { lambda: 4.0f64 }, 50, &mut rng).unwrap();
    assert!(!r.found_optimum);
    assert!(r.evaluations <= 50);
    assert!(r.final_fitness < 1000);
}

#[test]
fn determinism_per_seed() {
    let start = StartSpec::Bernoulli { q: 0.05 };
    for alg in [
        Algorithm::Ollga(LambdaPolicy::<f64>::self_adjusting(Cap::LogCapped)),
        Algorithm::Ollga(LambdaPolicy::HeavyTailed { beta: 2.5, u: UpperLimit::HalfN }),
        Algorithm::OnePlusOneEa,
        Algorithm::Rls,
    ] {
        let s = Solver::new(alg, 500).unwrap();
        let opts = RunOptions::default();
        let a = s.run(&start, &opts, &mut rng_from_seed(99)).unwrap();
        let b = s.run(&start, &opts, &mut rng_from_seed(99)).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn rls_matches_harmonic_sum_small() {
    let (n, d) = (256usize, 16usize);
    let start = StartSpec::ExactDistance { distance: d };
    let recs: Vec<RunRecord<f64>> = (0..2000)
        .map(|s| run_rls(n, &start, u64::MAX, &mut rng_from_seed(s)).unwrap())
        .collect();
    let expected = n as f64 * harmonic(d);
    let m = mean_evals(&recs);
    assert!((m / expected - 1.0).abs() < 0.1, "{m} vs {expected}");
}

#[test]
fn ea_matches_level_sum_small() {
    let (n, d) = (256usize, 16usize);
    let start = StartSpec::ExactDistance { distance: d };
    let recs: Vec<RunRecord<f64>> = (0..2000)
        .map(|s| run_one_plus_one_ea(n, &start, u64::MAX, &mut rng_from_seed(s)).unwrap())
        .collect();
    let stay = (1.0 - 1.0 / n as f64).powi(n as i32 - 1);
    let expected: f64 = (1..=d).map(|k| 1.0 / (k as f64 / n as f64 * stay)).sum();
    let m = mean_evals(&recs);
    assert!((m / expected - 1.0).abs() < 0.15, "{m} vs {expected}");
}

#[test]
fn resampling_identical_offspring_is_cheaper() {
    let n = 512;
    let start = StartSpec::ExactDistance { distance: 22 };
    let counted = RunOptions::default();
    let free = RunOptions {
        resample_identical: true,
        ..RunOptions::default()
    };
    for alg in [Algorithm::OnePlusOneEa, Algorithm::Ollga(LambdaPolicy::<f64>::self_adjusting(Cap::Uncapped))] {
        let s = Solver::new(alg, n).unwrap();
        let mean = |o: &RunOptions| -> f64 {
            (0..300).map(|t| s.run(&start, o, &mut rng_from_seed(t)).unwrap().evaluations as f64).sum::<f64>() / 300.0
        };
        assert!(mean(&free) < mean(&counted), "{alg:?}");
    }
}

#[test]
fn initial_evaluation_toggle() {
    let start = StartSpec::ExactDistance { distance: 0 };
    let opts = RunOptions {
        count_initial: true,
        ..RunOptions::default()
    };
    let s = Solver::<f64>::new(Algorithm::Rls, 10).unwrap();
    assert_eq!(s.run(&start, &opts, &mut rng_from_seed(0)).unwrap().evaluations, 1);
}

#[test]
fn rls_start_distance_recorded() {
    let mut rng = rng_from_seed(10);
    let x = crate::init::init_exact_distance(100, 7, &mut rng).unwrap();
    assert_eq!(distance_to_optimum(&x), 7);
    let r: RunRecord<f32> = rls_from(x, &RunOptions::default(), &mut rng).unwrap();
    assert_eq!(r.start_distance, 7);
    assert!(r.found_optimum);
}

#[test]
fn resampling_keeps_two_round_lambda_per_iteration() {
    let n = 300;
    let start = StartSpec::ExactDistance { distance: 40 };
    let opts = RunOptions {
        resample_identical: true,
        ..RunOptions::default()
    };
    let g = Ollga::new(n, LambdaPolicy::Static { lambda: 3.4 }).unwrap();
    for t in 0..20 {
        let r: RunRecord<f64> = g.run(&start, &opts, &mut rng_from_seed(t)).unwrap();
        assert_eq!(r.evaluations, 6 * r.iterations);
    }
}
