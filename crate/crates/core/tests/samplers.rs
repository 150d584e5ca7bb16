mod common;

use common::chi_square;
use fixedstart::samplers::*;
use fixedstart::BitString;
use statrs::distribution::{Binomial, Discrete};

#[test]
fn binomial_goodness_of_fit() {
    let mut rng = rng_from_seed(3);
    for (n, p) in [(30u64, 0.2), (1000, 0.004), (65536, 1.0 / 256.0)] {
        let reference = Binomial::new(p, n).unwrap();
        let top = (n as f64 * p + 10.0 * (n as f64 * p).sqrt() + 10.0) as usize;
        let mut counts = vec![0u64; top + 1];
        for _ in 0..100_000 {
            let k = sample_binomial(n, p, &mut rng).unwrap() as usize;
            counts[k.min(top)] += 1;
        }
        let mut probs: Vec<f64> = (0..top).map(|k| reference.pmf(k as u64)).collect();
        probs.push(1.0 - probs.iter().sum::<f64>());
        let (_, _, pv) = chi_square(&counts, &probs);
        assert!(pv > 0.001, "Bin({n}, {p}): p-value {pv}");
    }
}

#[test]
fn power_law_goodness_of_fit() {
    let mut rng = rng_from_seed(4);
    for (beta, u) in [(2.5f64, 50u64), (1.5, 20), (3.5, 1000)] {
        let dist = PowerLawDist::<f64>::new(beta, u).unwrap();
        let mut counts = vec![0u64; u as usize];
        for _ in 0..200_000 {
            counts[dist.sample(&mut rng) as usize - 1] += 1;
        }
        let reference: Vec<f64> = (1..=u).map(|i| (i as f64).powf(-beta)).collect();
        let z: f64 = reference.iter().sum();
        let probs: Vec<f64> = reference.iter().map(|w| w / z).collect();
        let (_, _, pv) = chi_square(&counts, &probs);
        assert!(pv > 0.001, "β={beta} u={u}: p-value {pv}");
    }
}

#[test]
fn crossover_keeps_each_bit_with_bias() {
    let mut rng = rng_from_seed(5);
    let x = BitString::zeros(40);
    let mut y = BitString::zeros(40);
    for i in (0..40).step_by(2) {
        y.set(i, true);
    }
    let mut hits = vec![0u64; 40];
    let runs = 50_000;
    for _ in 0..runs {
        let child = biased_crossover(&x, &y, 0.3, &mut rng).unwrap();
        for (i, h) in hits.iter_mut().enumerate() {
            *h += child.get(i) as u64;
        }
    }
    for (i, &h) in hits.iter().enumerate() {
        let freq = h as f64 / runs as f64;
        let expected = if i % 2 == 0 { 0.3 } else { 0.0 };
        assert!((freq - expected).abs() < 0.01, "bit {i}: {freq}");
    }
}

#[test]
fn flips_are_uniform_over_positions() {
    let mut rng = rng_from_seed(6);
    let n = 20;
    let x = BitString::ones(n);
    let mut counts = vec![0u64; n];
    for _ in 0..20_000 {
        let y = flip_random_bits(&x, 3, &mut rng).unwrap();
        for (i, c) in counts.iter_mut().enumerate() {
            *c += !y.get(i) as u64;
        }
    }
    let (_, _, pv) = chi_square(&counts, &vec![1.0 / n as f64; n]);
    assert!(pv > 0.001, "p-value {pv}");
}

#[test]
fn positive_binomial_mean() {
    let mut rng = rng_from_seed(7);
    let (n, p) = (4096u64, 1.0 / 4096.0);
    let draws = 200_000;
    let mean = (0..draws).map(|_| sample_binomial_positive(n, p, &mut rng).unwrap() as f64).sum::<f64>() / draws as f64;
    let expected = n as f64 * p / (1.0 - (1.0 - p).powi(n as i32));
    assert!((mean / expected - 1.0).abs() < 0.01, "{mean} vs {expected}");
}

#[test]
fn seeds_separate_cells_and_trials() {
    let mut seen = std::collections::HashSet::new();
    for cell in 0..50 {
        for trial in 0..50 {
            assert!(seen.insert(derive_seed(9, cell, trial)));
        }
    }
}
