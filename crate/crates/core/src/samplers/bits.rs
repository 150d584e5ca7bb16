use super::binomial::{sample_binomial, sample_binomial_positive};
use crate::bitstring::BitString;
use crate::error::{Error, Result};
use rand::Rng;

/// Draws uniform `k`-subsets of `[0, n)` by partial Fisher–Yates over a
/// persistent permutation, `O(k)` per draw with no rejection.
///
/// The permutation left behind by one draw is a valid starting point for
/// the next, so the scratch space is never reset.
#[derive(Clone, Debug)]
pub struct SubsetSampler {
    perm: Vec<usize>,
}

impl SubsetSampler {
    pub fn new(n: usize) -> Self {
        SubsetSampler {
            perm: (0..n).collect(),
        }
    }

    pub fn universe(&self) -> usize {
        self.perm.len()
    }

    /// A uniformly random `k`-subset (in random order). Panics if `k > n`.
    pub fn sample<R: Rng + ?Sized>(&mut self, k: usize, rng: &mut R) -> &[usize] {
        let n = self.perm.len();
        assert!(k <= n, "cannot choose {k} of {n}");
        for i in 0..k {
            let j = rng.random_range(i..n);
            self.perm.swap(i, j);
        }
        &self.perm[..k]
    }
}

/// Copy of `x` with exactly `ell` distinct, uniformly chosen bits flipped.
pub fn flip_random_bits<R: Rng + ?Sized>(x: &BitString, ell: usize, rng: &mut R) -> Result<BitString> {
    if ell > x.len() {
        return Err(Error::invalid(
            "ell",
            format!("cannot flip {ell} bits of a length-{} string", x.len()),
        ));
    }
    let mut sampler = SubsetSampler::new(x.len());
    let mut y = x.clone();
    y.flip_all(sampler.sample(ell, rng));
    Ok(y)
}

/// Per position, takes the bit of `x_prime` with probability `c`, else the bit of `x`.
pub fn biased_crossover<R: Rng + ?Sized>(
    x: &BitString,
    x_prime: &BitString,
    c: f64,
    rng: &mut R,
) -> Result<BitString> {
    x.check_len(x_prime)?;
    if !(0.0..=1.0).contains(&c) {
        return Err(Error::invalid("c", format!("{c} is not a probability")));
    }
    let mut y = x.clone();
    for i in 0..x.len() {
        if x.get(i) != x_prime.get(i) && rng.random_bool(c) {
            y.flip(i);
        }
    }
    Ok(y)
}

/// Sparse form of [`biased_crossover`]: given the positions where `x'`
/// differs from `x`, writes into `out` the positions the offspring takes
/// from `x'`. Each position is kept independently with probability `c`,
/// realized as `K ~ Bin(|diff|, c)` followed by a uniform `K`-subset.
///
/// With `nonempty` the draw is conditioned on taking at least one position
/// (when there is one), which is the same as redrawing offspring equal to `x`.
///
/// `scratch` is reordered but keeps the same elements.
pub fn crossover_subset<R: Rng + ?Sized>(
    scratch: &mut [usize],
    c: f64,
    nonempty: bool,
    rng: &mut R,
    out: &mut Vec<usize>,
) -> Result<()> {
    out.clear();
    let m = scratch.len();
    let k = if nonempty && m > 0 {
        sample_binomial_positive(m as u64, c, rng)?
    } else {
        sample_binomial(m as u64, c, rng)?
    } as usize;
    for i in 0..k {
        let j = rng.random_range(i..m);
        scratch.swap(i, j);
    }
    out.extend_from_slice(&scratch[..k]);
    Ok(())
}
