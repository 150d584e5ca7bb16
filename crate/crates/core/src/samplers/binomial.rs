use crate::error::{Error, Result};
use rand::Rng;
use rand_distr::{Binomial, Distribution};

/// Draws from Bin(`n`, `p`).
///
/// Small means use inversion and large ones BTPE, so the expected cost is
/// `O(1 + min(np, 1))` rather than `O(n)`.
pub fn sample_binomial<R: Rng + ?Sized>(n: u64, p: f64, rng: &mut R) -> Result<u64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid("p", format!("{p} is not a probability")));
    }
    if p == 0.0 || n == 0 {
        return Ok(0);
    }
    if p == 1.0 {
        return Ok(n);
    }
    let dist = Binomial::new(n, p).map_err(|e| Error::invalid("p", e.to_string()))?;
    Ok(dist.sample(rng))
}

/// Draws from Bin(`n`, `p`) conditioned on a positive outcome.
///
/// The index of the first success is drawn by inversion from its truncated
/// geometric law, and the trials after it are an ordinary binomial, so the
/// cost does not grow when the condition is unlikely.
pub fn sample_binomial_positive<R: Rng + ?Sized>(n: u64, p: f64, rng: &mut R) -> Result<u64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid("p", format!("{p} is not a probability")));
    }
    if n == 0 || p == 0.0 {
        return Err(Error::invalid("p", format!("Bin({n}, {p}) is never positive")));
    }
    if p == 1.0 {
        return Ok(n);
    }
    let log_q = (-p).ln_1p();
    let any = -(n as f64 * log_q).exp_m1();
    let u: f64 = rng.random();
    let first = ((-u * any).ln_1p() / log_q).floor();
    let first = if first.is_finite() { (first as u64).min(n - 1) } else { n - 1 };
    Ok(1 + sample_binomial(n - 1 - first, p, rng)?)
}
