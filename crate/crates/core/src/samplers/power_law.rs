use crate::error::{Error, Result};
use crate::scalar::Real;
use rand::Rng;

/// Truncated discrete power law on `[1..u]` with `Pr[i] = C·i^(-β)`.
///
/// The cumulative table is built once; sampling is an inverse-CDF binary
/// search, `O(log u)` per draw. Immutable after construction, so a single
/// instance can be shared across threads.
#[derive(Clone, Debug)]
pub struct PowerLawDist<F: Real> {
    beta: F,
    upper: u64,
    normalizer: F,
    cdf: Vec<F>,
}

impl<F: Real> PowerLawDist<F> {
    pub fn new(beta: F, upper: u64) -> Result<Self> {
        if !(beta > F::zero()) || !beta.is_finite() {
            return Err(Error::invalid("beta", format!("{beta} must be positive and finite")));
        }
        if upper == 0 {
            return Err(Error::invalid("u", "upper limit must be at least 1"));
        }
        let len = usize::try_from(upper)
            .map_err(|_| Error::invalid("u", format!("{upper} does not fit in memory")))?;
        let weights: Vec<F> = (1..=len).map(|j| F::of(j).powf(-beta)).collect();
        // smallest terms first
        let total = weights.iter().rev().fold(F::zero(), |acc, &w| acc + w);
        let normalizer = total.recip();
        let mut cdf = Vec::with_capacity(len);
        let mut acc = F::zero();
        for w in &weights {
            acc += *w;
            cdf.push(acc * normalizer);
        }
        *cdf.last_mut().expect("u >= 1") = F::one();
        Ok(PowerLawDist {
            beta,
            upper,
            normalizer,
            cdf,
        })
    }

    pub fn beta(&self) -> F {
        self.beta
    }

    pub fn upper(&self) -> u64 {
        self.upper
    }

    /// `C_{β,u} = (Σ_{j≤u} j^(-β))^(-1)`.
    pub fn normalizer(&self) -> F {
        self.normalizer
    }

    pub fn cdf_table(&self) -> &[F] {
        &self.cdf
    }

    pub fn pmf(&self, i: u64) -> F {
        if i == 0 || i > self.upper {
            return F::zero();
        }
        self.normalizer * F::of(i).powf(-self.beta)
    }

    pub fn mean(&self) -> F {
        (1..=self.upper).fold(F::zero(), |acc, i| acc + F::of(i) * self.pmf(i))
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        let r = F::of(rng.random::<f64>());
        let idx = self.cdf.partition_point(|&c| c <= r);
        // r < 1 = cdf[u-1], so idx < u
        idx.min(self.cdf.len() - 1) as u64 + 1
    }

    /// Copy with the stored normalizer scaled by `factor`; the sampling
    /// table is untouched. Exists so self-checks can prove they detect a
    /// broken normalizer.
    #[doc(hidden)]
    pub fn with_scaled_normalizer(mut self, factor: F) -> Self {
        self.normalizer *= factor;
        self
    }
}
