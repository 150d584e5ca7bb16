//! Random guessing on OneMax-type functions with a known start distance.
//!
//! The hidden optimum `z` lies at distance `D` from a known start point.
//! Evaluate random points and discard every candidate whose predicted
//! fitness disagrees with the observation until one candidate is left,
//! then evaluate it. Only for small `n`: candidates are bitmasks in a `u32`.

use crate::bitstring::BitString;
use crate::error::{Error, Result};
use rand::Rng;

pub const MAX_LEN: usize = 24;
pub const MAX_CANDIDATES: u64 = 10_000_000;

/// `OM_z(q) = n − H(q, z)`.
#[derive(Clone, Debug)]
pub struct OmZInstance {
    z: BitString,
}

impl OmZInstance {
    pub fn new(z: BitString) -> Self {
        OmZInstance { z }
    }

    pub fn n(&self) -> usize {
        self.z.len()
    }

    pub fn target(&self) -> &BitString {
        &self.z
    }

    pub fn fitness(&self, q: &BitString) -> Result<usize> {
        Ok(self.n() - self.z.hamming(q)?)
    }
}

/// Where random queries are drawn from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum QueryDomain {
    /// Uniform over `{0,1}^n`.
    #[default]
    Cube,
    /// Uniform over the points at distance `D` from the start.
    Sphere,
}

/// All points at distance `D` from the start that agree with every observation so far.
#[derive(Clone, Debug)]
pub struct CandidateSet {
    n: usize,
    masks: Vec<u32>,
}

pub fn binomial_coefficient(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

fn to_mask(x: &BitString) -> u32 {
    x.iter().enumerate().fold(0u32, |m, (i, b)| m | ((b as u32) << i))
}

fn from_mask(mask: u32, n: usize) -> BitString {
    let bits: Vec<bool> = (0..n).map(|i| (mask >> i) & 1 == 1).collect();
    BitString::from_bools(&bits)
}

impl CandidateSet {
    pub fn sphere(start: &BitString, distance: usize) -> Result<Self> {
        let n = start.len();
        if n > MAX_LEN {
            return Err(Error::invalid("n", format!("random guessing supports n <= {MAX_LEN}, got {n}")));
        }
        if distance > n {
            return Err(Error::invalid("D", format!("{distance} exceeds length {n}")));
        }
        let size = binomial_coefficient(n, distance);
        if size > MAX_CANDIDATES {
            return Err(Error::invalid("D", format!("C({n}, {distance}) = {size} candidates exceeds the limit of {MAX_CANDIDATES}")));
        }
        let s = to_mask(start);
        let mut masks = Vec::with_capacity(size as usize);
        if distance == 0 {
            masks.push(s);
        } else {
            // Gosper's hack: next mask with the same popcount
            let limit = 1u64 << n;
            let mut m: u64 = (1u64 << distance) - 1;
            while m < limit {
                masks.push(s ^ m as u32);
                let c = m & m.wrapping_neg();
                let r = m + c;
                m = (((r ^ m) >> 2) / c) | r;
            }
        }
        Ok(CandidateSet { n, masks })
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn contains(&self, x: &BitString) -> bool {
        let m = to_mask(x);
        self.masks.contains(&m)
    }

    /// Keeps candidates `c` with `n − H(q, c) = observed`.
    pub fn filter(&mut self, query: &BitString, observed: usize) {
        let q = to_mask(query);
        let n = self.n as u32;
        self.masks.retain(|&c| (n - (c ^ q).count_ones()) as usize == observed);
    }

    pub fn first(&self) -> Option<BitString> {
        self.masks.first().map(|&m| from_mask(m, self.n))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuessOutcome {
    /// Total evaluations, including the final one of the surviving candidate.
    pub queries: u64,
    pub found: BitString,
}

pub fn random_guessing_solve<R: Rng + ?Sized>(
    instance: &OmZInstance,
    start: &BitString,
    distance: usize,
    domain: QueryDomain,
    rng: &mut R,
) -> Result<GuessOutcome> {
    let n = instance.n();
    if start.len() != n {
        return Err(Error::LengthMismatch { left: start.len(), right: n });
    }
    if instance.target().hamming(start)? != distance {
        return Err(Error::invalid("start", format!("start is not at distance {distance} from the target")));
    }
    let mut candidates = CandidateSet::sphere(start, distance)?;
    let mut queries = 0u64;
    let start_mask = to_mask(start);

    while candidates.len() > 1 {
        let q = match domain {
            QueryDomain::Cube => {
                let bits: u32 = rng.random();
                let mask = if n == 32 { bits } else { bits & ((1u32 << n) - 1) };
                from_mask(mask, n)
            }
            QueryDomain::Sphere => {
                let mut sampler = crate::samplers::SubsetSampler::new(n);
                let flip = sampler.sample(distance, rng).iter().fold(0u32, |m, &i| m | (1 << i));
                from_mask(start_mask ^ flip, n)
            }
        };
        queries += 1;
        let observed = instance.fitness(&q)?;
        if observed == n {
            return Ok(GuessOutcome { queries, found: q });
        }
        candidates.filter(&q, observed);
        debug_assert!(candidates.contains(instance.target()));
    }

    let last = candidates.first().expect("the target is never eliminated");
    queries += 1;
    debug_assert_eq!(instance.fitness(&last)?, n);
    Ok(GuessOutcome { queries, found: last })
}
