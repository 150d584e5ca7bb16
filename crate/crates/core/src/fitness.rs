//! The OneMax objective and evaluation accounting.
//!
//! The optimum is the all-ones string. Every fitness value an algorithm
//! *pays for* goes through an [`EvalCounter`]; bookkeeping lookups of an
//! already known fitness use the uncounted [`onemax`].

use crate::bitstring::BitString;
use crate::error::{Error, Result};

/// Number of one-bits.
pub fn onemax(x: &BitString) -> usize {
    x.count_ones()
}

/// Hamming distance to the all-ones optimum.
pub fn distance_to_optimum(x: &BitString) -> usize {
    x.len() - onemax(x)
}

/// OneMax value of `x` with the bits at `flips` inverted, given `base = onemax(x)`.
///
/// `flips` must hold distinct positions. Runs in `O(flips.len())`.
pub fn onemax_after_flips(x: &BitString, base: usize, flips: &[usize]) -> usize {
    let gained = flips.iter().filter(|&&i| !x.get(i)).count();
    base + 2 * gained - flips.len()
}

/// Counts objective calls against an optional budget.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EvalCounter {
    count: u64,
    budget: Option<u64>,
}

impl EvalCounter {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_budget(budget: u64) -> Self {
        EvalCounter {
            count: 0,
            budget: Some(budget),
        }
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn budget(&self) -> Option<u64> {
        self.budget
    }

    /// Evaluations left before the budget is hit; `u64::MAX` when unlimited.
    pub fn remaining(&self) -> u64 {
        self.budget.map_or(u64::MAX, |b| b - self.count)
    }

    /// Charges one evaluation.
    pub fn charge(&mut self) -> Result<()> {
        if let Some(budget) = self.budget {
            if self.count >= budget {
                return Err(Error::BudgetExhausted { budget });
            }
        }
        self.count += 1;
        Ok(())
    }
}

/// Evaluates `x` and charges one evaluation.
pub fn counted_eval(x: &BitString, counter: &mut EvalCounter) -> Result<usize> {
    counter.charge()?;
    Ok(onemax(x))
}

/// Evaluates the offspring "`x` with `flips` inverted" and charges one evaluation.
pub fn counted_eval_flips(
    x: &BitString,
    base: usize,
    flips: &[usize],
    counter: &mut EvalCounter,
) -> Result<usize> {
    counter.charge()?;
    Ok(onemax_after_flips(x, base, flips))
}
