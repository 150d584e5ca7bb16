//! Fixed-length bit strings backed by 64-bit words.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

const WORD: usize = 64;

/// A genotype of `n` bits. The length is fixed at construction.
///
/// Bits beyond `len` in the last word are always zero, so word-level
/// popcounts never need masking.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitString {
    words: Vec<u64>,
    len: usize,
}

impl BitString {
    pub fn zeros(len: usize) -> Self {
        BitString {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut s = BitString {
            words: vec![u64::MAX; len.div_ceil(WORD)],
            len,
        };
        s.clear_tail();
        s
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut s = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                s.set(i, true);
            }
        }
        s
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn flip_all(&mut self, positions: &[usize]) {
        for &i in positions {
            self.flip(i);
        }
    }

    /// Number of one-bits, one popcount per word.
    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn count_zeros(&self) -> usize {
        self.len - self.count_ones()
    }

    pub fn hamming(&self, other: &BitString) -> Result<usize> {
        self.check_len(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum())
    }

    pub fn complement(&self) -> BitString {
        let mut s = BitString {
            words: self.words.iter().map(|w| !w).collect(),
            len: self.len,
        };
        s.clear_tail();
        s
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub(crate) fn check_len(&self, other: &BitString) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                left: self.len,
                right: other.len,
            });
        }
        Ok(())
    }

    pub(crate) fn clear_tail(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len <= 128 {
            write!(f, "BitString({self})")
        } else {
            write!(f, "BitString(len={}, ones={})", self.len, self.count_ones())
        }
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::invalid("bits", format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_bools(&bits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ones_zeros_and_tail() {
        for n in [1, 5, 63, 64, 65, 130] {
            assert_eq!(BitString::ones(n).count_ones(), n);
            assert_eq!(BitString::zeros(n).count_ones(), 0);
            assert_eq!(BitString::zeros(n).complement(), BitString::ones(n));
        }
    }

    #[test]
    fn parse_and_display() {
        let x: BitString = "10110".parse().unwrap();
        assert_eq!(x.len(), 5);
        assert_eq!(x.to_string(), "10110");
        assert!("10a".parse::<BitString>().is_err());
    }

    #[test]
    fn hamming_length_mismatch() {
        let a = BitString::zeros(3);
        let b = BitString::zeros(4);
        assert!(matches!(a.hamming(&b), Err(Error::LengthMismatch { .. })));
    }

    proptest! {
        #[test]
        fn flip_twice_is_identity(bits in proptest::collection::vec(any::<bool>(), 1..200), idx in any::<prop::sample::Index>()) {
            let x = BitString::from_bools(&bits);
            let i = idx.index(bits.len());
            let mut y = x.clone();
            y.flip(i);
            prop_assert_eq!(x.hamming(&y).unwrap(), 1);
            y.flip(i);
            prop_assert_eq!(&x, &y);
            prop_assert_eq!(x.count_ones(), bits.iter().filter(|b| **b).count());
        }
    }
}
