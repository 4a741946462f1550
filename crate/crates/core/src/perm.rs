//! Bijections on `1..=n`.
//!
//! Images are stored 0-based; [`Permutation::image`] and the text format use
//! 1-based symbols, [`Permutation::apply`] and [`Permutation::as_slice`] are
//! 0-based.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::MAX_ORDER;

/// A bijection on `1..=n`.
///
/// Ordering compares image arrays lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} too large");
        Permutation {
            images: (0..n).map(|i| i as u8).collect(),
        }
    }

    /// Builds a permutation from 1-based images: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let zero: Vec<usize> = images
            .iter()
            .map(|&v| {
                v.checked_sub(1)
                    .ok_or_else(|| Error::InvalidPermutation(format!("image {v} is not in 1..={}", images.len())))
            })
            .collect::<Result<_>>()?;
        Self::from_zero_based(&zero)
    }

    pub fn from_zero_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidPermutation(format!("unsupported length {n}")));
        }
        let mut seen = vec![false; n];
        for &v in images {
            if v >= n {
                return Err(Error::InvalidPermutation(format!("image {} is not in 1..={n}", v + 1)));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("image {} repeated", v + 1)));
            }
        }
        Ok(Permutation {
            images: images.iter().map(|&v| v as u8).collect(),
        })
    }

    /// Caller guarantees `images` is a bijection on `0..images.len()`.
    pub(crate) fn from_raw(images: Vec<u8>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v as usize)
        });
        Permutation { images }
    }

    pub fn order(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based symbol `x`.
    pub fn image(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    /// Image of the 0-based index `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.images
    }

    /// 1-based image array.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// `self ∘ inner`, i.e. `x ↦ self(inner(x))`.
    pub fn compose(&self, inner: &Permutation) -> Result<Self> {
        if self.order() != inner.order() {
            return Err(Error::OrderMismatch {
                expected: self.order(),
                found: inner.order(),
            });
        }
        Ok(Permutation {
            images: inner.images.iter().map(|&i| self.images[i as usize]).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v as usize + 1)?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses comma-separated 1-based images such as `4,2,1,5,3`.
    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .trim()
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("{tok:?} is not a positive integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(&images)
    }
}
