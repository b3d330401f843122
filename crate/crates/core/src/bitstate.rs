// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A fixed-length assignment of bits to wires (or variables).
///
/// Wire 0 is written leftmost and is the most significant bit when a state
/// is read as an integer index.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitState {
    bits: Vec<bool>,
}

impl BitState {
    pub fn zeros(len: usize) -> Self {
        BitState {
            bits: vec![false; len],
        }
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        BitState { bits }
    }

    /// The `len`-bit state whose big-endian reading is `index`.
    pub fn from_index(index: u64, len: usize) -> Self {
        assert!(len >= 64 || index >> len == 0, "index does not fit");
        let bits = (0..len)
            .map(|w| {
                let shift = len - 1 - w;
                shift < 64 && (index >> shift) & 1 == 1
            })
            .collect();
        BitState { bits }
    }

    /// Inverse of [`BitState::from_index`]; `None` above 64 bits.
    pub fn to_index(&self) -> Option<u64> {
        if self.bits.len() > 64 {
            return None;
        }
        Some(
            self.bits
                .iter()
                .fold(0u64, |acc, &b| (acc << 1) | u64::from(b)),
        )
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn set(&mut self, i: usize, value: bool) {
        self.bits[i] = value;
    }

    pub fn flip(&mut self, i: usize) {
        self.bits[i] ^= true;
    }

    pub fn swap(&mut self, i: usize, j: usize) {
        self.bits.swap(i, j);
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub(crate) fn expect_len(&self, expected: usize) -> Result<()> {
        if self.len() == expected {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected,
                actual: self.len(),
            })
        }
    }
}

impl fmt::Display for BitState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitState({self})")
    }
}

impl FromStr for BitState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::parse(0, format!("bit string contains `{other}`"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BitState::from_bits)
    }
}

impl From<Vec<bool>> for BitState {
    fn from(bits: Vec<bool>) -> Self {
        BitState { bits }
    }
}
