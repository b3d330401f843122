// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Everything that can go wrong across the pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A permutation argument was required to be a single 5-cycle.
    #[error("permutation {0} is not a 5-cycle")]
    NotFiveCycle(String),

    /// Malformed text input (DIMACS, formula, circuit, branching program, permutation).
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A bit assignment had the wrong number of bits.
    #[error("expected {expected} bits, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("circuit widths differ: {0} vs {1}")]
    WidthMismatch(usize, usize),

    #[error("exhaustive mode needs width <= {limit}, got {width}")]
    WidthLimitExceeded { width: usize, limit: usize },

    #[error("{what} {value} exceeds the limit {limit}")]
    LimitExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("unsupported gate: {0}")]
    UnsupportedGate(String),

    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    /// A gate named the same wire twice, or a wire outside the circuit.
    #[error("invalid gate: {0}")]
    InvalidGate(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The compiled branching program broke its length bound.
    #[error("program length {length} exceeds bound 4^{depth} = {bound}")]
    LengthBoundExceeded {
        length: usize,
        depth: usize,
        bound: u128,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
