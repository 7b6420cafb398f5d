use thiserror::Error;

/// Errors raised by the computations in this crate.
///
/// Every variant corresponds to a violated contract; none of them is used for
/// a value that is merely zero (an infeasible partition-function argument is
/// `Ok(0)`, not an error).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed textual input (partition, weight, block list).
    #[error("parse error: {0}")]
    Parse(String),

    /// A value does not satisfy the structural invariants of its type.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// A coefficient was requested outside the truncation window of a series.
    #[error("truncation error: exponent {exponent:?} has grade {grade} beyond depth {depth}")]
    Truncation {
        exponent: Vec<i32>,
        grade: i64,
        depth: i64,
    },

    /// The λ-slice of 𝔟(0) is empty at the given depth.
    #[error("truncation insufficient: no terms for lambda {lambda:?} at depth {depth}")]
    TruncationInsufficient { lambda: Vec<i32>, depth: i64 },

    /// Signs of the extracted terms contradict the size-ordering of the resolution.
    #[error("ordering hypothesis violated: {0}")]
    OrderingViolated(String),

    /// A configured resource cap was exceeded.
    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    /// The inputs lie outside the range where the requested formula holds.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
