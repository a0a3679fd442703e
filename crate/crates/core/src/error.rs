//! Error taxonomy shared by every module in this crate.

use thiserror::Error;

/// Errors produced by geometry construction, exact computation, and sampling.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Malformed or inconsistent input: dimension mismatches, out-of-range
    /// parameters, unparsable descriptions.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An orientation whose spanning vectors are not linearly independent
    /// under the rank tolerance.
    #[error("degenerate orientation: {0}")]
    DegenerateOrientation(String),

    /// A zonotope whose generators do not span the ambient space, where a
    /// full-dimensional half-space description was required.
    #[error("degenerate zonotope: {0}")]
    DegenerateZonotope(String),

    /// Rejection sampling produced no accepted point within the proposal cap.
    #[error(
        "sampling failure{context}: no acceptance in {proposals} proposals \
         (acceptance rate below {floor:e})"
    )]
    SamplingFailure {
        proposals: u64,
        floor: f64,
        context: String,
    },

    /// A violated internal invariant; indicates a bug, not bad input.
    #[error("internal invariant violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
