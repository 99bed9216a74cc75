use std::io;

use thiserror::Error;

/// Errors produced by the trusslab library.
#[derive(Debug, Error)]
pub enum TrussError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error("blow-up multiplicity must be at least 1")]
    ZeroMultiplicity,

    #[error("materializing would create {edges} edges, above the limit of {limit}")]
    TooLarge { edges: u128, limit: usize },

    #[error("clique parameter x = {x} exceeds the cap {cap} for m = {m}")]
    CliqueTooLarge { x: usize, cap: usize, m: usize },

    #[error("probability {0} is outside (0, 1]")]
    InvalidProbability(f64),

    #[error("epsilon {0} is outside the allowed range")]
    InvalidEpsilon(f64),

    #[error("zeta {0} must be positive and finite")]
    InvalidZeta(f64),

    #[error("label count {labels} does not match order length {order}")]
    LabelMismatch { labels: usize, order: usize },

    #[error("invalid truss order: {0}")]
    InvalidOrder(String),
}

pub type Result<T> = std::result::Result<T, TrussError>;
