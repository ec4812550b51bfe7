use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("index out of range: {0}")]
    Range(String),

    #[error("not divisible: nonzero remainder at total degree {degree}")]
    NotDivisible { degree: usize },

    #[error("construction failed for {what} in degree {degree}: {reason}")]
    ConstructionFailed {
        what: String,
        degree: usize,
        reason: String,
    },

    #[error("elimination blocked at degree {degree}: pivot {pivot} does not involve P{degree}")]
    EliminationBlocked { degree: usize, pivot: String },

    #[error(
        "over-determined inconsistency at degree {degree}: {entry} does not vanish ({residual})"
    )]
    Inconsistent {
        degree: usize,
        entry: String,
        residual: String,
    },

    #[error("solver blocked at order {order}")]
    SolverBlocked { order: usize },

    #[error("invariant violation: {0}")]
    Invariant(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
