use alloc::string::String;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("dimension {found} exceeds the supported limit {limit}")]
    DimensionCap { found: usize, limit: usize },

    #[error("{context}: matrix is not positive definite; jitter repair failed at {jitter:e}")]
    PdRepairFailed { context: &'static str, jitter: f64 },

    #[error("{context}: matrix is singular")]
    Singular { context: &'static str },

    #[error("truncation mass is numerically zero")]
    MassUnderflow,

    #[error("constraints are effectively infeasible: normalizing constant {z:e} is below 1e-12")]
    InfeasibleConstraints { z: f64 },

    #[error("overflow in {context}: exponent {exponent}")]
    Overflow { context: &'static str, exponent: f64 },

    #[error("sampler budget exhausted: {attempts} attempts yielded {accepted} of {requested} draws")]
    BudgetExhausted {
        attempts: u64,
        accepted: usize,
        requested: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = core::result::Result<T, Error>;
