use thiserror::Error;

/// Errors raised by the analytic and numerical routines of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("incompatible decay rates: {left} vs {right}")]
    IncompatibleDecay { left: f64, right: f64 },

    #[error("base exponents {left} and {right} do not differ by an integer")]
    IncompatibleExponent { left: f64, right: f64 },

    #[error("integral diverges at the origin (combined power {power} <= -1)")]
    DivergentIntegral { power: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid quantum numbers: {0}")]
    InvalidQuantumNumbers(String),

    #[error("Riccati expansion disagrees with closed form (relative deviation {deviation:e})")]
    RiccatiMismatch { deviation: f64 },

    #[error("convergence failure: {0}")]
    ConvergenceFailure(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
