use thiserror::Error;

/// Errors produced by the library.
///
/// Variants split into two families: input validation (the request itself is
/// malformed) and numerical failure (the request was fine but a solver,
/// continuation or integration did not reach its tolerance).
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid angle signature: {0}")]
    InvalidSignature(String),

    #[error("axis multiplicity {value} at {vertex} must be even")]
    OddAxisMultiplicity { vertex: &'static str, value: u32 },

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("point {0} lies on the branch cut (-inf, 0]")]
    BranchCut(String),

    #[error("singular Jacobian in {0}")]
    SingularJacobian(&'static str),

    #[error("continuation step underflow at alpha = {last_alpha}")]
    StepUnderflow { last_alpha: f64 },

    #[error("residual {residual:e} exceeds tolerance {tolerance:e}")]
    ResidualNotMet { residual: f64, tolerance: f64 },

    #[error(
        "loop passes within {distance:e} of singularity {singularity} (clearance {clearance:e})"
    )]
    Clearance {
        singularity: String,
        distance: f64,
        clearance: f64,
    },

    #[error("integration step underflow at path parameter {t}")]
    IntegrationUnderflow { t: f64 },

    #[error("inconsistent Fuchsian data: {0}")]
    InconsistentFuchsian(String),

    #[error("matrix is not invertible (det = {0:e})")]
    NotInvertible(f64),

    #[error("malformed document: {0}")]
    Format(String),
}

impl Error {
    /// True for errors caused by malformed requests, false for numerical failures.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidSignature(_)
                | Error::OddAxisMultiplicity { .. }
                | Error::DegreeMismatch(_)
                | Error::InvalidInput(_)
                | Error::BranchCut(_)
                | Error::Clearance { .. }
                | Error::NotInvertible(_)
                | Error::Format(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
