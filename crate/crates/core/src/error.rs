use thiserror::Error;

use crate::report::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid cuspidal symbol `{label}`: {reason}")]
    InvalidSymbol { label: String, reason: String },

    #[error("symbol `{label}` declared with conflicting attributes")]
    InconsistentSymbol { label: String },

    #[error("multiplicity of `{summand}` must be positive")]
    ZeroMultiplicity { summand: String },

    #[error("non-self-dual summand `{summand}` has multiplicity {multiplicity} but its dual `{dual}` has {dual_multiplicity}")]
    UnpairedDual {
        summand: String,
        multiplicity: u32,
        dual: String,
        dual_multiplicity: u32,
    },

    #[error("invalid parameter:\n{0}")]
    InvalidParameter(ValidationReport),

    #[error("invalid Jordan data:\n{0}")]
    InvalidJordanData(ValidationReport),

    #[error("invalid inducing data:\n{0}")]
    InvalidInducingData(ValidationReport),

    #[error("invalid unitary data:\n{0}")]
    InvalidUnitaryData(ValidationReport),

    #[error("`{label}` is not self-dual")]
    NotSelfDualInput { label: String },

    #[error("operation not supported for the unitary family")]
    UnitaryFamily,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: u32, found: u32 },

    #[error("summand `{summand}` needs an Sp({multiplicity}) factor but the multiplicity is odd")]
    OddMultiplicitySp { summand: String, multiplicity: u32 },

    #[error("unsupported descriptor: {0}")]
    UnsupportedDescriptor(String),

    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("quotient W/W0 is not elementary abelian of exponent 2: {0}")]
    NonElementaryQuotient(String),

    #[error("infeasible fuzz bounds: {0}")]
    BoundsInfeasible(String),
}
