use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("elements from two different fields were combined")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("not a direct sum: {0}")]
    NotDirectSum(String),
    #[error("weights outside configured field: factor {factor} {reason}")]
    WeightsOutsideField { factor: String, reason: String },
    #[error("structure constants are not antisymmetric at [x{}, x{}] coordinate {}", .i + 1, .j + 1, .k + 1)]
    NotAntisymmetric { i: usize, j: usize, k: usize },
    #[error("Jacobi identity fails for (x{}, x{}, x{})", .i + 1, .j + 1, .k + 1)]
    Jacobi { i: usize, j: usize, k: usize },
    #[error("Lie algebra is not nilpotent: lower central series stabilizes at dimension {0}")]
    NotNilpotent(usize),
    #[error("representation is not bracket compatible on pair ({}, {})", .i + 1, .j + 1)]
    NotARepresentation { i: usize, j: usize },
    #[error("invalid block decomposition: {0}")]
    InvalidBlocks(String),
    #[error("invalid E/nu split: {0}")]
    InvalidSplit(String),
    #[error("the zero vector has no regularity verdict")]
    ZeroVector,
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("mixed real-part signs within irreducible factor {0}")]
    MixedFactor(String),
    #[error("invalid spectral specification: {0}")]
    InvalidSpectrum(String),
    #[error("malformed input at {pointer}: {message}")]
    Malformed { pointer: String, message: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("numeric cross-check disagreed with exact computation: {0}")]
    NumericDisagreement(String),
}

impl Error {
    pub fn malformed(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Malformed {
            pointer: pointer.into(),
            message: message.into(),
        }
    }
}

impl Error {
    /// 2 for malformed or invalid input, 1 when the input is fine but no verdict was reached.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Inconclusive(_)
            | Error::Internal(_)
            | Error::NumericDisagreement(_)
            | Error::MixedFactor(_)
            | Error::NotDirectSum(_)
            | Error::InvalidSplit(_) => 1,
            _ => 2,
        }
    }

    /// Stable snake_case name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroPolynomial => "zero_polynomial",
            Error::InvalidField(_) => "invalid_field",
            Error::FieldMismatch => "field_mismatch",
            Error::Dimension(_) => "dimension",
            Error::NotDirectSum(_) => "not_direct_sum",
            Error::WeightsOutsideField { .. } => "weights_outside_field",
            Error::NotAntisymmetric { .. } => "not_antisymmetric",
            Error::Jacobi { .. } => "jacobi",
            Error::NotNilpotent(_) => "not_nilpotent",
            Error::NotARepresentation { .. } => "not_a_representation",
            Error::InvalidBlocks(_) => "invalid_blocks",
            Error::InvalidSplit(_) => "invalid_split",
            Error::ZeroVector => "zero_vector",
            Error::Inconclusive(_) => "inconclusive",
            Error::MixedFactor(_) => "mixed_factor",
            Error::InvalidSpectrum(_) => "invalid_spectrum",
            Error::Malformed { .. } => "malformed",
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::Internal(_) => "internal",
            Error::NumericDisagreement(_) => "numeric_disagreement",
        }
    }
}
