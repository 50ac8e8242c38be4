use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("trace {trace} differs from 1")]
    TraceNotOne { trace: f64 },

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:e})")]
    NotPositive { min_eigenvalue: f64 },

    #[error("invalid subsystem index {0}; expected 0 (A) or 1 (B)")]
    InvalidSubsystem(usize),

    #[error("expected a bipartite state, got {0} subsystems")]
    NotBipartite(usize),

    #[error("dimension {0} outside the supported range")]
    UnsupportedDimension(usize),

    #[error("{name} = {value} outside [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("invalid probability distribution: {0}")]
    InvalidProbabilities(String),

    #[error("support of the first argument is not contained in the support of the second")]
    InfiniteRelativeEntropy,

    #[error("channel is not trace preserving (deviation {deviation:e})")]
    NotTracePreserving { deviation: f64 },

    #[error("channel is not unital (deviation {deviation:e})")]
    NotUnital { deviation: f64 },

    #[error("entropy condition violated (residual {residual:e}); the formula is only an achievable lower bound")]
    ConditionViolated { residual: f64 },

    #[error("channel is not a Pauli channel")]
    NotPauli,

    #[error("candidate set does not contain the identity map")]
    MissingIdentityCandidate,

    #[error("root bracket [{lo}, {hi}] does not change sign (f(lo) = {f_lo}, f(hi) = {f_hi})")]
    BracketSign { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Short machine-readable tag for the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::NotHermitian { .. } => "not_hermitian",
            Error::TraceNotOne { .. } => "trace_not_one",
            Error::NotPositive { .. } => "not_positive",
            Error::InvalidSubsystem(_) => "invalid_subsystem",
            Error::NotBipartite(_) => "not_bipartite",
            Error::UnsupportedDimension(_) => "unsupported_dimension",
            Error::OutOfRange { .. } => "out_of_range",
            Error::InvalidProbabilities(_) => "invalid_probabilities",
            Error::InfiniteRelativeEntropy => "infinite_relative_entropy",
            Error::NotTracePreserving { .. } => "not_trace_preserving",
            Error::NotUnital { .. } => "not_unital",
            Error::ConditionViolated { .. } => "condition_violated",
            Error::NotPauli => "not_pauli",
            Error::MissingIdentityCandidate => "missing_identity_candidate",
            Error::BracketSign { .. } => "bracket_sign",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::Io(_) => "io",
            Error::Parse(_) => "parse",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(name: &'static str, value: f64, min: f64, max: f64) -> Result<()> {
    if value.is_finite() && value >= min && value <= max {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            name,
            value,
            min,
            max,
        })
    }
}
