//! Error type shared by every module in the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {actual}")]
    DimensionMismatch {
        context: String,
        expected: String,
        actual: String,
    },

    #[error("{context}: input vector has zero norm")]
    ZeroVector { context: &'static str },

    #[error("{context}: matrix is not Hermitian (defect {defect:.3e})")]
    NonHermitian { context: String, defect: f64 },

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    #[error("unsupported shape in {context}: {detail}")]
    UnsupportedShape { context: String, detail: String },

    #[error("invalid dimension in {context}: {detail}")]
    InvalidDimension { context: String, detail: String },

    #[error("correlation undefined: operator {operator} has vanishing deviation")]
    DegenerateCorrelation { operator: String },

    #[error("{context}: deviation is below the degeneracy threshold")]
    DegenerateDelta { context: String },

    #[error("{context}: vectors not orthogonal (overlap {overlap:.3e})")]
    NonOrthogonal { context: String, overlap: f64 },

    #[error("{context}: expected unit normalization, got {value}")]
    NotNormalized { context: String, value: f64 },

    #[error("weight must be positive, got {lambda}")]
    NonPositiveWeight { lambda: f64 },

    #[error("weights (alpha, beta) must not both vanish")]
    ZeroWeights,

    #[error("operators {first} and {second} do not commute (commutator norm {norm:.3e})")]
    NonCommuting {
        first: usize,
        second: usize,
        norm: f64,
    },

    #[error("operator {index} is not diagonal in the computational basis (off-diagonal {offdiag:.3e})")]
    NotDiagonal { index: usize, offdiag: f64 },

    #[error("Cauchy-Schwarz identity degenerate: |⟨f|g⟩| vanishes, inequality holds trivially")]
    CauchySchwarzDegenerate,

    #[error("length mismatch in {context}: {left} vs {right}")]
    LengthMismatch {
        context: String,
        left: usize,
        right: usize,
    },

    #[error("environment dimension {d_e} infeasible: need at least {d_s}")]
    InfeasibleEnvironment { d_e: usize, d_s: usize },

    #[error("relation {relation} is not supported by this operation")]
    UnsupportedRelation { relation: String },

    #[error("{context}: candidate degenerate after projection")]
    DegenerateCandidate { context: String },

    #[error("non-finite entry at index {index} in {context}")]
    NonFiniteEntry { context: String, index: usize },
}

impl Error {
    pub(crate) fn dims(context: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        Error::DimensionMismatch {
            context: context.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}
