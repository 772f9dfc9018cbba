use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero input where a nonzero element is required")]
    ZeroInput,
    #[error("factorization of {value} exceeds the configured bound")]
    FactorizationBoundExceeded { value: String },
    #[error("quadratic form is degenerate")]
    DegenerateForm,
    #[error("hermitian form has nontrivial discriminant")]
    NontrivialDiscriminant,
    #[error("Cayley-Dickson doubling requires an associative base")]
    NonAssociativeBase,
    #[error("vector is not orthogonal to the identity")]
    NotTraceless,
    #[error("zero vector")]
    ZeroVector,
    #[error("invalid generator descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("vector does not lie in the 14-dimensional subspace X")]
    NotInX,
    #[error("tuple lies outside the diagonal slice")]
    OutsideSlice,
    #[error("pivot search exhausted after {attempts} attempts")]
    PivotSearchExhausted { attempts: usize },
    #[error("quaternion calibration failed: {0}")]
    CalibrationCollision(String),
    #[error("vector is not semistable")]
    NotSemistable,
    #[error("full enumeration is only supported for p = 3")]
    ScopeTooLarge,
    #[error("unsupported characteristic {0}")]
    UnsupportedCharacteristic(u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
