use thiserror::Error;

/// Errors raised by the field, linear-algebra, algebra and suite layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot enumerate an infinite field")]
    InfiniteField,
    #[error("cannot parse {0:?} as a field element or field name")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("bad dimension {0} for this construction")]
    BadDimension(usize),
    #[error("Cayley-Dickson parameter must be nonzero")]
    ZeroParameter,
    #[error("algebra is not unital with the declared unit")]
    NotUnital,
    #[error("multiplication table does not satisfy the degree-2 identity: {0}")]
    NotQuadratic(String),
    #[error("quadratic form data is inconsistent: {0}")]
    BadForm(String),
    #[error("algebra carries no Z3-grading")]
    NoGrading,
    #[error("algebra is not certified split")]
    NotSplit,
    #[error("algebra is not certified division")]
    NotDivision,
    #[error("operation undefined in characteristic 2")]
    CharacteristicTwo,
    #[error("operation requires characteristic 0")]
    NotCharacteristicZero,
    #[error("malformed algebra description: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
