use thiserror::Error;

/// Errors raised by the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),

    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),

    #[error("operands live in different rings")]
    ContextMismatch,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("truncated standard basis cannot provide a leading ideal")]
    TruncatedBasis,

    #[error("ideal contains a unit at the point")]
    UnitIdeal,

    #[error("the zero ideal has no finite order")]
    ZeroIdeal,

    #[error("sequence lengths differ ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("expected {expected} coordinates, got {got}")]
    PointDimension { expected: usize, got: usize },

    #[error("order mismatch: expected {expected}, ideal has order {actual}")]
    OrderMismatch { expected: u32, actual: String },

    #[error("expansion budget exceeded ({needed} > {budget})")]
    BudgetExceeded { needed: String, budget: u64 },

    #[error("invalid center: {0}")]
    InvalidCenter(String),

    #[error("frame element {0} cannot be made a coordinate by a polynomial substitution")]
    NonPolynomialCoordinateChange(String),

    #[error("argument out of range: {0}")]
    InvalidArgument(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
