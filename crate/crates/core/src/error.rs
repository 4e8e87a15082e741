use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("arity mismatch: expected {expected} arguments, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("basis index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("duplicate structure constant for tuple {tuple:?} and target {target}")]
    DuplicateConstant { tuple: Vec<usize>, target: usize },

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("fundamental identity fails ({count} violation(s) found)")]
    IdentityViolated { count: usize },

    #[error("identity check needs {tuples} tuple evaluations, above the limit of {limit}; pass force to override")]
    TooManyTuples { tuples: u128, limit: u128 },

    #[error("enumeration of {count} sequences exceeds the cap of {cap}")]
    EnumerationCap { count: u128, cap: u128 },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("unknown bound id `{0}`")]
    UnknownBound(String),

    #[error("missing input for constraint {id}: {what}")]
    MissingExtras { id: String, what: String },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),

    #[error("bad builtin parameter: {0}")]
    BadBuiltinParam(String),
}
