use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("invalid interval alpha({i},{j}) in dimension {n}")]
    InvalidInterval { n: usize, i: usize, j: usize },

    #[error("invalid family: {0}")]
    InvalidSpec(String),

    #[error("invalid dimension {n}: {reason}")]
    InvalidDimension { n: usize, reason: &'static str },

    #[error("vector is not in the zero-sum subspace (coordinate sum {sum})")]
    NotInZeroSumSubspace { sum: String },

    #[error("point does not satisfy the residue-class sums of the fixed family (n={n}, i={i})")]
    NotInResidueSpace { n: usize, i: usize },

    #[error("degenerate simplex: {0}")]
    DegenerateSimplex(String),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),

    #[error("unknown claim '{0}'")]
    UnknownClaim(String),

    #[error("parameter {param}={value} out of bounds for {claim}: {limit}")]
    OutOfBounds {
        claim: String,
        param: &'static str,
        value: i64,
        limit: String,
    },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("value does not fit in a machine integer during {0}")]
    Overflow(&'static str),

    #[error("too many vertices ({0}); at most {max} supported", max = crate::hull::MAX_VERTICES)]
    TooManyVertices(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
