use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two surds with different squarefree radicands were added; the sum is
    /// not a single surd. Retry through `ApproxScalar`.
    #[error("incompatible radicands: √{left} and √{right} cannot be summed exactly")]
    IncompatibleRadicands { left: BigUint, right: BigUint },

    #[error("negative radicand: square roots of negative values are not supported")]
    NegativeRadicand,

    #[error("division by zero")]
    DivisionByZero,

    #[error("({l}, {m}, {n}) is not a Pythagorean triple: {l}² + {m}² ≠ {n}²")]
    NotPythagorean { l: u64, m: u64, n: u64 },

    #[error("invalid triangle ({0}): sides must be positive and satisfy the strict triangle inequality")]
    InvalidTriangle(String),

    #[error("invalid quadrilateral ({0}): each side must be positive and shorter than the sum of the other three")]
    InvalidQuadrilateral(String),

    #[error("invalid diagonal ({0}): both triangles on the diagonal must satisfy the strict triangle inequality")]
    InvalidDiagonal(String),

    #[error("invalid trapezium: {0}")]
    InvalidTrapezium(String),

    #[error("degenerate rhombus: first diagonal {d1} must satisfy 0 < d1 < 2·side (side {side})")]
    DegenerateRhombus { side: String, d1: String },

    #[error("first three points are collinear within tolerance")]
    DegenerateCollinear,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
