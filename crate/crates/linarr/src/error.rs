use thiserror::Error;

/// Errors produced by exact arithmetic, geometry and verification routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("field mismatch")]
    FieldMismatch,

    #[error("division by zero")]
    DivisionByZero,

    /// Inverting a residue that shares a nonconstant factor with the modulus.
    /// This is the lazy witness that a user-supplied modulus is reducible.
    #[error("reducible modulus witness: gcd has degree {0}")]
    ReducibleModulus(usize),

    #[error("variable mismatch")]
    VariableMismatch,

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("not divisible")]
    NotDivisible,

    #[error("singular matrix")]
    SingularMatrix,

    #[error("proportional linear forms define no intersection point")]
    ProportionalForms,

    #[error("pencil at {0}: every line passes through the point")]
    Pencil(String),

    #[error("identical points have no joining line")]
    IdenticalPoints,

    #[error("{0} undefined: {1}")]
    Undefined(&'static str, String),

    #[error("input is not a syzygy: {0}")]
    NotASyzygy(String),

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("unknown suite id: {0}")]
    UnknownSuite(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// Two independent routes to the same quantity disagreed. Always a bug
    /// or a genuine counterexample; never ignored.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
