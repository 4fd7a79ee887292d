use thiserror::Error;

/// Errors raised by the field, polynomial and boomerang machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    CompositeModulus(u64),
    #[error("modulus {0} is reducible over the base field")]
    ReducibleModulus(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not a square")]
    NotASquare,
    #[error("operand does not belong to this field")]
    CtxMismatch,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not divisible by z - x")]
    NotDivisible,
    #[error("c must be nonzero")]
    CZero,
    #[error("a must be nonzero")]
    AZero,
    #[error("function is not a permutation of the field")]
    NotAPermutation,
    #[error("work budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("no applicable bound: {0}")]
    NoBound(String),
    #[error("degenerate (collinear) triangle")]
    DegenerateTriangle,
    #[error("certificate inapplicable: {0}")]
    Inapplicable(String),
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("fixture {name} mismatch: {diff}")]
    FixtureMismatch { name: String, diff: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
