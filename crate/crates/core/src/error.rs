use thiserror::Error;

/// Errors raised by field, polynomial and dynamics operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported; the characteristic must be odd")]
    EvenCharacteristic,
    #[error("field too large: {0}")]
    FieldTooLarge(String),
    #[error("extension towers are limited to two layers above the prime field")]
    TowerTooDeep,
    #[error("modulus is reducible over the base field")]
    ReducibleModulus,
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    ContextMismatch,
    #[error("{0} is not a subfield in the tower of {1}")]
    NotASubfield(String, String),
    #[error("element index {0} out of range for a field of order {1}")]
    InvalidElement(u64, u64),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("operation undefined for a constant polynomial")]
    ConstantPolynomial,
    #[error("composition degree {degree} exceeds the cap {cap}")]
    DegreeCapExceeded { degree: u128, cap: usize },
    #[error("derivative is a nonzero constant")]
    ConstantDerivative,
    #[error("derivative is identically zero")]
    ZeroDerivative,
    #[error("iterate f^({0}) is reducible")]
    ReducibleIterate(u32),
    #[error("wrong characteristic: expected {expected}, found {found}")]
    WrongCharacteristic { expected: u64, found: u64 },
    #[error("wrong degree: {0}")]
    WrongDegree(String),
    #[error("wrong shape: {0}")]
    WrongShape(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("work budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
