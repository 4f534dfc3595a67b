use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("field with {0} elements exceeds the 2^24 table limit")]
    FieldTooLarge(u64),
    #[error("extension degree r must be at least 2, got {0}")]
    BadExtensionDegree(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("element {0} does not lie in the base subfield")]
    NotInSubfield(u32),
    #[error("operation requires an affine point, got the point at infinity")]
    PointAtInfinity,
    #[error("identical points do not determine a line")]
    IdenticalPoints,
    #[error("function is identically zero on the curve")]
    ZeroFunction,
    #[error("parameter {name}={value} outside valid range {range}")]
    OutOfRange {
        name: &'static str,
        value: i64,
        range: String,
    },
    #[error("divisor is not reduced (a point carries multiplicity > 1)")]
    NonReducedDivisor,
    #[error("divisor touches a forbidden point: {0}")]
    BadDivisorSupport(String),
    #[error("cannot evaluate an empty function space")]
    EmptyBasis,
    #[error("evaluation point coincides with a twist-support point")]
    EvalAtTwistPoint,
    #[error("exhaustive enumeration guard exceeded: {0} codewords")]
    EnumerationTooLarge(u128),
    #[error("codes have mismatched length or field")]
    CodeMismatch,
    #[error("scaling vector has a zero component at position {0}")]
    ZeroScaleComponent(usize),
    #[error("no column labelled with the requested point")]
    MissingColumn,
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
