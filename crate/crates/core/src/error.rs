use thiserror::Error;

/// Errors raised by the algebra kernel.
///
/// Every variant except [`Error::InvariantViolation`] signals a caller mistake
/// (a violated precondition). An invariant violation means the kernel reached
/// a state that the underlying theory rules out, i.e. a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent vectors have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("operands live in different coefficient domains or ambient rings")]
    DomainMismatch,
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("expected a non-constant polynomial")]
    ConstantPolynomial,
    #[error("polynomial is reducible over the top field: {0}")]
    Reducible(String),
    #[error("polynomials are not coprime")]
    NotCoprime,
    #[error("specialization point is a root of the specialization locus")]
    LocusRoot,
    #[error("the ideal is the whole ring")]
    TrivialIdeal,
    #[error("solver requires positive characteristic")]
    UnsupportedCharacteristic,
    #[error("invalid argument: {0}")]
    Usage(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
