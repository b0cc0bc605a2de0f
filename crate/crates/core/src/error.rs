use thiserror::Error;

/// Errors raised by the algebra, topology and sheaf layers.
///
/// Search exhaustion is not an error: it is reported through the outcome
/// enums (`CertificateOutcome`, `SubcoverOutcome`, `GlueOutcome`).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("{0}: the zero polynomial is not allowed here")]
    ZeroPolynomial(&'static str),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("invalid search bounds: {0}")]
    InvalidBounds(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("the given opens do not cover D(f)")]
    NotACover,
    #[error("local data is not locally fractional: {0}")]
    NotLocallyFractional(String),
    #[error("not a section: {0}")]
    NotASection(String),
    #[error("prime lies outside the domain of the section")]
    OutOfDomain,
    #[error("sections or fractions live over different basic opens")]
    DomainMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
