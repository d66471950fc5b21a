use thiserror::Error;

/// Errors shared across the whole engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    ZeroDivision,
    #[error("operands belong to different coefficient fields")]
    FieldMismatch,
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("quotient by the ideal is not a field: {0}")]
    NotAField(String),
    #[error("operation requires a univariate ring")]
    NotUnivariate,
    #[error("no field element avoids all supplied primes")]
    NoFieldElementLeft,
    #[error("morphism is not well-defined on the presented modules")]
    NotWellDefined,
    #[error("morphism is not an isomorphism: {0}")]
    NotIso(String),
    #[error("search budget exhausted after {candidates} candidates")]
    Inconclusive { candidates: u64 },
    #[error("internal verification failed: {0}")]
    CertificateInvalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
