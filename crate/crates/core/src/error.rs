use thiserror::Error;

/// Errors raised by the library. Every variant is a domain error: the
/// operation was well-formed but its arguments fall outside its contract.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected a positive value, got {0}")]
    NonPositive(String),
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("progression {first} + k*{step} has gcd {gcd} != 1")]
    BadProgression { first: String, step: String, gcd: String },
    #[error("no witness found within {limit} steps: {what}")]
    NotFoundWithinLimit { what: String, limit: u64 },
    #[error("generators have gcd {0} != 1, so the monoid is not cofinite")]
    NotCofinite(String),
    #[error("empty generating set")]
    EmptyGenerators,
    #[error("operation is undefined on the trivial monoid")]
    TrivialMonoid,
    #[error("value too large for this computation: {0}")]
    TooLarge(String),
    #[error("index {index} is out of range (length {len})")]
    BadIndex { index: u64, len: u64 },
    #[error("density cannot be established for {0}")]
    NotDense(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("the monoid generated by powers of {0} is not atomic")]
    NotAtomic(String),
    #[error("factorization has multiplicity {have} at {atom}, need at least {need}")]
    InsufficientMultiplicity { atom: String, have: String, need: String },
    #[error("gcd of numerators is 1")]
    GcdOne,
    #[error("unknown claim id {0}")]
    UnknownClaim(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("exact verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
