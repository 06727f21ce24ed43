use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {0} exceeds the supported bound 65536")]
    PrimeTooLarge(u64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// The semistandard tableaux failed to give a basis of a weight space.
    /// This is an internal inconsistency, never a property of the input.
    #[error("SST basis violated for mu={mu}, alpha={alpha}")]
    SstBasisViolated { mu: String, alpha: String },
    #[error("hypotheses violated: {0}")]
    HypothesisViolated(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
