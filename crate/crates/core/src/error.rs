use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("divisor has zero constant term")]
    ZeroConstantTerm,
    #[error("bad constant term: {0}")]
    BadConstantTerm(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("species `{0}` is not linearized")]
    NotLinearized(String),
    #[error("`{0}` is not a derangement of the reference order")]
    NotADerangement(String),
    #[error("morphism `{0}` is not injective at size {1}")]
    NotInjective(String, usize),
    #[error("morphism `{0}` is not surjective at size {1}")]
    NotSurjective(String, usize),
    #[error("Hopf monoid `{0}` is not cocommutative")]
    NotCocommutative(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("invalid label set: {0}")]
    InvalidLabels(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
}

pub type Result<T> = std::result::Result<T, Error>;
