use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("singular matrix")]
    SingularMatrix,
    #[error("zero vector has no projective meaning")]
    ZeroVector,
    #[error("matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("not an elliptic polarity: {0}")]
    NotElliptic(String),
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("degenerate box: {0}")]
    DegenerateBox(String),
    #[error("parameters ({0}) are not in the good region")]
    NotInTheta(String),
    #[error("depth {0} exceeds the limit {1}")]
    DepthLimit(usize, usize),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("certification failed: {0}")]
    CertificationFailed(String),
    #[error("no polarity conjugates the generators (smallest residual {0:e})")]
    NoPolarity(f64),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
