use thiserror::Error;

/// Errors raised while building parameters, evaluating series or running checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("denominator factor vanished at series index {0}")]
    DenominatorVanished(usize),
    #[error("vanishing denominator in {what} at index {index}")]
    VanishingDenominator { what: &'static str, index: usize },
    #[error("evaluation point must be nonzero")]
    ZeroArgument,
    #[error("laurent polynomial is not symmetric under z -> 1/z (coefficient of z^{0} differs)")]
    NotSymmetric(i64),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("non-positive weight at x = {0}")]
    NonPositiveWeight(usize),
    #[error("inadmissible point: {0}")]
    InadmissiblePoint(String),
    #[error("series or quadrature did not converge: {0}")]
    NonConvergence(String),
    #[error("non-finite floating point value in {0}")]
    NonFinite(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParams(msg.into()))
}
