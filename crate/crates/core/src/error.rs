use thiserror::Error;

/// Errors produced by construction, height computation and capability queries.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("m-height is infinite, no finite ratio exists")]
    NoFiniteRatio,
}

impl Error {
    /// Stable kebab-case tag for machine-readable output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidParameter(_) => "invalid-parameter",
            Error::UnsupportedFamily(_) => "unsupported-family",
            Error::Capacity(_) => "capacity",
            Error::NoFiniteRatio => "no-finite-ratio",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
