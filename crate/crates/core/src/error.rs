use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("not an orbit label: {0}")]
    InvalidLabel(String),

    /// The three semi-simplicity criteria returned different answers.
    #[error(
        "criteria disagree: roots={roots}, hecke={hecke}, cherednik={cherednik}, counting={counting}"
    )]
    CriteriaDisagreement {
        roots: bool,
        hecke: bool,
        cherednik: bool,
        counting: bool,
    },
}

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
