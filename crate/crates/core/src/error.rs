use thiserror::Error;

/// Failure categories shared by every stage of the screening pipeline.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Input data is missing, unreadable or unusable.
    #[error("data error: {0}")]
    Data(String),
    /// A numerical kernel failed to converge.
    #[error("numeric error: {0}")]
    Numeric(String),
    /// A configured resource budget would be exceeded.
    #[error("capacity error: {0}")]
    Capacity(String),
    /// The operation is undefined for the given state.
    #[error("precondition error: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn data(msg: impl Into<String>) -> Self {
        Error::Data(msg.into())
    }

    /// Process exit status used by the command-line front end.
    ///
    /// Domain errors stem from invalid parameters and count as usage errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Precondition(_) => 2,
            Error::Data(_) => 3,
            Error::Numeric(_) | Error::Capacity(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
