use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("space mismatch: {0}")]
    TagMismatch(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed sequence descriptor: {0}")]
    MalformedSequence(String),

    #[error("family member {index} is not dense")]
    NotDense { index: usize },

    #[error("input does not cover the ground set: {0} is uncovered")]
    NotCovering(String),

    #[error("operation is not applicable to this space: {0}")]
    Inapplicable(String),
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }

    pub fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
