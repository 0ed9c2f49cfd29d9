use alloc::boxed::Box;
use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cannot parse braid token `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A summit-set (or other) exploration hit its configured element budget.
    #[error("resource budget exceeded: {what} grew past {budget} elements")]
    Budget { what: &'static str, budget: usize },

    #[error("{0} strands exceed the supported maximum of {max}", max = crate::garside::MAX_STRANDS)]
    TooManyStrands(usize),

    #[error("{stage}: {inner}")]
    Stage { stage: &'static str, inner: Box<Error> },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn at_stage(self, stage: &'static str) -> Self {
        Error::Stage { stage, inner: Box::new(self) }
    }

    /// The underlying error with stage labels removed.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { inner, .. } => inner.root(),
            other => other,
        }
    }
}
