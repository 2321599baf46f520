use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("index {index} out of range for {what}")]
    OutOfRange { what: &'static str, index: usize },

    #[error("duplicate identifier `{0}`")]
    Duplicate(String),

    #[error("unresolved identifier `{name}` ({context})")]
    Unresolved { name: String, context: String },

    #[error("shape mismatch: {0}")]
    Shape(String),

    /// Input failed the law checker required by an operation's precondition.
    #[error("invalid {what}: failed {failed}")]
    Invalid { what: &'static str, failed: String },

    #[error("{what}: {needed} candidates exceed the cap of {cap}")]
    CapExceeded {
        what: String,
        needed: u128,
        cap: usize,
    },
}

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }
}
