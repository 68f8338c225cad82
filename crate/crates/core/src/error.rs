use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: dangling ids, wrong table sizes, duplicate names.
    #[error("invalid input: {0}")]
    Input(String),

    /// Input parsed but fails the axioms of the structure it claims to be.
    #[error("{structure} axiom `{axiom}` fails at {witness}")]
    Axiom {
        structure: &'static str,
        axiom: String,
        witness: String,
    },

    /// The algebra is not Frobenius where a Frobenius algebra was required.
    #[error("not a Frobenius algebra: {0}")]
    NotFrobenius(String),

    #[error("subobjects live in different parents")]
    ParentMismatch,

    #[error("invalid shape: {0}")]
    Shape(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
