use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system type: {0}")]
    InvalidType(String),

    #[error("not a root of {system}: {root}")]
    NotARoot { system: String, root: String },

    #[error("{0} is not a long root")]
    NotLong(String),

    #[error("{0} is not a long simple root")]
    NotLongSimple(String),

    #[error("set is not biconvex: {0}")]
    NotBiconvex(String),

    #[error("not an abelian ideal: {0}")]
    NotAbelian(String),

    #[error("not an upper ideal: {0}")]
    NotUpperIdeal(String),

    #[error("empty ideal has no rootlet")]
    EmptyIdeal,

    /// A method or construction was called outside the hypotheses it is defined under.
    #[error("domain error: {0}")]
    Domain(String),

    /// The engine contradicted itself; always a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("unknown check id: {0}")]
    UnknownCheck(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
