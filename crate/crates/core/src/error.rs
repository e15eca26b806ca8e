use thiserror::Error;

/// Errors produced by graph construction, parsing and index evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid degree pair ({0}, {1}): degrees on an edge must be positive")]
    InvalidDegree(u64, u64),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{family}: parameters r={r}, s={s} out of domain ({constraint})")]
    Domain {
        family: &'static str,
        r: u64,
        s: u64,
        constraint: &'static str,
    },

    #[error("unknown family '{0}'")]
    UnknownFamily(String),

    #[error("unknown index kind '{0}'")]
    UnknownKind(String),

    #[error("no published formula for {kind} of {family}")]
    NoStatement {
        family: &'static str,
        kind: &'static str,
    },

    #[error("errata data: {0}")]
    Errata(String),
}

pub type Result<T> = std::result::Result<T, Error>;
