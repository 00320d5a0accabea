use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of a function or type.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series or quadrature did not reach its target accuracy.
    #[error("evaluation failed: {what} (after {terms} terms, partial value {partial:e})")]
    Evaluation { what: String, terms: usize, partial: f64 },

    #[error("syntax error at offset {offset}: expected {}, found {found}", expected.join(" or "))]
    Syntax { offset: usize, expected: Vec<String>, found: String },

    #[error("unknown identifier `{name}` at offset {offset}")]
    UnknownIdent { name: String, offset: usize },

    /// Expression undefined at the evaluation point; `node` is the printed subtree.
    #[error("cannot evaluate `{node}`: {detail}")]
    ExprDomain { node: String, detail: String },

    #[error("invalid problem: {0}")]
    Problem(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("singular system at row {row}")]
    Singular { row: usize },

    #[error("{what} did not converge; history: {history:?}")]
    NonConvergence { what: String, history: Vec<f64> },

    #[error("missing config key `{0}`")]
    MissingKey(String),

    #[error("bad value for `{key}`: {msg}")]
    BadValue { key: String, msg: String },

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
