use thiserror::Error;

/// Errors raised while building or checking presentations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate {kind} `{name}`")]
    Duplicate { kind: &'static str, name: String },
    #[error("relation `{0}` is not a composable path")]
    NotComposable(String),
    #[error("relation `{0}` has length < 2")]
    ShortRelation(String),
    #[error("ideal is not admissible: relation-free cycle through {0}")]
    NotAdmissible(String),
    #[error("no sign functions exist: {0}")]
    SignsInfeasible(String),
    #[error("invalid sign assignment: {0}")]
    InvalidSigns(String),
    #[error("presentation is not a string algebra: {0}")]
    NotStringAlgebra(String),
    #[error("cannot parse string `{text}`: {message}")]
    BadString { text: String, message: String },
    #[error("json: {0}")]
    Json(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;
