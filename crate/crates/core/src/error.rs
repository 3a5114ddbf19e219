use std::path::PathBuf;

use thiserror::Error;

use crate::rules::RuleId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at offset {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("empty input")]
    EmptyInput,

    #[error("invalid atom name `{0}`")]
    InvalidAtom(String),

    #[error("literal set is inconsistent: atom `{0}` occurs with both polarities")]
    InconsistentLiteralSet(String),

    #[error("assignment does not cover atom `{0}`")]
    UncoveredAtom(String),

    #[error("query mentions {count} atoms, more than the supported maximum of {max}")]
    TooManyAtoms { count: usize, max: usize },

    #[error("variable set must not be empty")]
    EmptyVariableSet,

    #[error("invalid clause: {0}")]
    InvalidClause(String),

    #[error("duplicate action label `{0}`")]
    DuplicateLabel(String),

    #[error("malformed {rule} instance: {message}")]
    MalformedInstance { rule: RuleId, message: String },

    #[error("rule {rule} under {kind} entailment was violated by a generated instance; this is a bug")]
    RuleViolation { rule: RuleId, kind: String },

    #[error("line {line}: {inner}")]
    AtLine { line: usize, inner: Box<Error> },

    #[error("{path}:{line}: {message}")]
    Input {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
