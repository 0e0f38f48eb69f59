use thiserror::Error;

use crate::kind::ParameterKind;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("vertex index {index} out of range for graph of order {n}")]
    VertexOutOfRange { index: usize, n: usize },

    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),

    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },

    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),

    #[error("graph is disconnected; {0} is undefined")]
    Disconnected(&'static str),

    #[error("graph has an isolated vertex; {0} requires an isolate-free graph")]
    IsolatedVertex(&'static str),

    #[error("{family} needs n >= {min}, got {got}")]
    BelowMinimum {
        family: &'static str,
        min: usize,
        got: usize,
    },

    #[error("invalid root: {0}")]
    InvalidRoot(String),

    #[error("{kind} is not supported by {operation}")]
    UnsupportedKind {
        kind: ParameterKind,
        operation: &'static str,
    },

    #[error("level {level} outside the range {min}.. of the {kind} construction")]
    LevelOutOfRange { kind: ParameterKind, level: u32, min: u32 },

    #[error("unknown parameter kind {0:?}")]
    UnknownKind(String),

    #[error("graph of order {n} exceeds the exhaustive ceiling of {ceiling} vertices")]
    ExhaustiveCeiling { n: usize, ceiling: usize },

    #[error("certificate digest {found} does not match graph digest {expected}")]
    DigestMismatch { expected: String, found: String },

    #[error("no graph satisfying the filters after {0} attempts")]
    FilterUnsatisfiable(usize),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Parse {
            line: err.line(),
            column: err.column(),
            message: err.to_string(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
