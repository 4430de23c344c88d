use std::fmt;

use thiserror::Error;

use crate::instance::Violation;
use crate::rayshoot::RayShootError;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid instance: {}", join_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("vertex {} has {bottoms} bottom nodes; a plain RDV instance needs exactly one", .vertex + 1)]
    NotPlainRdv { vertex: usize, bottoms: usize },
    #[error("adjacency query needs two distinct vertices, got {} twice", .0 + 1)]
    SameVertex(usize),
    #[error("vertex index {index} out of range for {len} vertices")]
    VertexOutOfRange { index: usize, len: usize },
    #[error("exhaustive search limited to {bound} vertices, instance has {n}")]
    OracleBound { n: usize, bound: usize },
    #[error("malformed interval #{index}: lo {lo} > hi {hi}")]
    MalformedInterval { index: usize, lo: i64, hi: i64 },
    #[error("invalid generator config: {0}")]
    Config(String),
    #[error(transparent)]
    RayShoot(#[from] RayShootError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

/// Parse failure in the instance text format, with the 1-based line it occurred on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
