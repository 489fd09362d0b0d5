use thiserror::Error;

use crate::graph::{PairKey, ValidationReport, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree ({mu}, {nu}) is not a Pythagorean fuzzy degree")]
    InvalidDegree { mu: f64, nu: f64 },

    #[error("invalid vertex label {0:?}")]
    InvalidLabel(String),

    #[error("duplicate vertex {0}")]
    DuplicateVertex(VertexId),

    #[error("duplicate edge {0}")]
    DuplicateEdge(PairKey),

    #[error("self-loop on {0} (graphs are simple)")]
    SelfLoop(VertexId),

    #[error("edge {edge} references undeclared vertex {vertex}")]
    DanglingEdge { edge: PairKey, vertex: VertexId },

    #[error("graph violates the Pythagorean fuzzy graph constraints ({} violation(s))", .0.violations.len())]
    ConstraintViolation(ValidationReport),

    #[error("malformed document: {0}")]
    MalformedDocument(String),

    #[error("composite label clash: {0}")]
    LabelClash(String),

    #[error("join requires disjoint vertex sets; {0} appears in both")]
    JoinOverlap(VertexId),

    #[error("graph is not strong (offending pair {0})")]
    NotStrong(PairKey),

    #[error("graph is not complete (offending pair {0})")]
    NotComplete(PairKey),

    #[error("morphism search over {vertices} vertices exceeds the cap of {cap}")]
    SearchCapExceeded { vertices: usize, cap: usize },

    #[error("mapping references unknown vertex {0}")]
    UnknownVertex(VertexId),

    #[error("mapping is not total: {0} has no image")]
    PartialMap(VertexId),

    #[error("unknown {what} {name:?}")]
    UnknownName { what: &'static str, name: String },

    #[error("operation {op} expects {expected} input graph(s), got {got}")]
    Arity {
        op: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("internal invariant broken: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidDegree { .. } => "InvalidDegree",
            Error::InvalidLabel(_) => "InvalidLabel",
            Error::DuplicateVertex(_) => "DuplicateVertex",
            Error::DuplicateEdge(_) => "DuplicateEdge",
            Error::SelfLoop(_) => "SelfLoop",
            Error::DanglingEdge { .. } => "DanglingEdge",
            Error::ConstraintViolation(_) => "ConstraintViolation",
            Error::MalformedDocument(_) => "MalformedDocument",
            Error::LabelClash(_) => "LabelClash",
            Error::JoinOverlap(_) => "JoinOverlap",
            Error::NotStrong(_) => "NotStrong",
            Error::NotComplete(_) => "NotComplete",
            Error::SearchCapExceeded { .. } => "SearchCapExceeded",
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::PartialMap(_) => "PartialMap",
            Error::UnknownName { .. } => "UnknownName",
            Error::Arity { .. } => "Arity",
            Error::InvalidConfig(_) => "InvalidConfig",
            Error::Internal(_) => "Internal",
        }
    }
}
