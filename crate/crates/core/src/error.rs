use thiserror::Error;

use crate::graph::Vertex;

/// Errors raised while reading the edge-list format.
#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: self-loop on vertex {label}")]
    SelfLoop { line: usize, label: u64 },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: u64, v: u64 },
    #[error("line {line}: expected two non-negative integers, got {content:?}")]
    Malformed { line: usize, content: String },
    #[error("line {line}: {source}")]
    Io {
        line: usize,
        #[source]
        source: std::io::Error,
    },
}

/// Errors raised while reading a k-expression.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum KExprError {
    #[error("syntax error at {line}:{col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("eta({label},{label}) at {line}:{col}: edge insertion needs two distinct labels")]
    SameLabelEta { label: u32, line: usize, col: usize },
}

/// Precondition violations and structural failures of the algorithms.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop on vertex {vertex}")]
    SelfLoop { vertex: Vertex },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: Vertex, v: Vertex },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("edge {{{u}, {v}}} has no endpoint in the given set")]
    EdgeOutsideD { u: Vertex, v: Vertex },
    #[error("not chordal: {0}")]
    NotChordal(ChordalWitness),
    #[error("not a cograph: induced P4 {0:?}")]
    NotCograph([Vertex; 4]),
    #[error("not bipartite: odd cycle {0:?}")]
    NotBipartite(Vec<Vertex>),
    #[error("not a feedback edge set: cycle {0:?} survives")]
    NotFeedbackSet(Vec<Vertex>),
    #[error("not a deletion set: G - D has degeneracy {actual}, expected at most {expected}")]
    NotDeletionSet { expected: usize, actual: usize },
    #[error("deletion set of size {size} exceeds the limit of {limit}; use a different solver")]
    ParameterTooLarge { size: usize, limit: usize },
    #[error("{what} supports at most {limit} vertices, got {n}")]
    Unsupported {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("cotree does not describe the graph: {0}")]
    TreeGraphMismatch(String),
}

/// Why a graph was rejected as chordal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChordalWitness {
    /// An induced cycle of length at least four.
    ChordlessCycle(Vec<Vertex>),
    /// `vertex` has two later neighbors in the candidate ordering that are
    /// not adjacent.
    FailedVertex {
        vertex: Vertex,
        left: Vertex,
        right: Vertex,
    },
}

impl std::fmt::Display for ChordalWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ChordalWitness::ChordlessCycle(c) => write!(f, "chordless cycle {c:?}"),
            ChordalWitness::FailedVertex {
                vertex,
                left,
                right,
            } => write!(
                f,
                "vertex {vertex} has non-adjacent later neighbors {left} and {right}"
            ),
        }
    }
}
