//! Parameterized triangle enumeration.
//!
//! Graphs are simple and undirected with dense vertex ids. Every solver
//! returns a [`TriangleSet`] of canonical triples; [`oracle`] holds the
//! brute-force references they are checked against.

pub mod bipartite;
pub mod chordal;
pub mod cliquewidth;
pub mod cotree;
pub mod degeneracy;
pub mod deletion;
pub mod error;
pub mod forest;
pub mod generate;
pub mod graph;
pub mod hardness;
pub mod kernels;
pub mod modules;
pub mod oracle;
pub mod shared;
pub mod solvers;
pub mod triangle;

pub use error::{ChordalWitness, Error, KExprError, ParseError};
pub use graph::{parse_edge_list, parse_edge_list_str, Edge, Graph, Vertex};
pub use triangle::{Triangle, TriangleSet};
