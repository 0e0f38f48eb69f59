//! Fractal cubic networks, rooted products, and exact domination and
//! resolving parameters on small graphs.

pub mod bitset;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod kind;
pub mod solver;
pub mod table;
pub mod verify;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use generators::{FcnLevel, RootSpec};
pub use graph::Graph;
pub use kind::ParameterKind;
pub use solver::{min_param, Budget, Solver, SolverResult, Status};
pub use verify::Certificate;
