//! Localization game on graphs: graph utilities, distance colorings, the row
//! structure of candidate sets, an exact game-value solver, executable cop
//! strategies for trees, and the verification suites built on top of them.
//!
//! Vertices are `0..n` internally; every human-readable output labels them
//! `1..=n`.

pub mod coloring;
pub mod error;
pub mod graph;
pub mod solver;
pub mod strategy;
pub mod structure;
pub mod verify;
pub mod vertex_set;

pub use coloring::{distance_coloring, distance_colorings, Coloring, Partition};
pub use error::{Error, Result};
pub use graph::{distance_matrix, DistanceMatrix, Graph, NamedGraph};
pub use solver::{game_value, metric_dimension, zeta, GameValue, Solver};
pub use structure::{build_structure, reduce_structure, GameStructure, ReducedGameStructure};
pub use vertex_set::VertexSet;

/// Largest supported vertex count (vertex sets are 64-bit masks).
pub const MAX_VERTICES: usize = 64;
