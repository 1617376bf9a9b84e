//! Stress-based graph drawing and stress-derived message passing.
//!
//! The crate is organized around a small set of immutable value types:
//!
//! - [`Graph`]: undirected sparse graph in CSR form, optionally augmented
//!   with virtual pivot nodes.
//! - [`DistanceTable`]: BFS hop distances from a set of source nodes.
//! - [`Operator`]: a row-structured propagation weight matrix over the
//!   adjacency pattern plus self-loops.
//! - [`Layout`]: an n-by-m coordinate matrix produced by stress majorization.
//! - [`PivotSet`] / [`AnchorSets`]: representative nodes with control
//!   regions and adaptive weights.
//! - [`EmbeddingMatrix`]: dense node features flowing through the
//!   propagation and training operations.
//!
//! On top of these sit the layout solvers (binary, full and sparse stress),
//! the attractive and repulsive propagation models, and a deterministic
//! training harness (linear probes, StressGCN, link/pair prediction).

pub mod cli;
mod dist;
mod error;
pub mod graph;
pub mod io;
pub mod layout;
pub mod learn;
mod mat;
pub mod operator;
pub mod pivots;
pub mod propagate;
pub mod repulse;
pub mod svg;

pub use dist::{DistanceTable, UNREACHABLE};
pub use error::{Error, Result};
pub use graph::{CavemanGraph, Graph, LoadedGraph};
pub use layout::{Layout, LayoutInit, StressMode, StressProblem};
pub use mat::{EmbeddingMatrix, Mat, Provenance};
pub use operator::{Operator, OperatorVariant};
pub use pivots::{AnchorSets, PivotSet};
pub use propagate::PropagationConfig;
pub use repulse::{CombineRule, RepulsiveConfig, RepulsiveVariant};
