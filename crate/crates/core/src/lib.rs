//! Unit acquisition on graphs.
//!
//! Every vertex starts with weight 1; a move sends one unit of weight to a
//! neighbor currently holding at least as much as the sender. The unit
//! acquisition number of a graph is the smallest number of occupied
//! vertices reachable this way. This crate provides the move engine and
//! protocol format, an exact solver over the reachable configuration
//! space, constructive protocol synthesizers, a caterpillar-specific exact
//! algorithm, generators for the graph families of interest, and a
//! desk-scale verification harness over all of it.

// Vertex ids are dense indices; loops over `0..n` that index per-vertex
// tables read better here than iterator chains.
#![allow(clippy::needless_range_loop)]

pub mod caterpillar;
pub mod engine;
pub mod generators;
pub mod graph;
pub mod hungarian;
pub mod solver;
pub mod synthesis;
pub mod verify;

pub use engine::{Protocol, UnitMove};
pub use graph::{Graph, RootedTreeView, WeightConfig};
