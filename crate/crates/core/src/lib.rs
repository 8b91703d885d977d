//! Small multicolor path Ramsey numbers.
//!
//! The crate decides whether the edges of `K_N` admit a *good* coloring, one
//! in which no color class contains its forbidden path or matching, and
//! builds on that to compute Ramsey numbers `R(G_1, …, G_t)` exactly at desk
//! scale. Alongside the search it provides exact whole-graph oracles, the
//! extremal edge bounds for path-free graphs, and generators for the explicit
//! lower-bound colorings.

pub mod constructions;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod oracles;
pub mod search;
pub mod witness;

pub use error::{Error, Result};
pub use graph::{complete_graph, edge_index, EdgeColoring, Graph, Pattern, TargetSpec};
