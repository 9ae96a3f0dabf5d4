//! Exact mixed metric dimension toolkit.
//!
//! Two elements of `V(G) ∪ E(G)` are resolved by a vertex `w` when their
//! distances to `w` differ, where the distance from an edge `uv` to `w` is
//! `min(d(u, w), d(v, w))`. A vertex set resolving every pair is a mixed
//! resolving set; the smallest size of one is `mdim(G)`.
//!
//! The crate is split into:
//!
//! * [`graph`]: bitmask graphs, BFS distances and mixed distances,
//! * [`structure`]: maximal neighbors, universal and cut vertices, blocks,
//! * [`solver`]: resolving-set checks, the exact search, greedy upper bound
//!   and closed forms for the graph classes where `mdim` is known,
//! * [`constructions`]: strong products, edge amalgamation and graph families,
//! * [`harness`]: exhaustive and seeded verification suites,
//! * [`formats`] and [`cli`]: graph6 / edge-list / DOT I/O and the `mdim` binary.

pub mod cli;
pub mod constructions;
mod error;
pub mod formats;
pub mod graph;
pub mod harness;
pub mod solver;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{distance_matrix, mixed_distance, DistanceData, Edge, Graph, MixedElement, VertexSet};
pub use solver::{mdim_exact, MdimResult};
