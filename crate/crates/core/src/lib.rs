//! Exact machinery for rainbow S-trees and k-rainbow colorings of small graphs.
//!
//! - [`graph`]: simple graphs, Steiner trees, canonical codes.
//! - [`constructions`]: graph families together with their explicit colorings.
//! - [`rainbow`]: rainbow S-tree search, k-rainbow verification and exact `rx_k`.
//! - [`search`]: isomorphism-reduced enumeration and exact values of `t(n, k, l)`.

pub mod coloring;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod rainbow;
pub mod search;

pub use coloring::EdgeColoring;
pub use constructions::{ColoredConstruction, ConstructionSpec};
pub use error::{Error, Result};
pub use graph::{k_subsets, EdgeSubset, Girth, Graph, VertexSet};
pub use rainbow::{
    exists_rainbow_s_tree, is_rainbow_tree, rx_at_most, rx_exact, steiner_k_diameter,
    verify_k_rainbow, RxResult, SearchLimits, VerificationReport,
};
pub use search::{check_monotone_chain, enumerate_connected, t_min, SearchResult};
