//! Spanning trees with few leaves in highly connected graphs.
//!
//! The crate provides the graph substrate (bit-packed adjacency, graph6 and
//! edge-list I/O, connectivity, cliques), the degree-sum closure, spectral
//! radii with an exact quotient oracle for the extremal family, exact and
//! constructive spanning-tree search, and predicates that check the
//! associated edge-count and spectral conditions over graph corpora.

pub mod closure;
pub mod error;
pub mod graph;
pub mod scalar;
pub mod spectral;
pub mod trees;
pub mod verify;

pub use closure::{closure, is_l_closed, AddedEdge, ClosureTrace};
pub use error::{Error, Result};
pub use graph::{extremal_graph, is_extremal, parse_graph6, to_graph6, Graph, Params};
pub use scalar::{Exact, Real};
pub use spectral::{extremal_rho_quotient, hsf_nikiforov_bound, spectral_radius, SpectralEstimate};
pub use trees::{has_k_ended_tree, min_leaf_spanning_tree, TreeWitness};

/// Double-precision spectral estimate.
pub type SpectralEstimateF64 = SpectralEstimate<f64>;
/// Single-precision spectral estimate.
pub type SpectralEstimateF32 = SpectralEstimate<f32>;
/// Integer type used for exact threshold arithmetic.
pub type Count = i64;
