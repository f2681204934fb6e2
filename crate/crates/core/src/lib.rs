//! SINR interference hypergraphs of planar wireless networks.
//!
//! A wireless network is a set of planar stations with a path-loss exponent
//! and a reception threshold. Subsets of stations in which some member
//! receives too much aggregate interference are forbidden; the minimal
//! forbidden sets are the hyperedges of the network's interference
//! hypergraph. This crate builds those hypergraphs, computes the
//! interference degree invariant of arbitrary hypergraphs in exact rational
//! arithmetic, and searches for (or refutes) wireless realizations of
//! target hypergraphs, including the five-leaf star contradiction pipeline.
//!
//! See the `examples/` directory for a runnable tour of each capability.

pub mod geometry;
pub mod hypergraph;
pub mod realizability;
pub mod verification;
pub mod wireless;

pub use geometry::{dist, Point2, PolarPoint};
pub use hypergraph::{complete_uniform, star, Graph, Hypergraph, Rational};
pub use realizability::{
    check_realization, search_realization, verify_k15_nonrealizable, RealizationSearchConfig,
    RealizationSearchResult,
};
pub use wireless::{unit_disk_graph, WirelessNetwork};
