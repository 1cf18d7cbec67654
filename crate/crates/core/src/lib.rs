//! Partitions of hypergraphs into strictly degenerate parts.
//!
//! * [`hypergraph`]: the hypergraph type, induced subhypergraphs, components,
//!   distances, cut vertices and blocks, generators and the text format.
//! * [`degeneracy`]: peeling, stuck cores and the coloring number.
//! * [`hardpair`]: recognition of the obstructions and certificate checking.
//! * [`solver`]: greedy, exact and brute-force partitioning.
//! * [`exchange`]: maximum-order first parts via vertex exchanges.
//! * [`harness`]: generators and the verification suites.

pub mod budget;
pub mod degeneracy;
pub mod error;
pub mod exchange;
pub mod hardpair;
pub mod harness;
pub mod hypergraph;
pub mod solver;

pub use budget::{DegreeBudget, VectorFunction};
pub use error::{Error, Result};
pub use hypergraph::{BlockDecomposition, Hypergraph, Vertex, VertexSet};
