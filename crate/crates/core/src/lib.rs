//! Exact solvers for the Dominating Set Knapsack problem (DSKP): pick a
//! dominating set of total weight at most `s` and total profit at least `d`.
//!
//! The crate provides a brute-force [`oracle`], a pseudo-polynomial
//! [`tree_dp`] for trees, a [`treewidth_dp`] over nice tree decompositions, a
//! [`vc_dp`] solver parameterized by a vertex cover, and the hardness
//! [`reductions`] as checked instance transformers.

pub mod bench;
pub mod decomposition;
pub mod error;
pub mod generate;
pub mod graph;
pub mod instance;
pub mod oracle;
pub mod pareto;
pub mod reductions;
pub mod solver;
pub mod tree_dp;
pub mod treewidth_dp;
pub mod vc_dp;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::Graph;
pub use instance::{parse_instance, write_instance, DskpInstance, Variant};
pub use pareto::{ParetoSet, WpPair};
pub use vertex_set::VertexSet;
