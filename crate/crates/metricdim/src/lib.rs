//! Exact metric dimension with verifiable certificates, built around two
//! corona-of-product graph families.
//!
//! A set of landmark vertices `S` *resolves* a connected graph when every
//! vertex is uniquely identified by its vector of hop distances to the
//! landmarks; the *metric dimension* is the size of a smallest resolving
//! set. This crate computes it exactly, by exhaustive subset search with a
//! sound twin-class lower bound, and returns a [`solver::DimensionCertificate`]
//! that records both the witness set and the evidence that no smaller set
//! works.
//!
//! The [`families`] module builds the two graph families the certificates
//! are aimed at, the grid corona `(P_n x P_m) . K1` and the complete-product
//! corona `(K_n x P_m) . K1`, together with their claimed dimension values,
//! constructed landmark sets, and closed-form distance formulas, and checks
//! all of those against the solver.
//!
//! ```
//! use metricdim::families::grid_corona;
//! use metricdim::solver::metric_dimension_exact;
//!
//! let inst = grid_corona(3, 2);
//! let cert = metric_dimension_exact(&inst.graph).unwrap();
//! assert_eq!(cert.dim, 3);
//! ```

#![forbid(unsafe_code)]

pub mod distance;
pub mod families;
pub mod graph;
pub mod io;
pub mod resolving;
pub mod solver;
pub mod subsets;
pub mod twins;

pub use distance::{all_pairs_distances, DistanceMatrix};
pub use graph::{
    attach_pendant, cartesian_product, complete_graph, corona, corona_k1, cycle_graph, path_graph,
    Graph, GraphError, VertexId, VertexLabel,
};
pub use resolving::{
    is_resolving_set, metric_representation, witness_pair, LandmarkSet, Representation,
};
pub use solver::{metric_dimension_exact, pendant_bound_check, DimensionCertificate};
pub use twins::{twin_classes, TwinPartition};
