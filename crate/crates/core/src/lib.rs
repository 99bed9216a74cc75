//! Exact and approximate trussness of undirected graphs.
//!
//! The crate is organised around an immutable [`Graph`] with dense edge
//! identifiers and the [`GraphView`] navigation trait, which lets the same
//! algorithms run on implicit constructions such as [`BlowupView`].
//!
//! * [`triangles`]: support computation, triangle listing.
//! * [`truss`]: exact truss decomposition by support peeling, truss orders,
//!   maximal k-trusses and the order-to-decomposition reduction.
//! * [`gadgets`]: blow-ups, spurious cliques, ladder gadgets and friends.
//! * [`sampler`]: forward-wedge sampling of the triangle hypergraph.
//! * [`approx`]: approximate truss orders and the two trussness estimators.
//!
//! Trussness follows the 0-based convention: a k-clique has trussness k - 2
//! and a graph is triangle-free iff its trussness is 0.
//!
//! ```
//! use trusslab::{estimate_trussness, threshold_estimate, truss_decomposition, EstimateConfig, Graph};
//!
//! let g = Graph::from_edges([(0, 1), (1, 2), (2, 0), (2, 3), (3, 0)]);
//! let (dec, _order) = truss_decomposition(&g);
//! assert_eq!(dec.trussness, 1);
//!
//! let lower = threshold_estimate(&g, 0.1).unwrap().estimate;
//! assert!(lower <= 1.into());
//! let approx = estimate_trussness(&g, 0.3, &EstimateConfig::default()).unwrap();
//! assert_eq!(approx.estimate, 1.into());
//! ```

pub mod approx;
mod bucket;
pub mod error;
pub mod gadgets;
pub mod generate;
pub mod graph;
pub mod sampler;
pub mod triangles;
pub mod truss;

pub use approx::{
    approx_truss_order, estimate_trussness, hypergraph_degeneracy_order, marker_test,
    threshold_estimate, ApproxTrussOrder, EstimateConfig, EstimateResult, GrowthRule,
    ThresholdEstimate, ThresholdRound,
};
pub use error::{Result, TrussError};
pub use gadgets::{
    add_spurious_cliques, bipartite_apex, blowup, disjoint_union, ladder_gadget, AugmentedGraph,
    BlowupView, LadderGadget,
};
pub use generate::gen_random;
pub use graph::{
    degeneracy_order, forward_wedge_count, DegeneracyInfo, EdgeId, Graph, GraphView, NodeId,
};
pub use sampler::{
    geometric_skip, sample_hypergraph, sample_wedges_fixed_p, HypergraphSample, SamplerConfig,
};
pub use triangles::{compute_supports, list_triangles, triangle_of_wedge, SupportTable, Triangle};
pub use truss::{
    decomposition_from_order, max_truss_subgraph, replay_order, truss_decomposition, trussness,
    EdgeOrder, OrderReplay, TrussDecomposition,
};
