//! Exact computation of edge coalitions in small graphs.
//!
//! An edge coalition is a pair of disjoint edge sets, neither of which is an
//! edge dominating set, whose union is one. The crate verifies ec-partitions
//! with certificates, computes the edge coalition number `EC(G)` exactly,
//! builds edge coalition graphs, and ships generators, recognizers and an
//! independent brute-force oracle for checking the known structure results.

pub mod bounds;
pub mod coalition;
pub mod domination;
pub mod error;
pub mod families;
pub mod graph;
pub mod iso;
pub mod oracle;
pub mod solver;
pub mod theorems;

pub use bounds::{complete_bipartite_parts, ec_bounds, BoundEntry, BoundKind, BoundReport};
pub use coalition::{
    coalition_graph, coalition_partner_count, forms_edge_coalition, is_ec_partition,
    is_self_edge_coalition_graph, is_singleton_ec_graph, EcCertificate, EdgePartition,
    Justification, Rejection, RejectionReason,
};
pub use domination::{
    edge_domination_number, is_edge_dominating_set, is_minimal_edge_dominating_set,
    vertex_domination_number, DominationResult,
};
pub use error::{Error, Result};
pub use families::{
    closed_form_ec, generate, k24_expected_coalition_graphs, k24_preset, k24_presets,
    phi_recognizer, psi_catalog, self_coalition_graphs, small_ec_classifier, theta_recognizer,
    FamilySpec, SmallEcClass,
};
pub use graph::{EdgeNeighborhood, EdgeSet, Graph, GraphMetrics};
pub use iso::{are_isomorphic, are_isomorphic_capped};
pub use oracle::{
    brute_force_ec, enumerate_corpus, is_ec_partition_literal, CorpusGraph, CorpusSpec, GraphClass,
    RestrictedGrowth,
};
pub use solver::{
    ec_lower_bound, edge_coalition_number, edge_coalition_number_with, EcResult, LowerBoundResult,
    ProofMode, SolverConfig,
};
