//! Wedge operators on simple graphs.
//!
//! The two-walk operator `W = A² − D` splits into a triadic part on edges
//! and an open part on nonedges. Around it sit triangle and two-path
//! incidence factorizations, spectral bounds, the ego-traversing
//! contraction and diagnostics for how faithfully a block quotient carries
//! two-walks. [`oracle`] holds brute-force counters used to cross-check all
//! of it, and [`verify`] bundles those checks into one suite.

pub mod error;
pub mod generate;
pub mod graph;
pub mod matrix;
pub mod oracle;
pub mod partition;
pub mod rng;
pub mod spectral;
pub mod verify;
pub mod wedge;

pub use error::{Error, Result};
pub use generate::{generate, GraphKind};
pub use graph::{load_edge_list, read_edge_list, save_edge_list, EdgeList, Graph, GraphBuilder, VertexSet};
pub use matrix::{IntMatrix, RealMatrix, Scalar, SquareMatrix};
pub use partition::{
    classify_traversing, dominate_clustered_core, ego_traversing_partition, format_partition, greedy_dominating_set,
    is_equitable, is_wedge_equitable, parse_partition, transfer_diagnostics, weighted_transfer_diagnostics, BlockKind,
    Partition, QuotientDiagnostics, TraversingTypes,
};
pub use rng::SplitMix64;
pub use spectral::{adjacency_spectrum, closure_norm_bound, symmetric_spectrum, triangle_spectral_bound, BoundReport};
pub use wedge::{
    classify_vertices, is_cluster_graph, local_clustering, triadic_open_decomposition, two_walk_operator,
    wedge_summary, VertexClasses, WedgeSummary,
};

/// Small bundled graphs: Zachary's karate club (labels 0 to 33), the
/// Florentine families marriage network, and the toy graphs used in the
/// examples.
pub mod fixtures {
    pub const KARATE: &str = include_str!("../data/karate.edgelist");
    pub const FLORENTINE: &str = include_str!("../data/florentine.edgelist");
    pub const C4: &str = include_str!("../data/c4.edgelist");
    /// Blocks `{1, 3}` and `{2, 4}` of [`C4`].
    pub const C4_BIPARTITION: &str = include_str!("../data/c4_bipartition.partition");
    pub const K3: &str = include_str!("../data/k3.edgelist");
    pub const P3: &str = include_str!("../data/p3.edgelist");

    /// Name and text of every bundled edge list.
    pub const ALL: [(&str, &str); 5] = [
        ("karate", KARATE),
        ("florentine", FLORENTINE),
        ("c4", C4),
        ("k3", K3),
        ("p3", P3),
    ];
}
