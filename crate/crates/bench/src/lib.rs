//! Inputs shared by the criterion benches.

use wedge_core::{generate, load_edge_list, Graph, GraphKind, Partition, SplitMix64};

pub fn karate() -> Graph {
    load_edge_list(wedge_core::fixtures::KARATE)
        .expect("bundled fixture parses")
        .graph
}

/// `G(n, p)` with a fixed seed.
pub fn erdos_renyi(n: usize, p: f64) -> Graph {
    generate(&GraphKind::ErdosRenyi { n, p }, 7).expect("valid parameters")
}

/// A fixed random partition into at most six blocks.
pub fn partition_for(g: &Graph) -> Partition {
    wedge_core::partition::sample_partition(g.n(), &mut SplitMix64::new(11))
}
