//! Deterministic graph families.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::SplitMix64;

#[derive(Debug, Clone, PartialEq)]
pub enum GraphKind {
    /// Path on `n` vertices.
    Path(usize),
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    Complete(usize),
    /// `K_{a,b}`: vertices `0..a` on one side, `a..a+b` on the other.
    CompleteBipartite(usize, usize),
    /// Disjoint union of cliques of the given sizes, laid out consecutively.
    ClusterGraph(Vec<usize>),
    /// `G(n, p)`: pairs `i < j` visited in lexicographic order, one uniform
    /// deviate per pair, edge iff the deviate is below `p`.
    ErdosRenyi { n: usize, p: f64 },
}

/// Builds a graph of the given family. Only `ErdosRenyi` consumes `seed`;
/// the stream is [`SplitMix64`] so output is identical on every platform.
pub fn generate(kind: &GraphKind, seed: u64) -> Result<Graph> {
    let positive = |name: &str, size: usize| {
        if size == 0 {
            Err(Error::InvalidParameter(format!("{name} size must be at least 1")))
        } else {
            Ok(())
        }
    };
    match *kind {
        GraphKind::Path(n) => {
            positive("path", n)?;
            Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
        }
        GraphKind::Cycle(n) => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!(
                    "a simple cycle needs at least 3 vertices, got {n}"
                )));
            }
            Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
        }
        GraphKind::Complete(n) => {
            positive("complete graph", n)?;
            Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
        }
        GraphKind::CompleteBipartite(a, b) => {
            positive("bipartition side", a)?;
            positive("bipartition side", b)?;
            Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
        }
        GraphKind::ClusterGraph(ref sizes) => {
            if sizes.is_empty() {
                return Err(Error::InvalidParameter("cluster graph needs at least one clique".into()));
            }
            let mut edges = Vec::new();
            let mut offset = 0;
            for &k in sizes {
                positive("clique", k)?;
                for i in offset..offset + k {
                    for j in i + 1..offset + k {
                        edges.push((i, j));
                    }
                }
                offset += k;
            }
            Graph::from_edges(offset, edges)
        }
        GraphKind::ErdosRenyi { n, p } => {
            positive("Erdos-Renyi", n)?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParameter(format!("edge probability {p} outside [0, 1]")));
            }
            let mut rng = SplitMix64::new(seed);
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.next_f64() < p {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, edges)
        }
    }
}
