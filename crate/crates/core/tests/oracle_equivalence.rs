use std::collections::BTreeMap;

use wedge_core::oracle::{enumerate_triangles, enumerate_wedges, naive_block_two_walks, naive_overcount};
use wedge_core::partition::{aggregated_two_walk, sample_partition};
use wedge_core::wedge::edge_triangle_multiplicities;
use wedge_core::*;

fn random_graph(seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let n = 1 + rng.below(25) as usize;
    let p = rng.next_f64();
    generate(&GraphKind::ErdosRenyi { n, p }, rng.next_u64()).unwrap()
}

fn assert_matches_oracle(g: &Graph, seed: u64) {
    let s = wedge_summary(g).unwrap();
    let wedges = enumerate_wedges(g).unwrap();
    let triangles = enumerate_triangles(g).unwrap();
    assert_eq!(s.m2, wedges.len() as u64, "seed {seed}");
    assert_eq!(s.tau, triangles.len() as u64, "seed {seed}");
    assert_eq!(s.omega, wedges.open() as u64, "seed {seed}");
    assert_eq!(s.per_vertex_pi2, wedges.per_middle(g.n()), "seed {seed}");

    let mut tau_v = vec![0u64; g.n()];
    let mut t_e: BTreeMap<(usize, usize), u64> = g.edges().map(|e| (e, 0)).collect();
    for t in &triangles {
        for &v in t {
            tau_v[v] += 1;
        }
        for e in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            *t_e.get_mut(&e).unwrap() += 1;
        }
    }
    assert_eq!(s.per_vertex_tau, tau_v, "seed {seed}");
    assert_eq!(edge_triangle_multiplicities(g).unwrap(), t_e, "seed {seed}");

    let parts = triadic_open_decomposition(g).unwrap();
    for (&(u, v), &t) in &t_e {
        assert_eq!(parts.triadic[(u, v)], t as i64, "seed {seed}");
    }

    let p = sample_partition(g.n(), &mut SplitMix64::new(seed ^ 0xabcd));
    assert_eq!(aggregated_two_walk(g, &p).unwrap(), naive_block_two_walks(g, &p).unwrap(), "seed {seed}");
    let d = transfer_diagnostics(g, &p).unwrap();
    assert_eq!(d.overcount, naive_overcount(g, &p).unwrap(), "seed {seed}");
}

#[test]
fn hundred_seeds() {
    for seed in 0..100 {
        assert_matches_oracle(&random_graph(seed), seed);
    }
}

#[test]
fn families() {
    let kinds = [
        GraphKind::Path(7),
        GraphKind::Cycle(6),
        GraphKind::Complete(6),
        GraphKind::CompleteBipartite(3, 4),
        GraphKind::ClusterGraph(vec![1, 2, 3, 4]),
    ];
    for kind in &kinds {
        assert_matches_oracle(&generate(kind, 0).unwrap(), 0);
    }
}

#[test]
fn block_two_walks_examples() {
    let k3 = generate(&GraphKind::Complete(3), 0).unwrap();
    let single = Partition::singletons(3);
    let a2 = wedge_core::wedge::adjacency_squared(&k3).unwrap();
    assert_eq!(naive_block_two_walks(&k3, &single).unwrap(), a2);

    let g = generate(&GraphKind::ErdosRenyi { n: 12, p: 0.3 }, 5).unwrap();
    let p = Partition::from_assignment(&[0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2]).unwrap();
    assert_eq!(aggregated_two_walk(&g, &p).unwrap(), naive_block_two_walks(&g, &p).unwrap());
}
