use proptest::prelude::*;

use wedge_core::partition::{block_degrees, sample_partition, WedgeEquitableCheck};
use wedge_core::*;

/// Simple graph on up to `max_n` vertices from an arbitrary edge mask.
fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |mask| {
            let edges = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .zip(mask)
                .filter_map(|(e, keep)| keep.then_some(e));
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn partition_strategy(g: &Graph) -> impl Strategy<Value = Partition> {
    let n = g.n();
    any::<u64>().prop_map(move |seed| sample_partition(n, &mut SplitMix64::new(seed)))
}

fn graph_and_partition(max_n: usize) -> impl Strategy<Value = (Graph, Partition)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let p = partition_strategy(&g);
        (Just(g), p)
    })
}

/// For `a ≠ b` and every block `c`, no two distinct vertices of `P_c`
/// reach `P_a` and `P_b` respectively.
fn common_support_holds(g: &Graph, p: &Partition) -> bool {
    let d = block_degrees(g, p);
    let r = p.r();
    p.blocks().iter().all(|block| {
        (0..r).all(|a| {
            (0..r).filter(|&b| b != a).all(|b| {
                block
                    .iter()
                    .all(|&x| block.iter().all(|&y| x == y || d[x][a] == 0 || d[y][b] == 0))
            })
        })
    })
}

fn off_diagonal_zero(m: &IntMatrix) -> bool {
    (0..m.order()).all(|a| (0..m.order()).all(|b| a == b || m[(a, b)] == 0))
}

/// Seeded pairs matching the acceptance sampling: n from 2 to 25, edge
/// density uniform, partition block count from 2 to min(n, 6).
#[test]
fn transfer_on_seeded_pairs() {
    let mut rng = SplitMix64::new(2024);
    let mut wedge_equitable_seen = 0;
    for _ in 0..200 {
        let n = 2 + rng.below(24) as usize;
        let g = generate(&GraphKind::ErdosRenyi { n, p: rng.next_f64() }, rng.next_u64()).unwrap();
        let p = sample_partition(n, &mut rng);
        let d = transfer_diagnostics(&g, &p).unwrap();
        for a in 0..p.r() {
            for b in 0..p.r() {
                assert!(d.m[(a, b)] <= d.b_squared[(a, b)]);
            }
        }
        if is_wedge_equitable(&g, &p).unwrap().holds() {
            wedge_equitable_seen += 1;
            assert!(off_diagonal_zero(&d.overcount));
        }
        if off_diagonal_zero(&d.overcount) {
            assert!(common_support_holds(&g, &p));
        }
    }
    // sparse small graphs make a few sampled partitions wedge-equitable
    assert!(wedge_equitable_seen > 0);
}

#[test]
fn wedge_equitable_does_not_force_equitable() {
    // one edge plus an isolated vertex sharing a block with an endpoint
    let g = Graph::from_edges(3, [(0, 1)]).unwrap();
    let p = Partition::from_blocks(3, vec![vec![0], vec![1, 2]], None).unwrap();
    assert!(is_wedge_equitable(&g, &p).unwrap().holds());
    assert!(!is_equitable(&g, &p).unwrap().holds());
}

#[test]
fn equitable_does_not_force_wedge_equitable() {
    let el = load_edge_list(fixtures::C4).unwrap();
    let p = parse_partition(fixtures::C4_BIPARTITION, &el).unwrap();
    assert!(is_equitable(&el.graph, &p).unwrap().holds());
    let check = is_wedge_equitable(&el.graph, &p).unwrap();
    assert!(matches!(check, WedgeEquitableCheck::Violation { .. }));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn decomposition_is_canonical(g in graph_strategy(18)) {
        let w = two_walk_operator(&g).unwrap();
        let parts = triadic_open_decomposition(&g).unwrap();
        prop_assert!(parts.triadic.is_symmetric() && parts.open.is_symmetric());
        prop_assert_eq!(parts.triadic.checked_add(&parts.open).unwrap(), w.clone());
        for i in 0..g.n() {
            prop_assert_eq!(w[(i, i)], 0);
            for j in 0..g.n() {
                if g.has_edge(i, j) {
                    prop_assert_eq!(parts.open[(i, j)], 0);
                } else {
                    prop_assert_eq!(parts.triadic[(i, j)], 0);
                }
            }
        }
        let row_sums = w.row_sums().unwrap();
        let s = wedge_summary(&g).unwrap();
        prop_assert!(row_sums.iter().zip(&s.d2).all(|(&x, &y)| x == y as i64));
    }

    #[test]
    fn openness_characterization(g in graph_strategy(16)) {
        let s = wedge_summary(&g).unwrap();
        let check = is_cluster_graph(&g).unwrap();
        prop_assert_eq!(s.omega == 0, check.is_cluster_graph());
        if let Some(w) = check.witness() {
            prop_assert!(g.has_edge(w.first, w.middle) && g.has_edge(w.middle, w.last));
            prop_assert!(w.first != w.last && !g.has_edge(w.first, w.last));
        }
    }

    #[test]
    fn nonedge_sum(g in graph_strategy(18)) {
        let s = wedge_summary(&g).unwrap();
        let o = triadic_open_decomposition(&g).unwrap().open;
        let mut total = 0i64;
        for i in 0..g.n() {
            for j in i + 1..g.n() {
                if !g.has_edge(i, j) {
                    total += o[(i, j)];
                }
            }
        }
        prop_assert_eq!(total, s.m2 as i64 - 3 * s.tau as i64);
    }

    #[test]
    fn mass_conservation((g, p) in graph_and_partition(20)) {
        let d = transfer_diagnostics(&g, &p).unwrap();
        prop_assert_eq!(d.b.sum().unwrap(), 2 * g.m() as i64);
        let squares: i64 = g.degrees().iter().map(|&x| (x * x) as i64).sum();
        prop_assert_eq!(d.m.sum().unwrap(), squares);
        prop_assert!((0.0..=1.0).contains(&d.rho));
        prop_assert_eq!(d.b_edges + d.b_internal, g.m() as i64);
    }

    #[test]
    fn weighted_transfer_with_unit_weights((g, p) in graph_and_partition(14)) {
        let weighted = Graph::from_weighted_edges(g.n(), g.edges().map(|(u, v)| (u, v, 1.0))).unwrap();
        let plain = transfer_diagnostics(&g, &p).unwrap();
        let w = weighted_transfer_diagnostics(&weighted, &p).unwrap();
        prop_assert_eq!(w.overcount, plain.overcount.to_real());
        prop_assert_eq!(w.rho, plain.rho);
    }

    #[test]
    fn weighted_transfer_is_safe(g in graph_strategy(14), seed in any::<u64>()) {
        let mut rng = SplitMix64::new(seed);
        let weighted = Graph::from_weighted_edges(
            g.n(),
            g.edges().map(|(u, v)| (u, v, rng.next_f64() * 3.0)).collect::<Vec<_>>(),
        )
        .unwrap();
        let p = sample_partition(g.n(), &mut rng);
        let d = weighted_transfer_diagnostics(&weighted, &p).unwrap();
        for a in 0..p.r() {
            for b in 0..p.r() {
                prop_assert!(d.m[(a, b)] <= d.b_squared[(a, b)] + 1e-9 * d.b_squared[(a, b)].max(1.0));
            }
        }
    }

    #[test]
    fn spectral_moments(g in graph_strategy(20)) {
        let s = wedge_summary(&g).unwrap();
        let spectrum = adjacency_spectrum(&g).unwrap();
        let scale = spectrum.eigenvalues.iter().map(|l| l.abs().powi(3)).sum::<f64>().max(1.0);
        prop_assert!((spectrum.moment(2) - 2.0 * s.m as f64).abs() <= 1e-6 * (2.0 * s.m as f64).max(1.0));
        prop_assert!((spectrum.moment(3) - 6.0 * s.tau as f64).abs() <= 1e-6 * scale);
        prop_assert!(triangle_spectral_bound(&g).unwrap().holds);
        let closure = closure_norm_bound(&g).unwrap();
        prop_assert!(closure.closure.holds && closure.spectral.holds);
    }

    #[test]
    fn ego_partition_structure(g in graph_strategy(20)) {
        let s = dominate_clustered_core(&g).unwrap();
        let types = classify_traversing(&g, &s).unwrap();
        let p = ego_traversing_partition(&g, &s).unwrap();
        prop_assert_eq!(p.r(), s.len() + types.t3.len() + types.t4.len());
        let d = transfer_diagnostics(&g, &p).unwrap();
        prop_assert_eq!(d.blocks, d.ego_blocks + d.traversing_singletons);
        prop_assert!(d.rho > 0.0 && d.rho <= 1.0);
    }

    #[test]
    fn edge_list_round_trip(g in graph_strategy(15)) {
        let text = save_edge_list(&g, None);
        let back = load_edge_list(&text).unwrap();
        // isolated vertices do not survive an edge list
        prop_assert_eq!(back.graph.m(), g.m());
        let relabelled: Vec<(usize, usize)> = back
            .graph
            .edges()
            .map(|(u, v)| {
                let (x, y) = (back.labels[u].parse::<usize>().unwrap(), back.labels[v].parse::<usize>().unwrap());
                (x.min(y), x.max(y))
            })
            .collect();
        let mut relabelled = relabelled;
        relabelled.sort_unstable();
        prop_assert_eq!(relabelled, g.edges().collect::<Vec<_>>());
    }
}
