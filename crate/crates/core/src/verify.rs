//! The invariant suite run by `wedge verify`: every identity the library
//! relies on, checked on a graph against the brute-force oracles.

use std::fmt;

use crate::error::{Error, Result};
use crate::generate::{generate, GraphKind};
use crate::graph::Graph;
use crate::matrix::IntMatrix;
use crate::oracle::{enumerate_triangles, enumerate_wedges, naive_block_two_walks, naive_overcount, ORACLE_MAX_VERTICES};
use crate::partition::{
    classify_traversing, dominate_clustered_core, ego_traversing_partition, is_wedge_equitable, sample_partition,
    transfer_diagnostics, undominated_vertex, weighted_transfer_diagnostics, Partition,
};
use crate::rng::SplitMix64;
use crate::spectral::{adjacency_spectrum, closure_bound_from, triangle_bound_from, SpectrumOptions};
use crate::wedge::{
    classify_vertices, edge_triangle_multiplicities, is_cluster_graph, triadic_open_decomposition, triangle_incidence,
    two_incidence, two_walk_operator, wedge_summary, TriadicOpen, WedgeSummary, DEFAULT_INCIDENCE_CAP,
};

/// Test hook: corrupt an intermediate result so a check must fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Bump one entry of the triadic part before the decomposition check.
    CorruptTriadic,
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub seed: u64,
    pub random_graphs: usize,
    /// Sampled partitions per graph for the transfer checks.
    pub partitions_per_graph: usize,
    pub max_incidence_cols: usize,
    pub fault: Option<Fault>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seed: 42,
            random_graphs: 25,
            partitions_per_graph: 4,
            max_incidence_cols: DEFAULT_INCIDENCE_CAP,
            fault: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Pass,
    Skip(String),
    /// Failing identity with a witness.
    Fail(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub graph: String,
    pub name: &'static str,
    pub outcome: Outcome,
}

impl Check {
    pub fn failed(&self) -> bool {
        matches!(self.outcome, Outcome::Fail(_))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Pass => write!(f, "PASS {} {}", self.graph, self.name),
            Outcome::Skip(why) => write!(f, "SKIP {} {}: {why}", self.graph, self.name),
            Outcome::Fail(why) => write!(f, "FAIL {} {}: {why}", self.graph, self.name),
        }
    }
}

/// Seeded random graphs: Erdős–Rényi graphs on 5 to 25 vertices with
/// `p ∈ [0.1, 0.6)`, and every fifth one a random cluster graph.
pub fn random_graphs(seed: u64, count: usize) -> Vec<(String, Graph)> {
    let mut rng = SplitMix64::new(seed);
    (0..count)
        .map(|i| {
            if i % 5 == 4 {
                let sizes: Vec<usize> = (0..1 + rng.below(4)).map(|_| 1 + rng.below(5) as usize).collect();
                let g = generate(&GraphKind::ClusterGraph(sizes), 0).expect("valid sizes");
                (format!("random-cluster-{i}"), g)
            } else {
                let n = 5 + rng.below(21) as usize;
                let p = 0.1 + 0.5 * rng.next_f64();
                let g = generate(&GraphKind::ErdosRenyi { n, p }, rng.next_u64()).expect("valid parameters");
                (format!("random-er-{i}"), g)
            }
        })
        .collect()
}

/// Runs the full suite on the inputs followed by `opts.random_graphs`
/// seeded random graphs.
pub fn run_suite(inputs: &[(String, Graph)], opts: &VerifyOptions) -> Vec<Check> {
    let randoms = random_graphs(opts.seed, opts.random_graphs);
    inputs
        .iter()
        .chain(randoms.iter())
        .enumerate()
        .flat_map(|(i, (name, g))| verify_graph(name, g, opts, opts.seed.wrapping_add(i as u64)))
        .collect()
}

type Verdict = std::result::Result<(), String>;
type CheckFn = fn(&Context, &VerifyOptions, u64) -> Result<Verdict>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Verdict {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn first_mismatch(x: &IntMatrix, y: &IntMatrix) -> Option<(usize, usize)> {
    if x.order() != y.order() {
        return Some((usize::MAX, usize::MAX));
    }
    (0..x.order())
        .flat_map(|i| (0..x.order()).map(move |j| (i, j)))
        .find(|&(i, j)| x[(i, j)] != y[(i, j)])
}

fn matrices_equal(what: &str, lhs: &IntMatrix, rhs: &IntMatrix) -> Verdict {
    match first_mismatch(lhs, rhs) {
        None => Ok(()),
        Some((i, _)) if i == usize::MAX => Err(format!("{what}: orders {} and {} differ", lhs.order(), rhs.order())),
        Some((i, j)) => Err(format!("{what}: entry ({i}, {j}) is {} vs {}", lhs[(i, j)], rhs[(i, j)])),
    }
}

struct Context<'a> {
    g: &'a Graph,
    summary: WedgeSummary,
    w: IntMatrix,
    parts: TriadicOpen<i64>,
}

/// All checks for one graph. Weighted graphs are checked through their
/// unweighted view, plus the weighted transfer check.
pub fn verify_graph(name: &str, g: &Graph, opts: &VerifyOptions, seed: u64) -> Vec<Check> {
    let mut out = Vec::new();
    let mut push = |check: &'static str, outcome: Outcome| {
        out.push(Check {
            graph: name.to_string(),
            name: check,
            outcome,
        })
    };
    if g.is_directed() {
        push("all", Outcome::Skip("directed input".into()));
        return out;
    }
    let plain = g.unweighted();
    let ctx = match build_context(&plain, opts.fault) {
        Ok(ctx) => ctx,
        Err(e) => {
            push("operators", Outcome::Fail(e.to_string()));
            return out;
        }
    };

    let checks: [(&'static str, CheckFn); 10] = [
        ("oracle-counts", check_oracle),
        ("wedge-gram", check_wedge_gram),
        ("triangle-gram", check_triangle_gram),
        ("decomposition", check_decomposition),
        ("nonedge-sum", check_nonedge_sum),
        ("openness", check_openness),
        ("clustered-bound", check_clustered_bound),
        ("spectral-bounds", check_spectral),
        ("transfer", check_transfer),
        ("ego-partition", check_ego_partition),
    ];
    for (check, run) in checks {
        let outcome = match run(&ctx, opts, seed) {
            Ok(Ok(())) => Outcome::Pass,
            Ok(Err(why)) => Outcome::Fail(why),
            Err(Error::ResourceLimit { what, requested, cap }) => {
                Outcome::Skip(format!("{what} = {requested} exceeds cap {cap}"))
            }
            Err(e) => Outcome::Fail(e.to_string()),
        };
        push(check, outcome);
    }
    if g.is_weighted() {
        let outcome = match check_weighted_transfer(g, opts, seed) {
            Ok(Ok(())) => Outcome::Pass,
            Ok(Err(why)) => Outcome::Fail(why),
            Err(e) => Outcome::Fail(e.to_string()),
        };
        push("weighted-transfer", outcome);
    }
    out
}

fn build_context(g: &Graph, fault: Option<Fault>) -> Result<Context<'_>> {
    let summary = wedge_summary(g)?;
    let w = two_walk_operator(g)?;
    let mut parts = triadic_open_decomposition(g)?;
    if fault == Some(Fault::CorruptTriadic) && g.n() >= 2 {
        parts.triadic[(0, 1)] += 1;
    }
    Ok(Context { g, summary, w, parts })
}

fn oracle_guard(g: &Graph) -> Result<()> {
    if g.n() > ORACLE_MAX_VERTICES {
        return Err(Error::ResourceLimit {
            what: "oracle vertices",
            requested: g.n() as u64,
            cap: ORACLE_MAX_VERTICES as u64,
        });
    }
    Ok(())
}

fn check_oracle(ctx: &Context, _: &VerifyOptions, _: u64) -> Result<Verdict> {
    oracle_guard(ctx.g)?;
    let s = &ctx.summary;
    let wedges = enumerate_wedges(ctx.g)?;
    let triangles = enumerate_triangles(ctx.g)?;
    let mut tau_v = vec![0u64; ctx.g.n()];
    let mut t_e = std::collections::BTreeMap::new();
    for t in &triangles {
        for &v in t {
            tau_v[v] += 1;
        }
        for (x, y) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            *t_e.entry((x, y)).or_insert(0u64) += 1;
        }
    }
    let formula_t_e: std::collections::BTreeMap<_, _> = edge_triangle_multiplicities(ctx.g)?
        .into_iter()
        .filter(|&(_, t)| t > 0)
        .collect();
    Ok((|| {
        ensure(wedges.len() as u64 == s.m2, || format!("m2 = {} but {} wedges enumerated", s.m2, wedges.len()))?;
        ensure(triangles.len() as u64 == s.tau, || {
            format!("tau = {} but {} triangles enumerated", s.tau, triangles.len())
        })?;
        ensure(wedges.closed() as u64 == 3 * s.tau, || {
            format!("{} closed wedges but 3 tau = {}", wedges.closed(), 3 * s.tau)
        })?;
        ensure(wedges.open() as u64 == s.omega, || format!("{} open wedges but omega = {}", wedges.open(), s.omega))?;
        ensure(wedges.per_middle(ctx.g.n()) == s.per_vertex_pi2, || "per-vertex wedge counts differ".into())?;
        if let Some(v) = (0..ctx.g.n()).find(|&v| tau_v[v] != s.per_vertex_tau[v]) {
            return Err(format!("tau({v}) = {} but enumeration gives {}", s.per_vertex_tau[v], tau_v[v]));
        }
        ensure(formula_t_e == t_e, || "edge triangle multiplicities differ from enumeration".into())
    })())
}

fn check_wedge_gram(ctx: &Context, opts: &VerifyOptions, _: u64) -> Result<Verdict> {
    let b2 = two_incidence(ctx.g, opts.max_incidence_cols)?;
    let gram = b2.gram();
    // Column i of B₂ is hit once per wedge with i as an endpoint, so the
    // diagonal is d₂ while A² carries d on its diagonal: B₂B₂ᵀ = D₂ + A² − D.
    let mut expected = ctx.w.clone();
    for (i, &d2) in ctx.summary.d2.iter().enumerate() {
        expected[(i, i)] += d2 as i64;
    }
    let total: u64 = ctx.summary.d2.iter().sum();
    Ok(matrices_equal("B2 B2^T vs D2 + A^2 - D", &gram, &expected)
        .and_then(|()| ensure(total == 2 * ctx.summary.m2, || format!("sum of d2 = {total}, 2 m2 = {}", 2 * ctx.summary.m2))))
}

fn check_triangle_gram(ctx: &Context, opts: &VerifyOptions, _: u64) -> Result<Verdict> {
    let bt = triangle_incidence(ctx.g, opts.max_incidence_cols)?;
    let mut expected = ctx.parts.triadic.clone();
    for (i, &t) in ctx.summary.per_vertex_tau.iter().enumerate() {
        expected[(i, i)] += t as i64;
    }
    Ok(matrices_equal("B_tri B_tri^T vs diag(tau(i)) + T", &bt.gram(), &expected))
}

fn check_decomposition(ctx: &Context, _: &VerifyOptions, _: u64) -> Result<Verdict> {
    let (t, o, w) = (&ctx.parts.triadic, &ctx.parts.open, &ctx.w);
    let multiplicity = edge_triangle_multiplicities(ctx.g)?;
    for i in 0..ctx.g.n() {
        for j in 0..ctx.g.n() {
            let (tij, oij, wij) = (t[(i, j)], o[(i, j)], w[(i, j)]);
            let edge = ctx.g.has_edge(i, j);
            let t_e = if edge { multiplicity[&(i.min(j), i.max(j))] as i64 } else { 0 };
            let ok = tij + oij == wij && if edge { oij == 0 && tij == t_e } else { tij == 0 };
            if !ok {
                return Ok(Err(format!(
                    "W = T + O with disjoint supports fails at ({i}, {j}): T = {tij}, O = {oij}, W = {wij}, edge = {edge}"
                )));
            }
        }
    }
    Ok(Ok(()))
}

fn check_nonedge_sum(ctx: &Context, _: &VerifyOptions, _: u64) -> Result<Verdict> {
    let n = ctx.g.n();
    let (mut open_sum, mut closed_sum) = (0i64, 0i64);
    for i in 0..n {
        for j in i + 1..n {
            if ctx.g.has_edge(i, j) {
                closed_sum += ctx.parts.triadic[(i, j)];
            } else {
                open_sum += ctx.parts.open[(i, j)];
            }
        }
    }
    let s = &ctx.summary;
    let omega = s.m2 as i64 - 3 * s.tau as i64;
    Ok(ensure(open_sum == omega, || format!("sum of O over nonedges = {open_sum}, m2 - 3 tau = {omega}"))
        .and_then(|()| {
            ensure(closed_sum == 3 * s.tau as i64, || {
                format!("sum of edge multiplicities = {closed_sum}, 3 tau = {}", 3 * s.tau)
            })
        }))
}

fn check_openness(ctx: &Context, _: &VerifyOptions, _: u64) -> Result<Verdict> {
    let check = is_cluster_graph(ctx.g)?;
    let omega = ctx.summary.omega;
    Ok(match check.witness() {
        None => ensure(omega == 0, || format!("reported a cluster graph but omega = {omega}")),
        Some(w) => ensure(omega > 0, || "open wedge reported with omega = 0".into()).and_then(|()| {
            ensure(
                ctx.g.has_edge(w.first, w.middle) && ctx.g.has_edge(w.middle, w.last) && w.first != w.last
                    && !ctx.g.has_edge(w.first, w.last),
                || format!("witness {}-{}-{} is not an open wedge", w.first, w.middle, w.last),
            )
        }),
    })
}

fn check_clustered_bound(ctx: &Context, _: &VerifyOptions, _: u64) -> Result<Verdict> {
    let s = &ctx.summary;
    let classes = classify_vertices(ctx.g)?;
    Ok(ensure(classes.clustered.len() == s.n_clustered, || "vertex classes disagree with the summary".into())
        .and_then(|()| {
            let vc = s.n_clustered as u64;
            if s.tau > 0 {
                ensure(3 <= vc && vc <= 3 * s.tau, || format!("|V_cl| = {vc} outside [3, 3 tau = {}]", 3 * s.tau))
            } else {
                ensure(vc == 0, || format!("no triangles but |V_cl| = {vc}"))
            }
        }))
}

fn check_spectral(ctx: &Context, _: &VerifyOptions, _: u64) -> Result<Verdict> {
    let cap = SpectrumOptions::default().max_order;
    if ctx.g.n() > cap {
        return Err(Error::ResourceLimit {
            what: "spectrum order",
            requested: ctx.g.n() as u64,
            cap: cap as u64,
        });
    }
    let spectrum = adjacency_spectrum(ctx.g)?;
    let s = &ctx.summary;
    let close = |x: f64, target: f64, scale: f64| (x - target).abs() <= 1e-6 * scale.max(1.0);
    let abs3: f64 = spectrum.eigenvalues.iter().map(|l| l.abs().powi(3)).sum();
    let m2 = spectrum.moment(2);
    let m3 = spectrum.moment(3);
    let tri = triangle_bound_from(s.tau, s.m, &spectrum);
    let closure = closure_bound_from(ctx.g, &spectrum)?;
    Ok((|| {
        ensure(close(m2, 2.0 * s.m as f64, 2.0 * s.m as f64), || format!("sum of lambda^2 = {m2}, 2m = {}", 2 * s.m))?;
        ensure(close(m3, 6.0 * s.tau as f64, abs3), || format!("sum of lambda^3 = {m3}, 6 tau = {}", 6 * s.tau))?;
        ensure(tri.holds, || format!("tau = {} exceeds lambda1 m / 3 = {}", tri.lhs, tri.rhs))?;
        ensure(closure.closure.holds, || {
            format!("||T||_F^2 = {} exceeds Tr(A^4) = {}", closure.closure.lhs, closure.closure.rhs)
        })?;
        ensure(closure.spectral.holds, || {
            format!("Tr(A^4) = {} exceeds n lambda1^4 = {}", closure.spectral.lhs, closure.spectral.rhs)
        })
    })())
}

fn transfer_verdict(g: &Graph, p: &Partition, label: &str) -> Result<Verdict> {
    let d = transfer_diagnostics(g, p)?;
    let naive = naive_block_two_walks(g, p)?;
    let over = naive_overcount(g, p)?;
    let r = p.r();
    let total_b: i64 = d.b.sum()?;
    let total_m: i64 = d.m.sum()?;
    let d_sq: i64 = g.degrees().iter().map(|&x| (x * x) as i64).sum();
    let wedge_equitable = is_wedge_equitable(g, p)?.holds();
    Ok((|| {
        matrices_equal(&format!("{label}: M vs walk enumeration"), &d.m, &naive)?;
        matrices_equal(&format!("{label}: B^2 - M vs split-middle enumeration"), &d.overcount, &over)?;
        ensure(total_b == 2 * g.m() as i64, || format!("{label}: sum of B = {total_b}, 2m = {}", 2 * g.m()))?;
        ensure(total_m == d_sq, || format!("{label}: sum of M = {total_m}, sum of d^2 = {d_sq}"))?;
        ensure((0.0..=1.0).contains(&d.rho), || format!("{label}: rho = {} outside [0, 1]", d.rho))?;
        if wedge_equitable {
            for a in 0..r {
                for b in 0..r {
                    if a != b && d.overcount[(a, b)] != 0 {
                        return Err(format!(
                            "{label}: wedge-equitable but overcount ({a}, {b}) = {}",
                            d.overcount[(a, b)]
                        ));
                    }
                }
            }
        }
        Ok(())
    })())
}

fn check_transfer(ctx: &Context, opts: &VerifyOptions, seed: u64) -> Result<Verdict> {
    oracle_guard(ctx.g)?;
    let mut rng = SplitMix64::new(seed);
    let mut partitions = vec![
        ("singletons".to_string(), Partition::singletons(ctx.g.n())),
        ("one block".to_string(), Partition::whole(ctx.g.n())),
    ];
    for k in 0..opts.partitions_per_graph {
        partitions.push((format!("sampled partition {k}"), sample_partition(ctx.g.n(), &mut rng)));
    }
    for (label, p) in &partitions {
        if let Err(why) = transfer_verdict(ctx.g, p, label)? {
            return Ok(Err(why));
        }
    }
    Ok(Ok(()))
}

fn check_ego_partition(ctx: &Context, _: &VerifyOptions, _: u64) -> Result<Verdict> {
    let g = ctx.g;
    let s = dominate_clustered_core(g)?;
    let classes = classify_vertices(g)?;
    let core = g.induced_subgraph(&classes.clustered)?;
    let local: crate::graph::VertexSet = s
        .iter()
        .map(|v| core.original.binary_search(v).expect("dominator is clustered"))
        .collect();
    if let Some(v) = undominated_vertex(&core.graph, &local) {
        return Ok(Err(format!("vertex {} of the clustered core is not dominated", core.original[v])));
    }
    let types = classify_traversing(g, &s)?;
    let p = ego_traversing_partition(g, &s)?;
    let d = transfer_diagnostics(g, &p)?;
    let expected = s.len() + types.t3.len() + types.t4.len();
    let structural = (|| {
        ensure(p.r() == expected, || format!("r = {} but |S| + |T3| + |T4| = {expected}", p.r()))?;
        ensure(d.blocks == d.ego_blocks + d.traversing_singletons, || {
            format!("blocks {} != ego {} + singletons {}", d.blocks, d.ego_blocks, d.traversing_singletons)
        })?;
        ensure(d.rho > 0.0 && d.rho <= 1.0, || format!("rho = {} outside (0, 1]", d.rho))?;
        ensure(d.b_edges + d.b_internal == g.m() as i64, || {
            format!("B_edges {} + B_internal {} != m = {}", d.b_edges, d.b_internal, g.m())
        })
    })();
    if structural.is_err() {
        return Ok(structural);
    }
    transfer_verdict(g, &p, "ego-traversing partition")
}

fn check_weighted_transfer(g: &Graph, opts: &VerifyOptions, seed: u64) -> Result<Verdict> {
    let mut rng = SplitMix64::new(seed ^ 0x5eed);
    for _ in 0..opts.partitions_per_graph.max(1) {
        let p = sample_partition(g.n(), &mut rng);
        let d = weighted_transfer_diagnostics(g, &p)?;
        if let Some((a, b)) = (0..p.r())
            .flat_map(|a| (0..p.r()).map(move |b| (a, b)))
            .find(|&(a, b)| d.m[(a, b)] > d.b_squared[(a, b)] * (1.0 + 1e-9) + 1e-9)
        {
            return Ok(Err(format!(
                "weighted M ({a}, {b}) = {} exceeds B^2 = {}",
                d.m[(a, b)],
                d.b_squared[(a, b)]
            )));
        }
    }
    Ok(Ok(()))
}
