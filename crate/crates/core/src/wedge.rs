//! Two-walk operators and their triadic/open decomposition.
//!
//! For an undirected simple graph with adjacency `A` and degree matrix `D`
//! the two-walk operator is `W = A² − D`: off the diagonal `W[i][j]` counts
//! the common neighbors of `i` and `j`, and its row sums are the endpoint
//! wedge degrees `d₂`. Masking `W` with the edge set gives the triadic part
//! `T = A ∘ W`, whose entries are edge triangle multiplicities; masking with
//! the nonedges gives the open part `O = (J − I − A) ∘ W`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::matrix::{IntMatrix, RealMatrix, Scalar, SquareMatrix};

/// Default column cap for materialized incidence matrices.
pub const DEFAULT_INCIDENCE_CAP: usize = 1_000_000;

/// `A²`, accumulated over middle vertices from the neighbor lists.
pub fn adjacency_squared(g: &Graph) -> Result<IntMatrix> {
    g.require_undirected()?;
    let mut a2 = IntMatrix::zeros(g.n());
    for v in 0..g.n() {
        let nbrs = g.neighbors(v);
        for &i in nbrs {
            for &k in nbrs {
                a2[(i, k)] += 1;
            }
        }
    }
    Ok(a2)
}

/// `W = A² − D`.
pub fn two_walk_operator(g: &Graph) -> Result<IntMatrix> {
    let a2 = adjacency_squared(g)?;
    let degrees: Vec<i64> = g.degrees().into_iter().map(|d| d as i64).collect();
    a2.checked_sub(&IntMatrix::diagonal(&degrees))
}

/// `W_w = A_w² − diag(A_w 1)` for a weighted graph (unit weights when the
/// graph carries none).
pub fn weighted_two_walk_operator(g: &Graph) -> Result<RealMatrix> {
    g.require_undirected()?;
    let a = g.weighted_adjacency_matrix();
    let strength = a.row_sums()?;
    a.checked_mul(&a)?.checked_sub(&RealMatrix::diagonal(&strength))
}

/// The edge-supported and nonedge-supported parts of an operator.
#[derive(Debug, Clone, PartialEq)]
pub struct TriadicOpen<T> {
    pub triadic: SquareMatrix<T>,
    pub open: SquareMatrix<T>,
}

/// Splits `w` by support: entries on edges go to `triadic`, entries on
/// nonedges to `open`, the diagonal to neither.
pub fn split_by_support<T: Scalar>(g: &Graph, w: &SquareMatrix<T>) -> TriadicOpen<T> {
    let n = w.order();
    let mut triadic = SquareMatrix::zeros(n);
    let mut open = SquareMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if g.has_edge(i, j) {
                triadic[(i, j)] = w[(i, j)];
            } else {
                open[(i, j)] = w[(i, j)];
            }
        }
    }
    TriadicOpen { triadic, open }
}

/// `T = A ∘ W` and `O = (J − I − A) ∘ W`.
pub fn triadic_open_decomposition(g: &Graph) -> Result<TriadicOpen<i64>> {
    let w = two_walk_operator(g)?;
    let a = g.adjacency_matrix();
    let mask = IntMatrix::from_fn(g.n(), |i, j| i64::from(i != j) - a[(i, j)]);
    Ok(TriadicOpen {
        triadic: a.hadamard(&w)?,
        open: mask.hadamard(&w)?,
    })
}

pub fn weighted_triadic_open_decomposition(g: &Graph) -> Result<TriadicOpen<f64>> {
    Ok(split_by_support(g, &weighted_two_walk_operator(g)?))
}

/// Scalar wedge invariants of an undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeSummary {
    pub n: usize,
    pub m: usize,
    /// Triangle count `τ`.
    pub tau: u64,
    /// Two-paths counted by middle vertex, `Σ C(d_v, 2)`.
    pub m2: u64,
    /// Open wedges, `m₂ − 3τ`.
    pub omega: u64,
    pub per_vertex_tau: Vec<u64>,
    /// `C(d_v, 2)` per vertex.
    pub per_vertex_pi2: Vec<u64>,
    /// Two-paths having `v` as an endpoint (row sums of `W`).
    pub d2: Vec<u64>,
    pub n_clustered: usize,
    pub n_traversing: usize,
}

pub(crate) fn choose2(d: usize) -> u64 {
    let d = d as u64;
    d * d.saturating_sub(1) / 2
}

/// Triangle count and per-vertex triangle counts by sorted-list
/// intersection over ordered triples `i < j < k`.
pub(crate) fn count_triangles(g: &Graph) -> (u64, Vec<u64>) {
    let mut per_vertex = vec![0u64; g.n()];
    let mut total = 0u64;
    for_each_triangle(g, |i, j, k| {
        total += 1;
        per_vertex[i] += 1;
        per_vertex[j] += 1;
        per_vertex[k] += 1;
    });
    (total, per_vertex)
}

fn for_each_triangle(g: &Graph, mut f: impl FnMut(usize, usize, usize)) {
    for i in 0..g.n() {
        let ni = g.neighbors(i);
        for &j in ni.iter().filter(|&&j| j > i) {
            let nj = g.neighbors(j);
            // merge the tails of both lists above j
            let (mut p, mut q) = (ni.partition_point(|&x| x <= j), nj.partition_point(|&x| x <= j));
            while p < ni.len() && q < nj.len() {
                match ni[p].cmp(&nj[q]) {
                    std::cmp::Ordering::Less => p += 1,
                    std::cmp::Ordering::Greater => q += 1,
                    std::cmp::Ordering::Equal => {
                        f(i, j, ni[p]);
                        p += 1;
                        q += 1;
                    }
                }
            }
        }
    }
}

fn common_neighbors(a: &[usize], b: &[usize]) -> u64 {
    let (mut p, mut q, mut count) = (0, 0, 0);
    while p < a.len() && q < b.len() {
        match a[p].cmp(&b[q]) {
            std::cmp::Ordering::Less => p += 1,
            std::cmp::Ordering::Greater => q += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                p += 1;
                q += 1;
            }
        }
    }
    count
}

pub fn wedge_summary(g: &Graph) -> Result<WedgeSummary> {
    g.require_undirected()?;
    let degrees = g.degrees();
    let (tau, per_vertex_tau) = count_triangles(g);
    #[cfg(debug_assertions)]
    if g.n() <= 400 {
        let a = g.adjacency_matrix();
        let trace = a.checked_mul(&a)?.checked_mul(&a)?.trace()?;
        debug_assert_eq!(trace as u64, 6 * tau, "Tr(A^3) disagrees with triangle count");
    }
    let per_vertex_pi2: Vec<u64> = degrees.iter().map(|&d| choose2(d)).collect();
    let m2 = per_vertex_pi2
        .iter()
        .try_fold(0u64, |acc, &x| acc.checked_add(x))
        .ok_or(Error::Overflow("two-path count"))?;
    let omega = m2.checked_sub(3 * tau).ok_or_else(|| {
        Error::InvariantViolation(format!("m2 = {m2} is smaller than 3 * tau = {}", 3 * tau))
    })?;
    let d2 = (0..g.n())
        .map(|v| g.neighbors(v).iter().map(|&k| degrees[k] as u64 - 1).sum())
        .collect();
    let n_clustered = per_vertex_tau.iter().filter(|&&t| t > 0).count();
    Ok(WedgeSummary {
        n: g.n(),
        m: g.m(),
        tau,
        m2,
        omega,
        per_vertex_tau,
        per_vertex_pi2,
        d2,
        n_clustered,
        n_traversing: g.n() - n_clustered,
    })
}

/// Triangle multiplicity `t_e = |N(u) ∩ N(v)|` of every edge `u < v`.
pub fn edge_triangle_multiplicities(g: &Graph) -> Result<BTreeMap<(usize, usize), u64>> {
    g.require_undirected()?;
    Ok(g.edges()
        .map(|(u, v)| ((u, v), common_neighbors(g.neighbors(u), g.neighbors(v))))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColumnLabel {
    /// Unordered two-path `first – middle – last` with `first < last`.
    TwoPath { first: usize, middle: usize, last: usize },
    Triangle([usize; 3]),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceColumn {
    pub label: ColumnLabel,
    /// Rows holding a 1, increasing.
    pub support: Vec<usize>,
}

/// A 0/1 vertex-by-object incidence matrix stored column-wise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    columns: Vec<IncidenceColumn>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[IncidenceColumn] {
        &self.columns
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        u8::from(self.columns[col].support.binary_search(&row).is_ok())
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|i| (0..self.cols()).map(|p| self.get(i, p)).collect())
            .collect()
    }

    /// `B Bᵀ`.
    pub fn gram(&self) -> IntMatrix {
        let mut g = IntMatrix::zeros(self.rows);
        for col in &self.columns {
            for &r in &col.support {
                for &s in &col.support {
                    g[(r, s)] += 1;
                }
            }
        }
        g
    }
}

fn check_cap(what: &'static str, requested: u64, cap: usize) -> Result<()> {
    if requested > cap as u64 {
        return Err(Error::ResourceLimit {
            what,
            requested,
            cap: cap as u64,
        });
    }
    Ok(())
}

/// Two-incidence matrix `B₂`: one column per unordered two-path, with 1s at
/// its two endpoints; columns sorted by `(middle, first, last)`.
pub fn two_incidence(g: &Graph, cap: usize) -> Result<IncidenceMatrix> {
    g.require_undirected()?;
    let m2: u64 = g.degrees().into_iter().map(choose2).sum();
    check_cap("m2", m2, cap)?;
    let mut columns = Vec::with_capacity(m2 as usize);
    for middle in 0..g.n() {
        let nbrs = g.neighbors(middle);
        for (p, &first) in nbrs.iter().enumerate() {
            for &last in &nbrs[p + 1..] {
                columns.push(IncidenceColumn {
                    label: ColumnLabel::TwoPath { first, middle, last },
                    support: vec![first, last],
                });
            }
        }
    }
    Ok(IncidenceMatrix { rows: g.n(), columns })
}

/// Triangle incidence matrix `B_△`, columns in lexicographic order.
pub fn triangle_incidence(g: &Graph, cap: usize) -> Result<IncidenceMatrix> {
    g.require_undirected()?;
    let (tau, _) = count_triangles(g);
    check_cap("tau", tau, cap)?;
    let mut columns = Vec::with_capacity(tau as usize);
    for_each_triangle(g, |i, j, k| {
        columns.push(IncidenceColumn {
            label: ColumnLabel::Triangle([i, j, k]),
            support: vec![i, j, k],
        })
    });
    Ok(IncidenceMatrix { rows: g.n(), columns })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Clustering {
    /// `τ(v) / C(d_v, 2)`, or 0 when `d_v < 2`.
    pub per_vertex: Vec<f64>,
    /// `3τ / m₂`, or 0 when `m₂ = 0`.
    pub transitivity: f64,
}

pub fn local_clustering(g: &Graph) -> Result<Clustering> {
    let s = wedge_summary(g)?;
    let per_vertex = s
        .per_vertex_tau
        .iter()
        .zip(&s.per_vertex_pi2)
        .map(|(&t, &pairs)| if pairs == 0 { 0.0 } else { t as f64 / pairs as f64 })
        .collect();
    let transitivity = if s.m2 == 0 {
        0.0
    } else {
        (3 * s.tau) as f64 / s.m2 as f64
    };
    Ok(Clustering {
        per_vertex,
        transitivity,
    })
}

/// An induced path `first – middle – last` (`first ≁ last`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OpenWedge {
    pub first: usize,
    pub middle: usize,
    pub last: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClusterCheck {
    /// Every component is a clique.
    ClusterGraph,
    NotCluster(OpenWedge),
}

impl ClusterCheck {
    pub fn is_cluster_graph(&self) -> bool {
        matches!(self, ClusterCheck::ClusterGraph)
    }

    pub fn witness(&self) -> Option<OpenWedge> {
        match *self {
            ClusterCheck::ClusterGraph => None,
            ClusterCheck::NotCluster(w) => Some(w),
        }
    }
}

/// Searches for an open wedge; a graph has none exactly when it is a
/// disjoint union of cliques. The witness is the first open wedge in
/// `(middle, first, last)` order.
pub fn is_cluster_graph(g: &Graph) -> Result<ClusterCheck> {
    g.require_undirected()?;
    for middle in 0..g.n() {
        let nbrs = g.neighbors(middle);
        for (p, &first) in nbrs.iter().enumerate() {
            if let Some(&last) = nbrs[p + 1..].iter().find(|&&last| !g.has_edge(first, last)) {
                return Ok(ClusterCheck::NotCluster(OpenWedge { first, middle, last }));
            }
        }
    }
    Ok(ClusterCheck::ClusterGraph)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexClasses {
    /// Vertices lying in at least one triangle.
    pub clustered: VertexSet,
    /// Vertices in no triangle.
    pub traversing: VertexSet,
}

/// Splits the vertices into clustered and traversing sets. A vertex is
/// traversing iff `τ(v) = 0`; the edgeless-neighborhood test is run as well
/// and must agree.
pub fn classify_vertices(g: &Graph) -> Result<VertexClasses> {
    g.require_undirected()?;
    let (_, per_vertex_tau) = count_triangles(g);
    let mut clustered = Vec::new();
    let mut traversing = Vec::new();
    for v in 0..g.n() {
        let nbrs = g.neighbors(v);
        let edgeless = nbrs
            .iter()
            .enumerate()
            .all(|(p, &x)| nbrs[p + 1..].iter().all(|&y| !g.has_edge(x, y)));
        assert_eq!(
            per_vertex_tau[v] == 0,
            edgeless,
            "traversing tests disagree at vertex {v}"
        );
        if edgeless {
            traversing.push(v);
        } else {
            clustered.push(v);
        }
    }
    Ok(VertexClasses {
        clustered: clustered.into_iter().collect(),
        traversing: traversing.into_iter().collect(),
    })
}

/// A directed two-step operator with its arc-masked and non-arc-masked
/// parts.
#[derive(Debug, Clone, PartialEq)]
pub struct MaskedOperator {
    pub operator: IntMatrix,
    pub triadic: IntMatrix,
    pub open: IntMatrix,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DirectedWedgeOperators {
    /// `A²`: walks `i → k → j`.
    pub out_out: MaskedOperator,
    /// `(Aᵀ)²`: walks `i ← k ← j`.
    pub in_in: MaskedOperator,
    /// `A Aᵀ`: common out-neighbors.
    pub out_in: MaskedOperator,
    /// `Aᵀ A`: common in-neighbors.
    pub in_out: MaskedOperator,
}

pub fn directed_wedge_operators(g: &Graph) -> Result<DirectedWedgeOperators> {
    if !g.is_directed() {
        return Err(Error::Unsupported("directed wedge operators need a directed graph"));
    }
    let a = g.adjacency_matrix();
    let at = a.transpose();
    let non_arc = IntMatrix::from_fn(g.n(), |i, j| i64::from(i != j) - a[(i, j)]);
    let masked = |operator: IntMatrix| -> Result<MaskedOperator> {
        Ok(MaskedOperator {
            triadic: a.hadamard(&operator)?,
            open: non_arc.hadamard(&operator)?,
            operator,
        })
    };
    Ok(DirectedWedgeOperators {
        out_out: masked(a.checked_mul(&a)?)?,
        in_in: masked(at.checked_mul(&at)?)?,
        out_in: masked(a.checked_mul(&at)?)?,
        in_out: masked(at.checked_mul(&a)?)?,
    })
}
