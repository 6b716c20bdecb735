//! Vertex partitions, ego-traversing contractions and the two-walk transfer
//! diagnostics.
//!
//! For a partition `P₁, …, P_r` the directed edge-sum quotient `B` counts
//! arcs between blocks (`B_aa` is twice the internal edge count) and the
//! aggregated two-walk matrix `M` sums `A²` blockwise. With `d_a(x)` the
//! number of neighbors of `x` in `P_a`,
//!
//! ```text
//! (B² − M)_ab = Σ_c Σ_{x ≠ y ∈ P_c} d_a(x) d_b(y)  ≥ 0
//! ```
//!
//! so the quotient never undercounts two-walks. [`transfer_diagnostics`]
//! evaluates both sides independently and insists they agree.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{EdgeList, Graph, VertexSet};
use crate::matrix::{IntMatrix, RealMatrix, Scalar, SquareMatrix};
use crate::rng::SplitMix64;
use crate::wedge::{adjacency_squared, classify_vertices, VertexClasses};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockKind {
    /// Ego block of the given dominator.
    Ego(usize),
    /// A traversing vertex kept on its own.
    TraversingSingleton,
    Other,
}

/// A partition of `0..n` into nonempty blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    block_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
    kinds: Vec<BlockKind>,
}

impl Partition {
    /// Validates and normalizes `blocks` (each block is sorted). Without
    /// `kinds` every block is tagged [`BlockKind::Other`].
    pub fn from_blocks(n: usize, mut blocks: Vec<Vec<usize>>, kinds: Option<Vec<BlockKind>>) -> Result<Self> {
        let kinds = kinds.unwrap_or_else(|| vec![BlockKind::Other; blocks.len()]);
        if kinds.len() != blocks.len() {
            return Err(Error::InvalidPartition(format!(
                "{} kinds for {} blocks",
                kinds.len(),
                blocks.len()
            )));
        }
        let mut block_of = vec![usize::MAX; n];
        for (a, block) in blocks.iter_mut().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {a} is empty")));
            }
            block.sort_unstable();
            for &v in block.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if block_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("vertex {v} lies in two blocks")));
                }
                block_of[v] = a;
            }
            match kinds[a] {
                BlockKind::TraversingSingleton if block.len() != 1 => {
                    return Err(Error::InvalidPartition(format!(
                        "traversing singleton block {a} has {} vertices",
                        block.len()
                    )));
                }
                BlockKind::Ego(center) if block.binary_search(&center).is_err() => {
                    return Err(Error::InvalidPartition(format!(
                        "ego block {a} does not contain its center {center}"
                    )));
                }
                _ => {}
            }
        }
        if let Some(v) = block_of.iter().position(|&a| a == usize::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        Ok(Self { block_of, blocks, kinds })
    }

    /// From a block index per vertex; indices must be exactly `0..r`.
    pub fn from_assignment(block_of: &[usize]) -> Result<Self> {
        let r = block_of.iter().max().map_or(0, |&a| a + 1);
        let mut blocks = vec![Vec::new(); r];
        for (v, &a) in block_of.iter().enumerate() {
            blocks[a].push(v);
        }
        Self::from_blocks(block_of.len(), blocks, None)
    }

    /// Every vertex in its own block.
    pub fn singletons(n: usize) -> Self {
        Self {
            block_of: (0..n).collect(),
            blocks: (0..n).map(|v| vec![v]).collect(),
            kinds: vec![BlockKind::Other; n],
        }
    }

    /// A single block holding every vertex (no blocks when `n = 0`).
    pub fn whole(n: usize) -> Self {
        let r = usize::from(n > 0);
        Self {
            block_of: vec![0; n],
            blocks: vec![(0..n).collect(); r],
            kinds: vec![BlockKind::Other; r],
        }
    }

    pub fn n(&self) -> usize {
        self.block_of.len()
    }

    /// Number of blocks.
    pub fn r(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    pub fn block(&self, a: usize) -> &[usize] {
        &self.blocks[a]
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn kind(&self, a: usize) -> BlockKind {
        self.kinds[a]
    }

    pub fn ego_blocks(&self) -> usize {
        self.kinds.iter().filter(|k| matches!(k, BlockKind::Ego(_))).count()
    }

    pub fn traversing_singletons(&self) -> usize {
        self.kinds
            .iter()
            .filter(|k| matches!(k, BlockKind::TraversingSingleton))
            .count()
    }

    fn check_graph(&self, g: &Graph) -> Result<()> {
        g.require_undirected()?;
        if self.n() != g.n() {
            return Err(Error::InvalidPartition(format!(
                "partition covers {} vertices but the graph has {}",
                self.n(),
                g.n()
            )));
        }
        Ok(())
    }
}

/// Reads a partition file: one block per line as whitespace-separated vertex
/// labels, `#` comments. A line may start with a kind token, `kind:ego=<label>`,
/// `kind:traversing` or `kind:other`. Untagged singleton blocks holding a
/// traversing vertex are tagged [`BlockKind::TraversingSingleton`].
pub fn parse_partition(text: &str, edges: &EdgeList) -> Result<Partition> {
    let index = edges.label_index();
    let lookup = |line: usize, label: &str| {
        index.get(label).copied().ok_or_else(|| Error::Parse {
            line,
            message: format!("unknown vertex label `{label}`"),
        })
    };
    let mut blocks = Vec::new();
    let mut kinds = Vec::new();
    let mut tagged = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let mut tokens = raw.split('#').next().unwrap_or("").split_whitespace().peekable();
        let Some(&first) = tokens.peek() else { continue };
        let mut kind = None;
        if let Some(tag) = first.strip_prefix("kind:") {
            tokens.next();
            kind = Some(match tag {
                "traversing" => BlockKind::TraversingSingleton,
                "other" => BlockKind::Other,
                _ => match tag.strip_prefix("ego=") {
                    Some(center) => BlockKind::Ego(lookup(line, center)?),
                    None => {
                        return Err(Error::Parse {
                            line,
                            message: format!("unknown block kind `{tag}`"),
                        })
                    }
                },
            });
        }
        let block = tokens.map(|t| lookup(line, t)).collect::<Result<Vec<_>>>()?;
        if block.is_empty() {
            return Err(Error::Parse {
                line,
                message: "block has no vertices".into(),
            });
        }
        tagged.push(kind.is_some());
        kinds.push(kind.unwrap_or(BlockKind::Other));
        blocks.push(block);
    }
    if tagged.iter().any(|&t| !t) {
        let traversing = classify_vertices(&edges.graph)?.traversing;
        for ((block, kind), explicit) in blocks.iter().zip(kinds.iter_mut()).zip(&tagged) {
            if !explicit && block.len() == 1 && traversing.contains(block[0]) {
                *kind = BlockKind::TraversingSingleton;
            }
        }
    }
    Partition::from_blocks(edges.graph.n(), blocks, Some(kinds))
}

/// Inverse of [`parse_partition`].
pub fn format_partition(p: &Partition, labels: &[String]) -> String {
    let mut out = String::new();
    for (a, block) in p.blocks().iter().enumerate() {
        let mut tokens: Vec<String> = Vec::with_capacity(block.len() + 1);
        match p.kind(a) {
            BlockKind::Ego(c) => tokens.push(format!("kind:ego={}", labels[c])),
            BlockKind::TraversingSingleton => tokens.push("kind:traversing".into()),
            BlockKind::Other => tokens.push("kind:other".into()),
        }
        tokens.extend(block.iter().map(|&v| labels[v].clone()));
        writeln!(out, "{}", tokens.join(" ")).unwrap();
    }
    out
}

/// Uniform random partition for property checks: the block count is drawn
/// from `2..=min(n, 6)` (1 when `n < 2`), every vertex picks a block
/// uniformly, and empty blocks are dropped.
pub fn sample_partition(n: usize, rng: &mut SplitMix64) -> Partition {
    if n < 2 {
        return Partition::whole(n);
    }
    let max_r = n.min(6) as u64;
    let r = 2 + rng.below(max_r - 1) as usize;
    let raw: Vec<usize> = (0..n).map(|_| rng.below(r as u64) as usize).collect();
    let mut relabel = vec![usize::MAX; r];
    let mut next = 0;
    let block_of: Vec<usize> = raw
        .iter()
        .map(|&a| {
            if relabel[a] == usize::MAX {
                relabel[a] = next;
                next += 1;
            }
            relabel[a]
        })
        .collect();
    Partition::from_assignment(&block_of).expect("relabelled assignment is compact")
}

/// Greedy dominating set: repeatedly take the vertex whose closed
/// neighborhood covers the most undominated vertices, smallest id on ties.
pub fn greedy_dominating_set(h: &Graph) -> VertexSet {
    let n = h.n();
    let mut dominated = vec![false; n];
    let mut remaining = n;
    let mut chosen = Vec::new();
    while remaining > 0 {
        let gain = |v: usize| {
            usize::from(!dominated[v]) + h.neighbors(v).iter().filter(|&&u| !dominated[u]).count()
        };
        let mut best = 0;
        let mut best_gain = 0;
        for v in 0..n {
            let g = gain(v);
            if g > best_gain {
                best = v;
                best_gain = g;
            }
        }
        chosen.push(best);
        for u in std::iter::once(best).chain(h.neighbors(best).iter().copied()) {
            if !dominated[u] {
                dominated[u] = true;
                remaining -= 1;
            }
        }
    }
    chosen.into_iter().collect()
}

/// First vertex of `h` neither in `s` nor adjacent to it.
pub fn undominated_vertex(h: &Graph, s: &VertexSet) -> Option<usize> {
    (0..h.n()).find(|&v| !s.contains(v) && !h.neighbors(v).iter().any(|&u| s.contains(u)))
}

/// Greedy dominating set of the clustered core `G[V_cl]`, in the ids of `g`.
pub fn dominate_clustered_core(g: &Graph) -> Result<VertexSet> {
    let classes = classify_vertices(g)?;
    let core = g.induced_subgraph(&classes.clustered)?;
    Ok(greedy_dominating_set(&core.graph)
        .iter()
        .map(|&v| core.original[v])
        .collect())
}

/// The four traversing types relative to a dominating set `S` of the
/// clustered core.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TraversingTypes {
    /// At least one neighbor in `S`.
    pub t1: VertexSet,
    /// No neighbor in `S`, at least one in `V_cl \ S`.
    pub t2: VertexSet,
    /// No clustered neighbor; neighbors meet exactly one ego block.
    pub t3: VertexSet,
    /// No clustered neighbor; neighbors meet zero or several ego blocks.
    pub t4: VertexSet,
}

struct EgoPlan {
    classes: VertexClasses,
    /// Ego center for clustered, T1 and T2 vertices.
    center: Vec<Option<usize>>,
    types: TraversingTypes,
}

fn plan_ego_blocks(g: &Graph, s: &VertexSet) -> Result<EgoPlan> {
    g.require_undirected()?;
    s.check_within(g.n())?;
    let classes = classify_vertices(g)?;
    if let Some(&v) = s.iter().find(|&&v| !classes.clustered.contains(v)) {
        return Err(Error::DominatorNotClustered(v));
    }
    let smallest_dominator = |v: usize| g.neighbors(v).iter().copied().find(|&u| s.contains(u));

    let mut center = vec![None; g.n()];
    for &u in classes.clustered.iter() {
        center[u] = if s.contains(u) {
            Some(u)
        } else {
            Some(smallest_dominator(u).ok_or(Error::NotDominating(u))?)
        };
    }

    let (mut t1, mut t2, mut detached) = (Vec::new(), Vec::new(), Vec::new());
    for &v in classes.traversing.iter() {
        if let Some(d) = smallest_dominator(v) {
            center[v] = Some(d);
            t1.push(v);
        } else if let Some(&u) = g
            .neighbors(v)
            .iter()
            .find(|&&u| classes.clustered.contains(u) && !s.contains(u))
        {
            center[v] = Some(center[u].ok_or(Error::Assignment(v))?);
            t2.push(v);
        } else {
            detached.push(v);
        }
    }

    let (mut t3, mut t4) = (Vec::new(), Vec::new());
    for v in detached {
        let mut attached: Vec<usize> = g.neighbors(v).iter().filter_map(|&u| center[u]).collect();
        attached.sort_unstable();
        attached.dedup();
        if attached.len() == 1 {
            t3.push(v);
        } else {
            t4.push(v);
        }
    }

    Ok(EgoPlan {
        classes,
        center,
        types: TraversingTypes {
            t1: t1.into_iter().collect(),
            t2: t2.into_iter().collect(),
            t3: t3.into_iter().collect(),
            t4: t4.into_iter().collect(),
        },
    })
}

/// Types every traversing vertex of `g` relative to the dominating set `s`
/// of `G[V_cl]`.
pub fn classify_traversing(g: &Graph, s: &VertexSet) -> Result<TraversingTypes> {
    Ok(plan_ego_blocks(g, s)?.types)
}

/// Ego-traversing partition: one ego block per dominator holding the
/// dominated clustered vertices and T1/T2 traversing vertices assigned to
/// it (smallest adjacent dominator; T2 vertices follow their smallest
/// dominated clustered neighbor), then one singleton per T3/T4 vertex.
pub fn ego_traversing_partition(g: &Graph, s: &VertexSet) -> Result<Partition> {
    let plan = plan_ego_blocks(g, s)?;
    let slot: HashMap<usize, usize> = s.iter().enumerate().map(|(a, &c)| (c, a)).collect();
    let mut blocks = vec![Vec::new(); s.len()];
    let mut kinds: Vec<BlockKind> = s.iter().map(|&c| BlockKind::Ego(c)).collect();
    let mut singles = Vec::new();
    for v in 0..g.n() {
        match plan.center[v] {
            Some(c) => blocks[slot[&c]].push(v),
            None if plan.types.t3.contains(v) || plan.types.t4.contains(v) => singles.push(v),
            None => return Err(Error::Assignment(v)),
        }
    }
    for v in singles {
        blocks.push(vec![v]);
        kinds.push(BlockKind::TraversingSingleton);
    }
    let expected = s.len() + plan.types.t3.len() + plan.types.t4.len();
    if blocks.len() != expected {
        return Err(Error::InvariantViolation(format!(
            "ego-traversing partition has {} blocks, expected |S| + |T3| + |T4| = {expected}",
            blocks.len()
        )));
    }
    debug_assert_eq!(
        plan.classes.traversing.len(),
        plan.types.t1.len() + plan.types.t2.len() + plan.types.t3.len() + plan.types.t4.len()
    );
    Partition::from_blocks(g.n(), blocks, Some(kinds))
}

/// `d[x][a]`: total edge weight from `x` into block `a`.
fn weighted_block_degrees<T: Scalar>(g: &Graph, p: &Partition, weight: impl Fn(f64) -> T) -> Vec<Vec<T>> {
    let mut d = vec![vec![T::zero(); p.r()]; g.n()];
    for (x, row) in d.iter_mut().enumerate() {
        for (u, w) in g.weighted_neighbors(x) {
            let cell = &mut row[p.block_of(u)];
            *cell = cell.checked_add(weight(w)).expect("block degree overflow");
        }
    }
    d
}

/// `d_a(x)`, the number of neighbors of `x` in block `a`, as `d[x][a]`.
pub fn block_degrees(g: &Graph, p: &Partition) -> Vec<Vec<i64>> {
    weighted_block_degrees(g, p, |_| 1i64)
}

fn edge_sum<T: Scalar>(g: &Graph, p: &Partition, weight: impl Fn(f64) -> T) -> Result<SquareMatrix<T>> {
    let mut b = SquareMatrix::zeros(p.r());
    for u in 0..g.n() {
        for (v, w) in g.weighted_neighbors(u) {
            let cell: &mut T = &mut b[(p.block_of(u), p.block_of(v))];
            *cell = cell.checked_add(weight(w)).ok_or(Error::Overflow("edge-sum quotient"))?;
        }
    }
    Ok(b)
}

fn blockwise_sum<T: Scalar>(p: &Partition, x: &SquareMatrix<T>) -> Result<SquareMatrix<T>> {
    let mut m = SquareMatrix::zeros(p.r());
    for u in 0..x.order() {
        for w in 0..x.order() {
            let cell: &mut T = &mut m[(p.block_of(u), p.block_of(w))];
            *cell = cell.checked_add(x[(u, w)]).ok_or(Error::Overflow("aggregated two-walks"))?;
        }
    }
    Ok(m)
}

/// Directed edge-sum quotient `B`.
pub fn quotient_edge_sum(g: &Graph, p: &Partition) -> Result<IntMatrix> {
    p.check_graph(g)?;
    edge_sum(g, p, |_| 1i64)
}

/// Aggregated two-walk matrix `M_ab = Σ_{u ∈ P_a, w ∈ P_b} (A²)_uw`.
pub fn aggregated_two_walk(g: &Graph, p: &Partition) -> Result<IntMatrix> {
    p.check_graph(g)?;
    blockwise_sum(p, &adjacency_squared(g)?)
}

pub fn weighted_quotient_edge_sum(g: &Graph, p: &Partition) -> Result<RealMatrix> {
    p.check_graph(g)?;
    edge_sum(g, p, |w| w)
}

pub fn weighted_aggregated_two_walk(g: &Graph, p: &Partition) -> Result<RealMatrix> {
    p.check_graph(g)?;
    let a = g.weighted_adjacency_matrix();
    blockwise_sum(p, &a.checked_mul(&a)?)
}

/// Everything needed to judge how a contraction distorts two-walk mass.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientDiagnostics<T> {
    pub b: SquareMatrix<T>,
    pub m: SquareMatrix<T>,
    pub b_squared: SquareMatrix<T>,
    /// `B² − M`, entrywise nonnegative.
    pub overcount: SquareMatrix<T>,
    /// `Σ_{a≠b} M_ab / Σ_{a≠b} (B²)_ab`, or 1 when the denominator is 0.
    pub rho: f64,
    pub blocks: usize,
    pub ego_blocks: usize,
    pub traversing_singletons: usize,
    /// Edges between distinct blocks, `Σ_{a<b} B_ab`.
    pub b_edges: T,
    /// Edges inside blocks, `Σ_a B_aa / 2`.
    pub b_internal: T,
}

/// The overcount as the explicit double sum over distinct middle vertices
/// sharing a block.
fn overcount_double_sum<T: Scalar>(p: &Partition, degrees: &[Vec<T>]) -> Result<SquareMatrix<T>> {
    let r = p.r();
    let mut out = SquareMatrix::zeros(r);
    for block in p.blocks() {
        let support: Vec<Vec<(usize, T)>> = block
            .iter()
            .map(|&x| {
                degrees[x]
                    .iter()
                    .enumerate()
                    .filter(|&(_, &d)| d != T::zero())
                    .map(|(a, &d)| (a, d))
                    .collect()
            })
            .collect();
        for (i, sx) in support.iter().enumerate() {
            for (j, sy) in support.iter().enumerate() {
                if i == j {
                    continue;
                }
                for &(a, da) in sx {
                    for &(b, db) in sy {
                        let cell: &mut T = &mut out[(a, b)];
                        *cell = da
                            .checked_mul(db)
                            .and_then(|x| cell.checked_add(x))
                            .ok_or(Error::Overflow("overcount"))?;
                    }
                }
            }
        }
    }
    Ok(out)
}

fn diagnose<T: Scalar>(
    p: &Partition,
    b: SquareMatrix<T>,
    m: SquareMatrix<T>,
    degrees: &[Vec<T>],
    agree: impl Fn(T, T) -> bool,
) -> Result<QuotientDiagnostics<T>> {
    let b_squared = b.checked_mul(&b)?;
    let overcount = b_squared.checked_sub(&m)?;
    let direct = overcount_double_sum(p, degrees)?;
    let r = p.r();
    for a in 0..r {
        for c in 0..r {
            if !agree(overcount[(a, c)], direct[(a, c)]) {
                return Err(Error::InvariantViolation(format!(
                    "overcount mismatch at ({a}, {c}): B^2 - M = {} but the double sum gives {}",
                    overcount[(a, c)],
                    direct[(a, c)]
                )));
            }
            if !agree(overcount[(a, c)], T::zero()) && overcount[(a, c)] < T::zero() {
                return Err(Error::InvariantViolation(format!(
                    "negative overcount {} at ({a}, {c})",
                    overcount[(a, c)]
                )));
            }
        }
    }
    let denominator = b_squared.off_diagonal_sum()?.to_f64();
    let rho = if denominator == 0.0 {
        1.0
    } else {
        m.off_diagonal_sum()?.to_f64() / denominator
    };
    let mut b_edges = T::zero();
    let mut twice_internal = T::zero();
    for a in 0..r {
        twice_internal = twice_internal.checked_add(b[(a, a)]).ok_or(Error::Overflow("B trace"))?;
        for c in a + 1..r {
            b_edges = b_edges.checked_add(b[(a, c)]).ok_or(Error::Overflow("B sum"))?;
        }
    }
    let b_internal = twice_internal.half();
    Ok(QuotientDiagnostics {
        b,
        m,
        b_squared,
        overcount,
        rho,
        blocks: r,
        ego_blocks: p.ego_blocks(),
        traversing_singletons: p.traversing_singletons(),
        b_edges,
        b_internal,
    })
}

/// `B`, `M`, the overcount (checked against the explicit double sum) and
/// `ρ` for an unweighted graph. Weights, if any, are ignored.
pub fn transfer_diagnostics(g: &Graph, p: &Partition) -> Result<QuotientDiagnostics<i64>> {
    p.check_graph(g)?;
    let g = g.unweighted();
    let b = edge_sum(&g, p, |_| 1i64)?;
    let m = blockwise_sum(p, &adjacency_squared(&g)?)?;
    diagnose(p, b, m, &block_degrees(&g, p), |x, y| x == y)
}

/// Weighted variant: arc weights replace counts and `d_a(x)` is the total
/// weight from `x` into `P_a`. Agreement is to 1e-9 relative.
pub fn weighted_transfer_diagnostics(g: &Graph, p: &Partition) -> Result<QuotientDiagnostics<f64>> {
    p.check_graph(g)?;
    for u in 0..g.n() {
        if let Some((v, w)) = g.weighted_neighbors(u).find(|&(_, w)| w < 0.0) {
            return Err(Error::NegativeWeight {
                u: u.to_string(),
                v: v.to_string(),
                weight: w,
            });
        }
    }
    let b = weighted_quotient_edge_sum(g, p)?;
    let m = weighted_aggregated_two_walk(g, p)?;
    let degrees = weighted_block_degrees(g, p, |w| w);
    diagnose(p, b, m, &degrees, |x, y| {
        (x - y).abs() <= 1e-9 * x.abs().max(y.abs()).max(1.0)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquitableCheck {
    Equitable,
    /// `x, y ∈ P_c` have different neighbor counts in `P_a`.
    Violation { a: usize, c: usize, x: usize, y: usize },
}

impl EquitableCheck {
    pub fn holds(&self) -> bool {
        matches!(self, EquitableCheck::Equitable)
    }
}

/// Equitable: `d_a(x)` is constant over each block `P_c`, for every `a`.
pub fn is_equitable(g: &Graph, p: &Partition) -> Result<EquitableCheck> {
    p.check_graph(g)?;
    let d = block_degrees(g, p);
    for (c, block) in p.blocks().iter().enumerate() {
        let x = block[0];
        for &y in &block[1..] {
            if let Some(a) = (0..p.r()).find(|&a| d[x][a] != d[y][a]) {
                return Ok(EquitableCheck::Violation { a, c, x, y });
            }
        }
    }
    Ok(EquitableCheck::Equitable)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WedgeEquitableCheck {
    WedgeEquitable,
    /// `x ≠ y ∈ P_c` with `d_a(x) d_b(y) > 0`.
    Violation { a: usize, b: usize, c: usize, x: usize, y: usize },
}

impl WedgeEquitableCheck {
    pub fn holds(&self) -> bool {
        matches!(self, WedgeEquitableCheck::WedgeEquitable)
    }
}

/// Wedge-equitable: for every block triple `(a, b, c)` some `x⋆ ∈ P_c`
/// makes `d_a(x) d_b(y) = 0` for all `(x, y) ≠ (x⋆, x⋆)` in `P_c`. Pairs
/// `a = b` are included.
pub fn is_wedge_equitable(g: &Graph, p: &Partition) -> Result<WedgeEquitableCheck> {
    p.check_graph(g)?;
    let d = block_degrees(g, p);
    for (c, block) in p.blocks().iter().enumerate() {
        // support[a] = vertices of P_c with a neighbor in P_a
        let mut support: Vec<Vec<usize>> = vec![Vec::new(); p.r()];
        for &x in block {
            for (a, &da) in d[x].iter().enumerate() {
                if da > 0 {
                    support[a].push(x);
                }
            }
        }
        let active: Vec<usize> = (0..p.r()).filter(|&a| !support[a].is_empty()).collect();
        for &a in &active {
            for &b in &active {
                let pair = support[a]
                    .iter()
                    .flat_map(|&x| support[b].iter().map(move |&y| (x, y)))
                    .find(|&(x, y)| x != y);
                if let Some((x, y)) = pair {
                    return Ok(WedgeEquitableCheck::Violation { a, b, c, x, y });
                }
            }
        }
    }
    debug_assert!({
        let diag = transfer_diagnostics(g, p).expect("diagnostics");
        (0..p.r()).all(|a| (0..p.r()).all(|b| a == b || diag.overcount[(a, b)] == 0))
    });
    Ok(WedgeEquitableCheck::WedgeEquitable)
}
