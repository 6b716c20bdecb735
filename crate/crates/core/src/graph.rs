//! Simple graphs with dense vertex ids and sorted neighbor lists.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, RealMatrix};

/// A finite simple graph on vertices `0..n`.
///
/// Undirected graphs store every edge in both neighbor lists. Directed
/// graphs store out-neighbors only. Optional weights run parallel to the
/// neighbor lists and are symmetric for undirected graphs.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    weights: Option<Vec<Vec<f64>>>,
    directed: bool,
}

/// Accumulates edges, collapsing duplicates (last weight wins).
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    directed: bool,
    weighted: bool,
    edges: BTreeMap<(usize, usize), f64>,
    duplicates: usize,
}

impl GraphBuilder {
    pub fn new(n: usize, directed: bool) -> Self {
        Self {
            n,
            directed,
            weighted: false,
            edges: BTreeMap::new(),
            duplicates: 0,
        }
    }

    /// Adds an edge (an arc `u -> v` when directed). Returns `false` when
    /// the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize, weight: Option<f64>) -> Result<bool> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::InvalidParameter(format!("self-loop on vertex {u}")));
        }
        if let Some(w) = weight {
            if !w.is_finite() {
                return Err(Error::InvalidParameter(format!("non-finite weight {w} on edge ({u}, {v})")));
            }
            if w < 0.0 {
                return Err(Error::NegativeWeight {
                    u: u.to_string(),
                    v: v.to_string(),
                    weight: w,
                });
            }
            self.weighted = true;
        }
        let key = if self.directed { (u, v) } else { (u.min(v), u.max(v)) };
        let w = weight.unwrap_or(1.0);
        match self.edges.entry(key) {
            Entry::Occupied(mut e) => {
                e.insert(w);
                self.duplicates += 1;
                Ok(false)
            }
            Entry::Vacant(e) => {
                e.insert(w);
                Ok(true)
            }
        }
    }

    pub fn duplicates(&self) -> usize {
        self.duplicates
    }

    pub fn build(self) -> Graph {
        let mut adjacency = vec![Vec::new(); self.n];
        let mut weights = vec![Vec::new(); self.n];
        for (&(u, v), &w) in &self.edges {
            adjacency[u].push((v, w));
            if !self.directed {
                adjacency[v].push((u, w));
            }
        }
        let mut lists = Vec::with_capacity(self.n);
        for (row, wrow) in adjacency.iter_mut().zip(weights.iter_mut()) {
            row.sort_by_key(|&(v, _)| v);
            *wrow = row.iter().map(|&(_, w)| w).collect();
            lists.push(row.iter().map(|&(v, _)| v).collect());
        }
        Graph {
            adjacency: lists,
            weights: self.weighted.then_some(weights),
            directed: self.directed,
        }
    }
}

impl Graph {
    /// Undirected, unweighted graph; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut b = GraphBuilder::new(n, false);
        for (u, v) in edges {
            b.add_edge(u, v, None)?;
        }
        Ok(b.build())
    }

    /// Undirected graph with nonnegative symmetric weights.
    pub fn from_weighted_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize, f64)>,
    ) -> Result<Self> {
        let mut b = GraphBuilder::new(n, false);
        b.weighted = true;
        for (u, v, w) in edges {
            b.add_edge(u, v, Some(w))?;
        }
        Ok(b.build())
    }

    /// Directed graph from arcs `u -> v`.
    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut b = GraphBuilder::new(n, true);
        for (u, v) in arcs {
            b.add_edge(u, v, None)?;
        }
        Ok(b.build())
    }

    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n, false).build()
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges (arcs, when directed).
    pub fn m(&self) -> usize {
        let total: usize = self.adjacency.iter().map(Vec::len).sum();
        if self.directed {
            total
        } else {
            total / 2
        }
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    /// Sorted neighbors of `v` (out-neighbors when directed).
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Weight of `u ~ v`; unweighted edges weigh 1, absent edges `None`.
    pub fn weight(&self, u: usize, v: usize) -> Option<f64> {
        let pos = self.adjacency[u].binary_search(&v).ok()?;
        Some(self.weights.as_ref().map_or(1.0, |w| w[u][pos]))
    }

    /// Neighbors of `v` paired with edge weights.
    pub fn weighted_neighbors(&self, v: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.adjacency[v].iter().enumerate().map(move |(pos, &u)| {
            (u, self.weights.as_ref().map_or(1.0, |w| w[v][pos]))
        })
    }

    /// Edges as `(u, v)` with `u < v` (arcs `u -> v` when directed), in
    /// lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let directed = self.directed;
        self.adjacency.iter().enumerate().flat_map(move |(u, nbrs)| {
            nbrs.iter()
                .copied()
                .filter(move |&v| directed || u < v)
                .map(move |v| (u, v))
        })
    }

    /// 0/1 adjacency matrix (`A[u][v] = 1` for arcs `u -> v` when directed).
    pub fn adjacency_matrix(&self) -> IntMatrix {
        let mut a = IntMatrix::zeros(self.n());
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs {
                a[(u, v)] = 1;
            }
        }
        a
    }

    /// Weighted adjacency matrix; unweighted graphs give the 0/1 matrix.
    pub fn weighted_adjacency_matrix(&self) -> RealMatrix {
        let mut a = RealMatrix::zeros(self.n());
        for u in 0..self.n() {
            for (v, w) in self.weighted_neighbors(u) {
                a[(u, v)] = w;
            }
        }
        a
    }

    /// Same structure with all weights dropped.
    pub fn unweighted(&self) -> Graph {
        Graph {
            adjacency: self.adjacency.clone(),
            weights: None,
            directed: self.directed,
        }
    }

    /// Subgraph induced by `s`, with vertices renumbered `0..|s|` in
    /// increasing original order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<InducedSubgraph> {
        s.check_within(self.n())?;
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in s.iter().enumerate() {
            new_id[v] = i;
        }
        let mut b = GraphBuilder::new(s.len(), self.directed);
        b.weighted = self.is_weighted();
        for &u in s.iter() {
            for (v, w) in self.weighted_neighbors(u) {
                if new_id[v] != usize::MAX && (self.directed || u < v) {
                    b.add_edge(new_id[u], new_id[v], self.weights.as_ref().map(|_| w))?;
                }
            }
        }
        Ok(InducedSubgraph {
            graph: b.build(),
            original: s.as_slice().to_vec(),
        })
    }

    pub(crate) fn require_undirected(&self) -> Result<()> {
        if self.directed {
            return Err(Error::Unsupported(
                "operation needs an undirected graph (use directed_wedge_operators for digraphs)",
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[i]` is the id in the parent graph of vertex `i`.
    pub original: Vec<usize>,
}

/// A set of vertex ids kept sorted and free of duplicates.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn check_within(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Indicator vector over `0..n`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.0 {
            mask[v] = true;
        }
        mask
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut ids: Vec<usize> = iter.into_iter().collect();
        ids.sort_unstable();
        ids.dedup();
        Self(ids)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// A graph parsed from an edge list, with its external labels.
#[derive(Debug, Clone)]
pub struct EdgeList {
    pub graph: Graph,
    /// `labels[v]` is the token that named vertex `v` in the file.
    pub labels: Vec<String>,
    /// Number of repeated edge lines that were collapsed.
    pub duplicates: usize,
}

impl EdgeList {
    /// Label → vertex id lookup.
    pub fn label_index(&self) -> HashMap<&str, usize> {
        self.labels
            .iter()
            .enumerate()
            .map(|(v, l)| (l.as_str(), v))
            .collect()
    }
}

/// Parses a whitespace-separated edge list: `u v` or `u v w` per line,
/// `#` starts a comment. Labels are arbitrary tokens numbered by first
/// appearance. Repeated edges collapse (the last weight wins).
pub fn load_edge_list(text: &str) -> Result<EdgeList> {
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut labels = Vec::new();
    let mut parsed = Vec::new();
    let mut weighted = false;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if tokens.len() < 2 || tokens.len() > 3 {
            return Err(Error::Parse {
                line,
                message: format!("expected `u v` or `u v w`, found {} tokens", tokens.len()),
            });
        }
        let (a, b) = (tokens[0], tokens[1]);
        if a == b {
            return Err(Error::SelfLoop {
                line,
                label: a.to_string(),
            });
        }
        let weight = match tokens.get(2) {
            None => None,
            Some(tok) => {
                let w: f64 = tok.parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("invalid weight `{tok}`"),
                })?;
                if !w.is_finite() {
                    return Err(Error::Parse {
                        line,
                        message: format!("non-finite weight `{tok}`"),
                    });
                }
                if w < 0.0 {
                    return Err(Error::NegativeWeight {
                        u: a.to_string(),
                        v: b.to_string(),
                        weight: w,
                    });
                }
                weighted = true;
                Some(w)
            }
        };
        let mut id = |label: &str| {
            *index.entry(label.to_string()).or_insert_with(|| {
                labels.push(label.to_string());
                labels.len() - 1
            })
        };
        let (u, v) = (id(a), id(b));
        parsed.push((u, v, weight));
    }

    let mut builder = GraphBuilder::new(labels.len(), false);
    for (u, v, w) in parsed {
        let w = if weighted { Some(w.unwrap_or(1.0)) } else { None };
        builder.add_edge(u, v, w)?;
    }
    let duplicates = builder.duplicates();
    Ok(EdgeList {
        graph: builder.build(),
        labels,
        duplicates,
    })
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<EdgeList> {
    load_edge_list(&std::fs::read_to_string(path)?)
}

/// Writes one `u v [w]` line per edge; vertices are named by `labels` when
/// given, by their ids otherwise. Isolated vertices are not representable.
pub fn save_edge_list(g: &Graph, labels: Option<&[String]>) -> String {
    let name = |v: usize| labels.map_or_else(|| v.to_string(), |l| l[v].clone());
    let mut out = String::new();
    for (u, v) in g.edges() {
        write!(out, "{} {}", name(u), name(v)).unwrap();
        if g.is_weighted() {
            write!(out, " {}", g.weight(u, v).unwrap()).unwrap();
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_path() {
        let el = load_edge_list("0 1\n1 2").unwrap();
        assert_eq!((el.graph.n(), el.graph.m()), (3, 2));
        assert_eq!(el.graph.neighbors(1), &[0, 2]);
    }

    #[test]
    fn duplicate_lines_collapse() {
        let el = load_edge_list("0 1\n0 1\n1 0").unwrap();
        assert_eq!(el.graph.m(), 1);
        assert_eq!(el.duplicates, 2);
    }

    #[test]
    fn last_weight_wins() {
        let el = load_edge_list("a b 2.5\nb a 0.5\nb c").unwrap();
        assert!(el.graph.is_weighted());
        assert_eq!(el.graph.weight(0, 1), Some(0.5));
        assert_eq!(el.graph.weight(1, 0), Some(0.5));
        assert_eq!(el.graph.weight(1, 2), Some(1.0));
    }

    #[test]
    fn labels_by_first_appearance() {
        let el = load_edge_list("# header\nx y\n\ny z # trailing\n").unwrap();
        assert_eq!(el.labels, ["x", "y", "z"]);
        assert_eq!(el.label_index()["z"], 2);
    }

    #[test]
    fn parse_errors_name_the_line() {
        match load_edge_list("0 1\n0\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(load_edge_list("0 1 x"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(load_edge_list("0 1 2 3"), Err(Error::Parse { .. })));
        assert!(matches!(load_edge_list("0 1\n3 3"), Err(Error::SelfLoop { line: 2, .. })));
        assert!(matches!(load_edge_list("0 1 -1"), Err(Error::NegativeWeight { .. })));
    }

    #[test]
    fn induced_subgraph_of_triangle_and_path() {
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let sub = k3.induced_subgraph(&[0, 1].into_iter().collect()).unwrap();
        assert_eq!((sub.graph.n(), sub.graph.m()), (2, 1));

        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let ends = p3.induced_subgraph(&[0, 2].into_iter().collect()).unwrap();
        assert_eq!((ends.graph.n(), ends.graph.m()), (2, 0));
        assert_eq!(ends.original, [0, 2]);

        let bad: VertexSet = [0, 7].into_iter().collect();
        assert!(matches!(
            p3.induced_subgraph(&bad),
            Err(Error::VertexOutOfRange { vertex: 7, n: 3 })
        ));
    }

    #[test]
    fn induced_subgraph_keeps_weights() {
        let g = Graph::from_weighted_edges(3, [(0, 1, 2.0), (1, 2, 3.0)]).unwrap();
        let sub = g.induced_subgraph(&[1, 2].into_iter().collect()).unwrap();
        assert_eq!(sub.graph.weight(0, 1), Some(3.0));
    }

    #[test]
    fn directed_arcs() {
        let g = Graph::from_arcs(3, [(0, 1), (1, 2), (1, 0)]).unwrap();
        assert_eq!(g.m(), 3);
        assert!(g.has_edge(1, 0) && !g.has_edge(2, 1));
        assert_eq!(g.edges().collect::<Vec<_>>(), [(0, 1), (1, 0), (1, 2)]);
    }

    #[test]
    fn builder_rejects_bad_edges() {
        assert!(Graph::from_edges(2, [(0, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
        assert!(Graph::from_weighted_edges(2, [(0, 1, -0.5)]).is_err());
    }

    #[test]
    fn save_uses_labels() {
        let el = load_edge_list("a b 1.5\nb c 2").unwrap();
        let text = save_edge_list(&el.graph, Some(&el.labels));
        assert_eq!(text, "a b 1.5\nb c 2\n");
    }
}
