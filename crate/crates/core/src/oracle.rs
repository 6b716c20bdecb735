//! Brute-force reference counts. Everything here walks neighbor lists
//! directly and never touches matrix algebra, so it can vouch for the
//! operator code in tests and in `verify`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::IntMatrix;
use crate::partition::Partition;

/// Enumeration refuses graphs above this many vertices.
pub const ORACLE_MAX_VERTICES: usize = 1000;

fn guard(g: &Graph) -> Result<()> {
    g.require_undirected()?;
    if g.n() > ORACLE_MAX_VERTICES {
        return Err(Error::ResourceLimit {
            what: "oracle vertices",
            requested: g.n() as u64,
            cap: ORACLE_MAX_VERTICES as u64,
        });
    }
    Ok(())
}

/// An unordered two-path `first - middle - last` with `first < last`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Wedge {
    pub middle: usize,
    pub first: usize,
    pub last: usize,
    /// Endpoints adjacent.
    pub closed: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WedgeList {
    /// Sorted by `(middle, first, last)`.
    pub wedges: Vec<Wedge>,
}

impl WedgeList {
    pub fn len(&self) -> usize {
        self.wedges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.wedges.is_empty()
    }

    pub fn closed(&self) -> usize {
        self.wedges.iter().filter(|w| w.closed).count()
    }

    pub fn open(&self) -> usize {
        self.len() - self.closed()
    }

    /// Wedges centred at each vertex.
    pub fn per_middle(&self, n: usize) -> Vec<u64> {
        let mut out = vec![0; n];
        for w in &self.wedges {
            out[w.middle] += 1;
        }
        out
    }
}

pub fn enumerate_wedges(g: &Graph) -> Result<WedgeList> {
    guard(g)?;
    let mut wedges = Vec::new();
    for middle in 0..g.n() {
        let nb = g.neighbors(middle);
        for (i, &first) in nb.iter().enumerate() {
            for &last in &nb[i + 1..] {
                wedges.push(Wedge {
                    middle,
                    first,
                    last,
                    closed: g.has_edge(first, last),
                });
            }
        }
    }
    Ok(WedgeList { wedges })
}

/// All triangles as sorted triples, in lexicographic order.
pub fn enumerate_triangles(g: &Graph) -> Result<Vec<[usize; 3]>> {
    guard(g)?;
    let mut out = Vec::new();
    for i in 0..g.n() {
        for j in i + 1..g.n() {
            if !g.has_edge(i, j) {
                continue;
            }
            for k in j + 1..g.n() {
                if g.has_edge(i, k) && g.has_edge(j, k) {
                    out.push([i, j, k]);
                }
            }
        }
    }
    Ok(out)
}

/// Counts of length-two walks `u - v - w` (with `u = w` allowed) by the
/// blocks of `u` and `w`.
pub fn naive_block_two_walks(g: &Graph, p: &Partition) -> Result<IntMatrix> {
    guard(g)?;
    let mut out = IntMatrix::zeros(p.r());
    for v in 0..g.n() {
        for &u in g.neighbors(v) {
            for &w in g.neighbors(v) {
                out[(p.block_of(u), p.block_of(w))] += 1;
            }
        }
    }
    Ok(out)
}

/// Counts pairs of arcs `u → v`, `v' → w` with `v ≠ v'` in one block,
/// indexed by the blocks of `u` and `w`. These are exactly the quotient
/// two-walks that no real two-walk accounts for.
pub fn naive_overcount(g: &Graph, p: &Partition) -> Result<IntMatrix> {
    guard(g)?;
    let mut out = IntMatrix::zeros(p.r());
    for block in p.blocks() {
        for &v in block {
            for &v2 in block {
                if v == v2 {
                    continue;
                }
                for &u in g.neighbors(v) {
                    for &w in g.neighbors(v2) {
                        out[(p.block_of(u), p.block_of(w))] += 1;
                    }
                }
            }
        }
    }
    Ok(out)
}
