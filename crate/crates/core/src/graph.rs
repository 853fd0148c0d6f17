//! Oriented graphs on dense vertex ids with bitset adjacency rows.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("vertex {v} out of range for n = {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("loop at vertex {v}")]
    Loop { v: usize },
    #[error("duplicate arc {u} -> {v}")]
    DuplicateArc { u: usize, v: usize },
    #[error("arcs {u} -> {v} and {v} -> {u} form a 2-cycle")]
    TwoCycle { u: usize, v: usize },
}

/// Incremental construction of an [`OrientedGraph`], rejecting anything that
/// would break orientation.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    out_adj: Vec<u64>,
    in_adj: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(GraphBuilder { n, out_adj: vec![0; n], in_adj: vec![0; n] })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.out_adj[u] >> v) & 1 == 1
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { v: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::Loop { v });
        }
        if self.has_arc(u, v) {
            return Err(GraphError::DuplicateArc { u, v });
        }
        if self.has_arc(v, u) {
            return Err(GraphError::TwoCycle { u, v });
        }
        self.out_adj[u] |= 1u64 << v;
        self.in_adj[v] |= 1u64 << u;
        Ok(())
    }

    pub fn build(self) -> OrientedGraph {
        OrientedGraph { n: self.n, out_adj: self.out_adj, in_adj: self.in_adj }
    }
}

/// An immutable digraph without loops or 2-cycles.
///
/// `out_adj[u]` has bit `v` set iff the arc `u -> v` is present; `in_adj` is
/// the transpose. Both rows are kept so in- and out-neighbourhood queries are
/// a single word read.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrientedGraph {
    n: usize,
    out_adj: Vec<u64>,
    in_adj: Vec<u64>,
}

impl OrientedGraph {
    /// Graph on `n` vertices with no arcs.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Ok(GraphBuilder::new(n)?.build())
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n)?;
        for (u, v) in arcs {
            b.add_arc(u, v)?;
        }
        Ok(b.build())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.out_adj[u] >> v) & 1 == 1
    }

    /// True if `u` and `v` are joined by an arc in either direction.
    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    #[inline]
    pub(crate) fn out_bits(&self, v: usize) -> u64 {
        self.out_adj[v]
    }

    #[inline]
    pub(crate) fn in_bits(&self, v: usize) -> u64 {
        self.in_adj[v]
    }

    /// N⁺(v)
    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.out_adj[v], self.n)
    }

    /// N⁻(v)
    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.in_adj[v], self.n)
    }

    #[inline]
    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].count_ones() as usize
    }

    #[inline]
    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].count_ones() as usize
    }

    /// d⁺(v, X): out-neighbours of `v` inside `x`.
    #[inline]
    pub fn out_degree_in(&self, v: usize, x: &VertexSet) -> usize {
        (self.out_adj[v] & x.bits()).count_ones() as usize
    }

    /// d⁻(v, X): in-neighbours of `v` inside `x`.
    #[inline]
    pub fn in_degree_in(&self, v: usize, x: &VertexSet) -> usize {
        (self.in_adj[v] & x.bits()).count_ones() as usize
    }

    pub fn arc_count(&self) -> usize {
        self.out_adj.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// e(X, Y): number of arcs with tail in `x` and head in `y`.
    pub fn arcs_between(&self, x: &VertexSet, y: &VertexSet) -> usize {
        x.iter().map(|u| self.out_degree_in(u, y)).sum()
    }

    /// All arcs, sorted by tail then head.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out_neighbors(u).iter().map(move |v| (u, v)))
    }

    /// Arcs `u -> v` with `u` in `x` and `v` in `y`, sorted.
    pub fn arcs_from_to<'a>(
        &'a self,
        x: &VertexSet,
        y: &VertexSet,
    ) -> impl Iterator<Item = (usize, usize)> + 'a {
        let y = *y;
        x.iter()
            .flat_map(move |u| (self.out_neighbors(u).intersection(&y)).iter().map(move |v| (u, v)))
    }

    /// The same vertex set with every arc reversed.
    pub fn reversed(&self) -> OrientedGraph {
        OrientedGraph { n: self.n, out_adj: self.in_adj.clone(), in_adj: self.out_adj.clone() }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<OrientedGraph, GraphError> {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        OrientedGraph::from_arcs(self.n, self.arcs().map(|(u, v)| (perm[u], perm[v])))
    }

    /// True if every pair of distinct vertices is joined by exactly one arc.
    pub fn is_tournament(&self) -> bool {
        self.arc_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// True if every arc of `self` is an arc of `other` (same vertex count).
    pub fn is_subgraph_of(&self, other: &OrientedGraph) -> bool {
        self.n == other.n && self.out_adj.iter().zip(&other.out_adj).all(|(a, b)| a & !b == 0)
    }
}

impl fmt::Debug for OrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrientedGraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

/// Value of σ₊₋(G); `Infinite` when no ordered pair of distinct
/// non-adjacent-in-that-direction vertices exists (only possible for n ≤ 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SigmaPm {
    Finite(usize),
    Infinite,
}

impl SigmaPm {
    pub fn finite(self) -> Option<usize> {
        match self {
            SigmaPm::Finite(v) => Some(v),
            SigmaPm::Infinite => None,
        }
    }

    /// `self >= num / den` in exact arithmetic; `Infinite` satisfies every bound.
    pub fn at_least_ratio(self, num: u64, den: u64) -> bool {
        assert!(den > 0);
        match self {
            SigmaPm::Finite(v) => (v as u64) * den >= num,
            SigmaPm::Infinite => true,
        }
    }
}

impl fmt::Display for SigmaPm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaPm::Finite(v) => write!(f, "{v}"),
            SigmaPm::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for SigmaPm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            SigmaPm::Finite(v) => serializer.serialize_u64(*v as u64),
            SigmaPm::Infinite => serializer.serialize_str("infinite"),
        }
    }
}

/// σ₊₋(G) = min d⁺(x) + d⁻(y) over ordered pairs x ≠ y with no arc x → y.
pub fn sigma_plus_minus(g: &OrientedGraph) -> SigmaPm {
    sigma_witness(g).map_or(SigmaPm::Infinite, |(_, _, s)| SigmaPm::Finite(s))
}

/// The lexicographically first ordered pair `(x, y)` realising σ₊₋, with its value.
pub fn sigma_witness(g: &OrientedGraph) -> Option<(usize, usize, usize)> {
    let n = g.n();
    let mut best: Option<(usize, usize, usize)> = None;
    for x in 0..n {
        let dx = g.out_degree(x);
        let mut candidates = g.out_neighbors(x).complement();
        candidates.remove(x);
        for y in candidates.iter() {
            let s = dx + g.in_degree(y);
            if best.map_or(true, |(_, _, b)| s < b) {
                best = Some((x, y, s));
            }
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub sigma_pm: SigmaPm,
    /// Minimum semidegree δ⁰(G); 0 for the empty vertex set.
    pub delta0: usize,
    /// `(d⁺(v), d⁻(v))` for each vertex.
    pub per_vertex: Vec<(usize, usize)>,
}

pub fn degree_profile(g: &OrientedGraph) -> DegreeProfile {
    let per_vertex: Vec<(usize, usize)> =
        (0..g.n()).map(|v| (g.out_degree(v), g.in_degree(v))).collect();
    let delta0 = per_vertex.iter().map(|&(o, i)| o.min(i)).min().unwrap_or(0);
    DegreeProfile { sigma_pm: sigma_plus_minus(g), delta0, per_vertex }
}
