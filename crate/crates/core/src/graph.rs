//! Undirected simple graphs on dense vertex labels `0..n-1`, `n <= 64`.
//!
//! Adjacency is stored as one 64-bit neighbour mask per vertex, which keeps
//! every structural predicate in this crate a handful of word operations.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::orient::{self, Orientation};

/// Library-wide vertex cap: adjacency rows are single machine words.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex labels stored as a 64-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && (self.0 >> v) & 1 == 1
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | (1u64 << v))
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint_from(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    /// Members collected in increasing order.
    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(d)?;
        if let Some(&v) = members.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(GraphError::VertexOutOfRange {
                vertex: v,
                n: MAX_VERTICES,
            }));
        }
        Ok(members.into_iter().collect())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Errors from graph construction and the size-guarded operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    TooManyVertices { n: usize },
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop { vertex: usize },
    OverlappingSets,
    CanonicalTooLarge { n: usize, max: usize },
    EnumerationTooLarge { n: usize, max: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::TooManyVertices { n } => {
                write!(f, "graph has {n} vertices; at most {MAX_VERTICES} supported")
            }
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::OverlappingSets => write!(f, "vertex sets must be disjoint"),
            GraphError::CanonicalTooLarge { n, max } => {
                write!(f, "canonical form limited to {max} vertices, got {n}")
            }
            GraphError::EnumerationTooLarge { n, max } => {
                write!(f, "enumeration limited to {max} vertices, got {n}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// An undirected simple graph on vertices `0..n-1`.
///
/// Values are immutable after construction; all "mutators" return new graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Edges are deduplicated; endpoints
    /// must be `< n` and distinct.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            g.adj[u] |= 1u64 << v;
            g.adj[v] |= 1u64 << u;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let full = VertexSet::full(n).bits();
        for v in 0..n {
            g.adj[v] = full & !(1u64 << v);
        }
        Ok(g)
    }

    pub const fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && u != v && (self.adj[u] >> v) & 1 == 1
    }

    pub fn neighbours(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !VertexSet::full(u + 1).bits()).iter() {
                out.push((u, v));
            }
        }
        out
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// New graph with the edge `(u, v)` added.
    #[must_use]
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        debug_assert!(u < self.n && v < self.n && u != v);
        let mut g = self.clone();
        g.adj[u] |= 1u64 << v;
        g.adj[v] |= 1u64 << u;
        g
    }

    /// New graph with all listed edges added.
    #[must_use]
    pub fn with_edges(&self, edges: &[(usize, usize)]) -> Graph {
        let mut g = self.clone();
        for &(u, v) in edges {
            debug_assert!(u < self.n && v < self.n && u != v);
            g.adj[u] |= 1u64 << v;
            g.adj[v] |= 1u64 << u;
        }
        g
    }

    /// Induced subgraph on the listed vertices; vertex `i` of the result is
    /// `vertices[i]` of `self`.
    #[must_use]
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let m = vertices.len();
        let mut g = Graph { n: m, adj: vec![0; m] };
        for i in 0..m {
            for j in (i + 1)..m {
                if self.has_edge(vertices[i], vertices[j]) {
                    g.adj[i] |= 1u64 << j;
                    g.adj[j] |= 1u64 << i;
                }
            }
        }
        g
    }

    /// Induced subgraph on a vertex set, relabelled densely in increasing
    /// order. Returns the graph and the position-to-original-label map.
    pub fn induced_on(&self, set: VertexSet) -> (Graph, Vec<usize>) {
        let vs = set.to_vec();
        (self.induced(&vs), vs)
    }

    /// The graph with vertex `v` removed and labels above `v` shifted down.
    #[must_use]
    pub fn delete_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Relabels vertex `i` as `perm[i]`.
    #[must_use]
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph { n: self.n, adj: vec![0; self.n] };
        for (u, v) in self.edges() {
            let (pu, pv) = (perm[u], perm[v]);
            g.adj[pu] |= 1u64 << pv;
            g.adj[pv] |= 1u64 << pu;
        }
        g
    }

    #[must_use]
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits();
        let mut g = self.clone();
        for v in 0..self.n {
            g.adj[v] = full & !self.adj[v] & !(1u64 << v);
        }
        g
    }

    pub fn is_independent_set(&self, set: VertexSet) -> bool {
        set.iter().all(|v| (self.adj[v] & set.bits()) == 0)
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset_of(VertexSet(self.adj[v])))
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen.contains(v) {
                continue;
            }
            let mut comp = VertexSet::singleton(v);
            loop {
                let mut grown = comp;
                for u in comp.iter() {
                    grown = grown.union(VertexSet(self.adj[u]));
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    /// Number of edges with one endpoint in `x` and the other in `y`.
    pub fn edge_count_between(&self, x: VertexSet, y: VertexSet) -> Result<usize, GraphError> {
        if !x.is_disjoint_from(y) {
            return Err(GraphError::OverlappingSets);
        }
        Ok(x.iter().map(|v| (self.adj[v] & y.bits()).count_ones() as usize).sum())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A partition of the vertices into a comparability-inducing part and an
/// independent set, with the transitive orientation as evidence.
#[derive(Debug, Clone)]
pub struct SplitPartition {
    /// Vertices inducing a comparability graph.
    pub comparability: VertexSet,
    /// Independent set (the complement of `comparability`).
    pub independent: VertexSet,
    /// Transitive orientation of the induced subgraph on `comparability`,
    /// relabelled densely in increasing vertex order.
    pub orientation: Orientation,
}

/// Splits the graph into a comparability part `A` and an independent set `B`,
/// if possible. Independent sets are tried from largest down, so the returned
/// partition has a maximum-size independent part.
pub fn find_split_partition(g: &Graph) -> Option<SplitPartition> {
    let n = g.n();
    debug_assert!(n <= 16, "split search enumerates all 2^n subsets");
    let mut subsets: Vec<u64> = (0..(1u64 << n)).collect();
    subsets.sort_by_key(|s| core::cmp::Reverse(s.count_ones()));
    for bits in subsets {
        let b = VertexSet::from_bits(bits);
        if !g.is_independent_set(b) {
            continue;
        }
        let a = g.vertex_set().difference(b);
        let (ga, _) = g.induced_on(a);
        if let Ok(Some(orientation)) = orient::find_transitive_orientation(&ga) {
            return Some(SplitPartition { comparability: a, independent: b, orientation });
        }
    }
    None
}

/// Named small graphs used throughout the test suites and the CLI examples.
pub mod families {
    use super::{Graph, GraphError};
    use alloc::vec::Vec;

    pub fn path(n: usize) -> Result<Graph, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n > 2 {
            edges.push((n - 1, 0));
        }
        Graph::from_edges(n, &edges)
    }

    /// Wheel: a cycle on `rim` vertices `0..rim-1` plus a hub labelled `rim`
    /// adjacent to every rim vertex. `wheel(5)` is the 6-vertex W5.
    pub fn wheel(rim: usize) -> Result<Graph, GraphError> {
        let mut edges: Vec<_> = (1..rim).map(|v| (v - 1, v)).collect();
        edges.push((rim - 1, 0));
        for v in 0..rim {
            edges.push((v, rim));
        }
        Graph::from_edges(rim + 1, &edges)
    }

    /// The Petersen graph: outer 5-cycle 0..4, inner 5-cycle 5..9 stepping
    /// by two, spokes i -- i+5.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Graph::from_edges(10, &edges).expect("petersen edges are in range")
    }
}
