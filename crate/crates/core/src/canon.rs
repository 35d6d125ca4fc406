//! Canonical forms and exhaustive non-isomorphic enumeration.
//!
//! The canonical form of a graph is the lexicographically minimal
//! upper-triangle adjacency bit string over all vertex relabellings. Bits
//! are taken in column-major pair order `(0,1), (0,2), (1,2), (0,3), ...`,
//! so placing vertices one position at a time fixes a prefix of the string;
//! that makes a branch-and-bound search over placements exact and cheap.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, GraphError, VertexSet};

/// Hard cap for exhaustive canonicalization: the bit string fits in a `u64`
/// and full permutation search stays feasible.
pub const MAX_CANON_VERTICES: usize = 10;

/// Largest order enumerated without the explicit override.
pub const MAX_ENUM_VERTICES: usize = 7;

/// A graph's isomorphism-class key: two graphs on the same number of
/// vertices are isomorphic exactly when their canonical forms are equal.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    bits: u64,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// The canonical representative graph encoded by this form.
    pub fn to_graph(&self) -> Graph {
        let total = self.n * (self.n - 1) / 2;
        let mut edges = Vec::new();
        let mut t = 0;
        for j in 1..self.n {
            for i in 0..j {
                if (self.bits >> (total - 1 - t)) & 1 == 1 {
                    edges.push((i, j));
                }
                t += 1;
            }
        }
        Graph::from_edges(self.n, &edges).expect("canonical bits encode a valid graph")
    }

    /// The bit string in pair order, as `0`/`1` characters.
    pub fn bit_string(&self) -> alloc::string::String {
        let total = self.n * (self.n - 1) / 2;
        (0..total)
            .map(|t| if (self.bits >> (total - 1 - t)) & 1 == 1 { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(n={}, {})", self.n, self.bit_string())
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    n: usize,
    best: u64,
    placed: Vec<usize>,
}

impl CanonSearch<'_> {
    /// Bits contributed when `v` is placed at position `p`: adjacency to the
    /// already placed vertices, earliest position most significant.
    fn chunk(&self, v: usize) -> u64 {
        let mut bits = 0u64;
        for &u in &self.placed {
            bits = (bits << 1) | u64::from(self.g.has_edge(u, v));
        }
        bits
    }

    fn descend(&mut self, prefix: u64, used: VertexSet) {
        let p = self.placed.len();
        if p == self.n {
            if prefix < self.best {
                self.best = prefix;
            }
            return;
        }
        // Candidates ordered by their contributed bits; twins (vertices with
        // identical adjacency apart from each other) are interchangeable, so
        // only the first of each twin class is tried.
        let mut cands: Vec<(u64, usize)> = (0..self.n)
            .filter(|&v| !used.contains(v))
            .map(|v| (self.chunk(v), v))
            .collect();
        cands.sort_unstable();
        let done = prefix_len(p);
        for (i, &(chunk, v)) in cands.iter().enumerate() {
            if cands[..i].iter().any(|&(c2, v2)| c2 == chunk && twins(self.g, v2, v)) {
                continue;
            }
            let next = (prefix << p) | chunk;
            // Compare against the same-length prefix of the incumbent.
            if next > self.best >> (total_bits(self.n) - done - p) {
                continue;
            }
            self.placed.push(v);
            self.descend(next, used.with(v));
            self.placed.pop();
        }
    }
}

fn total_bits(n: usize) -> usize {
    n * (n - 1) / 2
}

fn prefix_len(p: usize) -> usize {
    p * (p - 1) / 2
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbours(u).without(v) == g.neighbours(v).without(u)
}

/// Value of the bit string for one fixed vertex order.
fn bits_for_order(g: &Graph, order: &[usize]) -> u64 {
    let mut bits = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            bits = (bits << 1) | u64::from(g.has_edge(order[i], order[j]));
        }
    }
    bits
}

/// The lexicographically minimal adjacency bit string over all relabellings.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(GraphError::CanonicalTooLarge { n, max: MAX_CANON_VERTICES });
    }
    if n < 2 {
        return Ok(CanonicalForm { n, bits: 0 });
    }
    // Seed the incumbent with a low-degree-first greedy order.
    let mut seed: Vec<usize> = (0..n).collect();
    seed.sort_by_key(|&v| (g.degree(v), v));
    let mut search = CanonSearch { g, n, best: bits_for_order(g, &seed), placed: Vec::new() };
    search.descend(0, VertexSet::EMPTY);
    Ok(CanonicalForm { n, bits: search.best })
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// ordered by canonical bits. Guarded at `n <= 7`; the full `n = 8` census
/// is hours-scale and only reachable through
/// [`nonisomorphic_graphs_with_override`].
pub fn nonisomorphic_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n > MAX_ENUM_VERTICES {
        return Err(GraphError::EnumerationTooLarge { n, max: MAX_ENUM_VERTICES });
    }
    nonisomorphic_graphs_with_override(n)
}

/// As [`nonisomorphic_graphs`] but allowing `n = 8`.
pub fn nonisomorphic_graphs_with_override(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n > MAX_ENUM_VERTICES + 1 {
        return Err(GraphError::EnumerationTooLarge { n, max: MAX_ENUM_VERTICES + 1 });
    }
    if n == 0 {
        return Ok(vec![Graph::empty(0)?]);
    }
    // Incremental augmentation: extend each (m-1)-vertex representative by a
    // new vertex attached in all 2^(m-1) ways, keeping unseen canonical forms.
    let mut level: Vec<u64> = vec![0]; // canonical bits of the single K1
    for m in 2..=n {
        let mut seen: BTreeSet<u64> = BTreeSet::new();
        for &bits in &level {
            let base = CanonicalForm { n: m - 1, bits }.to_graph();
            for nbrs in 0..(1u64 << (m - 1)) {
                let mut edges = base.edges();
                for v in VertexSet::from_bits(nbrs).iter() {
                    edges.push((v, m - 1));
                }
                let g = Graph::from_edges(m, &edges)?;
                seen.insert(canonical_form(&g)?.bits());
            }
        }
        level = seen.into_iter().collect();
    }
    Ok(level.into_iter().map(|bits| CanonicalForm { n, bits }.to_graph()).collect())
}
