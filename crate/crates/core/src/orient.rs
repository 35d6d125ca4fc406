//! Acyclic orientations, shortcut detection, and semi-transitivity.
//!
//! An orientation is semi-transitive when it is acyclic and no directed path
//! `v0 -> v1 -> ... -> vk` with the extra arc `v0 -> vk` has a non-arc pair
//! among its vertices. A graph admits such an orientation exactly when it is
//! word-representable, so the exhaustive orientation search below doubles as
//! the word-representability decision procedure at desk scale.
//!
//! The shortcut scan works on the transitive closure: an arc `(u, v)` is a
//! shortcutting edge precisely when some non-adjacent pair `(a, b)` sits on
//! a directed `u -> v` path, i.e. `u` reaches `a`, `a` reaches `b`, and `b`
//! reaches `v`. In a DAG the concatenated walk is automatically a path, and
//! non-adjacency forces the middle leg to have length at least two, so the
//! whole path has at least three arcs — the four-vertex minimum built into
//! the definition.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::colour::Colouring;
use crate::graph::{Graph, VertexSet};
use crate::search::SearchOutcome;

/// Orientation decision procedures are exponential; keep them at desk scale.
pub const MAX_ORIENT_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrientError {
    NotAnEdge { u: usize, v: usize },
    ConflictingArc { u: usize, v: usize },
    UndirectedEdge { u: usize, v: usize },
    CyclicInput,
    TooLarge { n: usize, max: usize },
    ImproperColouring { u: usize, v: usize },
    UncolouredVertex { vertex: usize },
    WitnessPathTooShort { len: usize },
    WitnessArcAbsent { u: usize, v: usize },
    WitnessShortcutEdgeMismatch,
    WitnessPairNotMissing { u: usize, v: usize },
    WitnessPairOffPath,
    WitnessRepeatedVertex,
}

impl fmt::Display for OrientError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrientError::NotAnEdge { u, v } => write!(f, "({u}, {v}) is not an edge"),
            OrientError::ConflictingArc { u, v } => {
                write!(f, "edge ({u}, {v}) directed both ways")
            }
            OrientError::UndirectedEdge { u, v } => {
                write!(f, "edge ({u}, {v}) left undirected")
            }
            OrientError::CyclicInput => write!(f, "orientation contains a directed cycle"),
            OrientError::TooLarge { n, max } => {
                write!(f, "orientation search limited to {max} vertices, got {n}")
            }
            OrientError::ImproperColouring { u, v } => {
                write!(f, "colouring puts adjacent vertices {u} and {v} in one class")
            }
            OrientError::UncolouredVertex { vertex } => {
                write!(f, "vertex {vertex} is missing from the colouring")
            }
            OrientError::WitnessPathTooShort { len } => {
                write!(f, "shortcut path must span at least four vertices, got {len}")
            }
            OrientError::WitnessArcAbsent { u, v } => {
                write!(f, "witness arc {u} -> {v} is not in the orientation")
            }
            OrientError::WitnessShortcutEdgeMismatch => {
                write!(f, "shortcutting edge does not join the path endpoints")
            }
            OrientError::WitnessPairNotMissing { u, v } => {
                write!(f, "claimed missing pair {u} -> {v} is actually an arc")
            }
            OrientError::WitnessPairOffPath => {
                write!(f, "missing pair must lie on the path in path order")
            }
            OrientError::WitnessRepeatedVertex => write!(f, "witness path repeats a vertex"),
        }
    }
}

impl core::error::Error for OrientError {}

/// An assignment of a direction to every edge of a graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Orientation {
    graph: Graph,
    out: Vec<u64>,
}

impl Orientation {
    /// Builds an orientation from explicit arcs; every edge of the graph must
    /// appear exactly once, in exactly one direction.
    pub fn from_arcs(graph: Graph, arcs: &[(usize, usize)]) -> Result<Self, OrientError> {
        let n = graph.n();
        let mut out = vec![0u64; n];
        for &(s, t) in arcs {
            if !graph.has_edge(s, t) {
                return Err(OrientError::NotAnEdge { u: s, v: t });
            }
            if (out[t] >> s) & 1 == 1 || (out[s] >> t) & 1 == 1 {
                return Err(OrientError::ConflictingArc { u: s, v: t });
            }
            out[s] |= 1u64 << t;
        }
        for (u, v) in graph.edges() {
            if (out[u] >> v) & 1 == 0 && (out[v] >> u) & 1 == 0 {
                return Err(OrientError::UndirectedEdge { u, v });
            }
        }
        Ok(Orientation { graph, out })
    }

    /// Orients every edge from the earlier vertex to the later one in `order`.
    /// Order-induced orientations are always acyclic.
    pub fn by_vertex_order(graph: &Graph, order: &[usize]) -> Orientation {
        let n = graph.n();
        let mut position = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let mut out = vec![0u64; n];
        for (u, v) in graph.edges() {
            if position[u] < position[v] {
                out[u] |= 1u64 << v;
            } else {
                out[v] |= 1u64 << u;
            }
        }
        Orientation { graph: graph.clone(), out }
    }

    fn from_out(graph: Graph, out: Vec<u64>) -> Orientation {
        Orientation { graph, out }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn has_arc(&self, s: usize, t: usize) -> bool {
        s < self.graph.n() && t < self.graph.n() && (self.out[s] >> t) & 1 == 1
    }

    pub fn out_neighbours(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.out[v])
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs = Vec::with_capacity(self.graph.edge_count());
        for s in 0..self.graph.n() {
            for t in VertexSet::from_bits(self.out[s]).iter() {
                arcs.push((s, t));
            }
        }
        arcs
    }
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Orientation(n={}, arcs={:?})", self.graph.n(), self.arcs())
    }
}

#[derive(Serialize, Deserialize)]
struct OrientationRepr {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Serialize for Orientation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        OrientationRepr { n: self.graph.n(), arcs: self.arcs() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Orientation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = OrientationRepr::deserialize(d)?;
        let graph =
            Graph::from_edges(repr.n, &repr.arcs).map_err(serde::de::Error::custom)?;
        Orientation::from_arcs(graph, &repr.arcs).map_err(serde::de::Error::custom)
    }
}

/// Witness that an orientation is not semi-transitive: a directed path plus
/// the shortcutting arc joining its endpoints, and one in-path-order pair
/// that is not an arc.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShortcutWitness {
    /// The directed path `v0 -> v1 -> ... -> vk`, `k >= 3`.
    pub path: Vec<usize>,
    /// The arc `(v0, vk)`.
    pub shortcutting_edge: (usize, usize),
    /// A pair `(vi, vj)` with `i < j` that is not an arc.
    pub missing: (usize, usize),
}

impl ShortcutWitness {
    /// Re-validates every claim of the witness against the orientation.
    pub fn validate(&self, o: &Orientation) -> Result<(), OrientError> {
        if self.path.len() < 4 {
            return Err(OrientError::WitnessPathTooShort { len: self.path.len() });
        }
        let mut seen = VertexSet::EMPTY;
        for &v in &self.path {
            if seen.contains(v) {
                return Err(OrientError::WitnessRepeatedVertex);
            }
            seen.insert(v);
        }
        for pair in self.path.windows(2) {
            if !o.has_arc(pair[0], pair[1]) {
                return Err(OrientError::WitnessArcAbsent { u: pair[0], v: pair[1] });
            }
        }
        let (first, last) = (self.path[0], *self.path.last().unwrap());
        if self.shortcutting_edge != (first, last) {
            return Err(OrientError::WitnessShortcutEdgeMismatch);
        }
        if !o.has_arc(first, last) {
            return Err(OrientError::WitnessArcAbsent { u: first, v: last });
        }
        let (a, b) = self.missing;
        let ia = self.path.iter().position(|&v| v == a);
        let ib = self.path.iter().position(|&v| v == b);
        match (ia, ib) {
            (Some(i), Some(j)) if i < j => {}
            _ => return Err(OrientError::WitnessPairOffPath),
        }
        if o.has_arc(a, b) {
            return Err(OrientError::WitnessPairNotMissing { u: a, v: b });
        }
        // Induced acyclicity on the path vertices.
        let verts = self.path.clone();
        let sub: Vec<u64> = verts
            .iter()
            .map(|&s| {
                let mut row = 0u64;
                for (j, &t) in verts.iter().enumerate() {
                    if o.has_arc(s, t) {
                        row |= 1u64 << j;
                    }
                }
                row
            })
            .collect();
        if !acyclic(&sub) {
            return Err(OrientError::CyclicInput);
        }
        Ok(())
    }
}

fn acyclic(out: &[u64]) -> bool {
    let n = out.len();
    let mut indeg = vec![0usize; n];
    for &row in out {
        for t in VertexSet::from_bits(row).iter() {
            indeg[t] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut removed = 0;
    while let Some(v) = stack.pop() {
        removed += 1;
        for t in VertexSet::from_bits(out[v]).iter() {
            indeg[t] -= 1;
            if indeg[t] == 0 {
                stack.push(t);
            }
        }
    }
    removed == n
}

/// Strict reachability sets of a digraph, by fixpoint iteration.
fn closure(out: &[u64]) -> Vec<u64> {
    let n = out.len();
    let mut reach = out.to_vec();
    loop {
        let mut changed = false;
        for v in 0..n {
            let mut r = reach[v];
            for u in VertexSet::from_bits(reach[v]).iter() {
                r |= reach[u];
            }
            if r != reach[v] {
                reach[v] = r;
                changed = true;
            }
        }
        if !changed {
            return reach;
        }
    }
}

/// Core shortcut scan over arbitrary (possibly partial) arc sets. Returns a
/// `(u, a, b, v)` pattern: arc `u -> v`, non-adjacent pair `(a, b)`, with
/// `u ->* a ->* b ->* v`.
fn shortcut_pattern(g: &Graph, out: &[u64]) -> Option<(usize, usize, usize, usize)> {
    let n = g.n();
    let reach = closure(out);
    let mut rstar = reach.clone();
    for (v, row) in rstar.iter_mut().enumerate() {
        *row |= 1u64 << v;
    }
    // co_rstar[a]: everything that reaches a (including a itself).
    let mut co_rstar = vec![0u64; n];
    for u in 0..n {
        for a in VertexSet::from_bits(rstar[u]).iter() {
            co_rstar[a] |= 1u64 << u;
        }
    }
    for a in 0..n {
        for b in VertexSet::from_bits(reach[a]).iter() {
            if g.has_edge(a, b) {
                continue;
            }
            for u in VertexSet::from_bits(co_rstar[a]).iter() {
                let targets = out[u] & rstar[b];
                if targets != 0 {
                    let v = targets.trailing_zeros() as usize;
                    return Some((u, a, b, v));
                }
            }
        }
    }
    None
}

/// Shortest directed path from `s` to `t`, by BFS over the arc sets.
fn arc_path(out: &[u64], s: usize, t: usize) -> Vec<usize> {
    if s == t {
        return vec![s];
    }
    let n = out.len();
    let mut prev = vec![usize::MAX; n];
    let mut queue = vec![s];
    let mut head = 0;
    let mut seen = VertexSet::singleton(s);
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        for w in VertexSet::from_bits(out[v]).iter() {
            if !seen.contains(w) {
                seen.insert(w);
                prev[w] = v;
                if w == t {
                    let mut path = vec![t];
                    let mut cur = t;
                    while cur != s {
                        cur = prev[cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return path;
                }
                queue.push(w);
            }
        }
    }
    unreachable!("arc_path called with unreachable target");
}

/// True when the orientation has no directed cycle.
pub fn is_acyclic(o: &Orientation) -> bool {
    acyclic(&o.out)
}

/// Searches the (acyclic) orientation for a shortcut, returning a concrete
/// re-checkable witness. Cyclic input is rejected.
pub fn find_shortcut(o: &Orientation) -> Result<Option<ShortcutWitness>, OrientError> {
    if !is_acyclic(o) {
        return Err(OrientError::CyclicInput);
    }
    let Some((u, a, b, v)) = shortcut_pattern(&o.graph, &o.out) else {
        return Ok(None);
    };
    let mut path = arc_path(&o.out, u, a);
    let mid = arc_path(&o.out, a, b);
    path.extend_from_slice(&mid[1..]);
    let tail = arc_path(&o.out, b, v);
    path.extend_from_slice(&tail[1..]);
    let witness = ShortcutWitness { path, shortcutting_edge: (u, v), missing: (a, b) };
    debug_assert_eq!(witness.validate(o), Ok(()));
    Ok(Some(witness))
}

/// Acyclic and shortcut-free.
pub fn is_semi_transitive(o: &Orientation) -> bool {
    is_acyclic(o) && shortcut_pattern(&o.graph, &o.out).is_none()
}

/// Whether every two-arc chain `a -> b -> c` is closed by the arc `a -> c`.
pub fn is_transitive(o: &Orientation) -> bool {
    let n = o.graph.n();
    for a in 0..n {
        for b in VertexSet::from_bits(o.out[a]).iter() {
            if o.out[b] & !o.out[a] != 0 {
                return false;
            }
        }
    }
    true
}

/// Backtracking search for a semi-transitive orientation.
///
/// Edges are oriented one at a time in a fixed order (densest endpoints
/// first); a branch is pruned as soon as the oriented-so-far arcs contain a
/// directed cycle or a complete shortcut. With an unexhausted node budget
/// the search is exhaustive, so `Exhausted` proves that no semi-transitive
/// orientation exists.
pub fn find_semi_transitive_orientation(g: &Graph, node_limit: u64) -> SearchOutcome<Orientation> {
    let n = g.n();
    let mut edges = g.edges();
    edges.sort_by_key(|&(u, v)| {
        (core::cmp::Reverse(core::cmp::min(g.degree(u), g.degree(v))), u, v)
    });
    let mut out = vec![0u64; n];
    let mut nodes = 0u64;

    fn descend(
        g: &Graph,
        edges: &[(usize, usize)],
        idx: usize,
        out: &mut Vec<u64>,
        nodes: &mut u64,
        node_limit: u64,
    ) -> SearchOutcome<Vec<u64>> {
        if idx == edges.len() {
            return SearchOutcome::Found(out.clone());
        }
        let (u, v) = edges[idx];
        for (s, t) in [(u, v), (v, u)] {
            *nodes += 1;
            if *nodes > node_limit {
                return SearchOutcome::OutOfBudget;
            }
            out[s] |= 1u64 << t;
            if acyclic(out) && shortcut_pattern(g, out).is_none() {
                match descend(g, edges, idx + 1, out, nodes, node_limit) {
                    SearchOutcome::Exhausted => {}
                    other => return other,
                }
            }
            out[s] &= !(1u64 << t);
        }
        SearchOutcome::Exhausted
    }

    match descend(g, &edges, 0, &mut out, &mut nodes, node_limit) {
        SearchOutcome::Found(out) => {
            let o = Orientation::from_out(g.clone(), out);
            debug_assert!(is_semi_transitive(&o));
            SearchOutcome::Found(o)
        }
        SearchOutcome::Exhausted => SearchOutcome::Exhausted,
        SearchOutcome::OutOfBudget => SearchOutcome::OutOfBudget,
    }
}

/// Exhaustive word-representability decision via semi-transitive
/// orientations. Guarded at desk scale.
pub fn is_word_representable(g: &Graph) -> Result<bool, OrientError> {
    if g.n() > MAX_ORIENT_VERTICES {
        return Err(OrientError::TooLarge { n: g.n(), max: MAX_ORIENT_VERTICES });
    }
    match find_semi_transitive_orientation(g, u64::MAX) {
        SearchOutcome::Found(_) => Ok(true),
        SearchOutcome::Exhausted => Ok(false),
        SearchOutcome::OutOfBudget => unreachable!("unlimited budget"),
    }
}

/// Searches for a transitive orientation, i.e. decides comparability.
///
/// Backtracks over undirected edges; each chosen direction is closed under
/// the transitivity implications (an arc `a -> b` together with `b -> c`
/// forces `a -> c`, which must be an edge), failing early when a forced arc
/// is not available.
pub fn find_transitive_orientation(g: &Graph) -> Result<Option<Orientation>, OrientError> {
    let n = g.n();
    if n > MAX_ORIENT_VERTICES {
        return Err(OrientError::TooLarge { n, max: MAX_ORIENT_VERTICES });
    }
    let edges = g.edges();
    let mut out = vec![0u64; n];
    let mut inn = vec![0u64; n];

    // Adds s -> t and all its transitive consequences; returns the journal of
    // arcs actually added, or None on contradiction (journal already undone).
    fn force(
        g: &Graph,
        out: &mut [u64],
        inn: &mut [u64],
        s: usize,
        t: usize,
    ) -> Option<Vec<(usize, usize)>> {
        let mut journal = Vec::new();
        let mut queue = vec![(s, t)];
        while let Some((a, b)) = queue.pop() {
            if (out[a] >> b) & 1 == 1 {
                continue;
            }
            if (out[b] >> a) & 1 == 1 {
                undo(out, inn, &journal);
                return None;
            }
            out[a] |= 1u64 << b;
            inn[b] |= 1u64 << a;
            journal.push((a, b));
            // a -> b -> c forces a -> c.
            for c in VertexSet::from_bits(out[b]).iter() {
                if c != a && (out[a] >> c) & 1 == 0 {
                    if !g.has_edge(a, c) || (out[c] >> a) & 1 == 1 {
                        undo(out, inn, &journal);
                        return None;
                    }
                    queue.push((a, c));
                }
            }
            // c -> a -> b forces c -> b.
            for c in VertexSet::from_bits(inn[a]).iter() {
                if c != b && (out[c] >> b) & 1 == 0 {
                    if !g.has_edge(c, b) || (out[b] >> c) & 1 == 1 {
                        undo(out, inn, &journal);
                        return None;
                    }
                    queue.push((c, b));
                }
            }
        }
        Some(journal)
    }

    fn undo(out: &mut [u64], inn: &mut [u64], journal: &[(usize, usize)]) {
        for &(a, b) in journal {
            out[a] &= !(1u64 << b);
            inn[b] &= !(1u64 << a);
        }
    }

    fn descend(
        g: &Graph,
        edges: &[(usize, usize)],
        out: &mut Vec<u64>,
        inn: &mut Vec<u64>,
    ) -> bool {
        let next = edges
            .iter()
            .find(|&&(u, v)| (out[u] >> v) & 1 == 0 && (out[v] >> u) & 1 == 0);
        let Some(&(u, v)) = next else {
            return true;
        };
        for (s, t) in [(u, v), (v, u)] {
            if let Some(journal) = force(g, out, inn, s, t) {
                if descend(g, edges, out, inn) {
                    return true;
                }
                undo(out, inn, &journal);
            }
        }
        false
    }

    if descend(g, &edges, &mut out, &mut inn) {
        let o = Orientation::from_out(g.clone(), out);
        debug_assert!(is_transitive(&o) && is_acyclic(&o));
        Ok(Some(o))
    } else {
        Ok(None)
    }
}

/// Directs every edge from the lower colour class to the higher one.
pub fn orient_by_colouring(g: &Graph, c: &Colouring) -> Result<Orientation, OrientError> {
    let n = g.n();
    let mut class = vec![usize::MAX; n];
    for v in 0..n {
        match c.class_of(v) {
            Some(i) => class[v] = i,
            None => return Err(OrientError::UncolouredVertex { vertex: v }),
        }
    }
    let mut out = vec![0u64; n];
    for (u, v) in g.edges() {
        if class[u] == class[v] {
            return Err(OrientError::ImproperColouring { u, v });
        }
        if class[u] < class[v] {
            out[u] |= 1u64 << v;
        } else {
            out[v] |= 1u64 << u;
        }
    }
    Ok(Orientation::from_out(g.clone(), out))
}

/// Colour-class indices (1-based) along the witness path, the diagnostic
/// used to classify shortcuts by the classes they traverse.
pub fn shortcut_colour_signature(
    w: &ShortcutWitness,
    c: &Colouring,
) -> Result<Vec<usize>, OrientError> {
    w.path
        .iter()
        .map(|&v| {
            c.class_of(v)
                .map(|i| i + 1)
                .ok_or(OrientError::UncolouredVertex { vertex: v })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colour;
    use crate::graph::families;

    #[test]
    fn acyclicity_examples() {
        let k3 = Graph::complete(3).unwrap();
        let transitive = Orientation::from_arcs(k3.clone(), &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(is_acyclic(&transitive));
        let cyclic = Orientation::from_arcs(k3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!is_acyclic(&cyclic));

        let g = families::path(4).unwrap();
        let by_order = Orientation::by_vertex_order(&g, &[2, 0, 3, 1]);
        assert!(is_acyclic(&by_order));
    }

    #[test]
    fn from_arcs_validation() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(
            Orientation::from_arcs(k3.clone(), &[(0, 1), (1, 2)]),
            Err(OrientError::UndirectedEdge { u: 0, v: 2 })
        );
        assert_eq!(
            Orientation::from_arcs(k3.clone(), &[(0, 1), (1, 0), (1, 2), (0, 2)]),
            Err(OrientError::ConflictingArc { u: 1, v: 0 })
        );
        let p3 = families::path(3).unwrap();
        assert_eq!(
            Orientation::from_arcs(p3, &[(0, 1), (1, 2), (0, 2)]),
            Err(OrientError::NotAnEdge { u: 0, v: 2 })
        );
    }

    #[test]
    fn minimal_shortcut_is_found() {
        // Path 0 -> 1 -> 2 -> 3 plus the shortcutting edge 0 -> 3 and no
        // other edges: the smallest shortcut shape.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let o = Orientation::from_arcs(g, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let w = find_shortcut(&o).unwrap().expect("this is a shortcut");
        assert_eq!(w.path, vec![0, 1, 2, 3]);
        assert_eq!(w.shortcutting_edge, (0, 3));
        assert_eq!(w.validate(&o), Ok(()));
        assert!(!is_semi_transitive(&o));
    }

    #[test]
    fn transitive_tournament_has_no_shortcut() {
        let k4 = Graph::complete(4).unwrap();
        let o = Orientation::by_vertex_order(&k4, &[0, 1, 2, 3]);
        assert_eq!(find_shortcut(&o).unwrap(), None);
        assert!(is_semi_transitive(&o));
        assert!(is_transitive(&o));
    }

    #[test]
    fn find_shortcut_rejects_cycles() {
        let k3 = Graph::complete(3).unwrap();
        let cyclic = Orientation::from_arcs(k3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(find_shortcut(&cyclic), Err(OrientError::CyclicInput));
    }

    #[test]
    fn colour_order_orientations_are_semi_transitive() {
        // Three-colourable graphs oriented by colour have no path of three
        // arcs, hence no shortcut.
        for g in [families::cycle(5).unwrap(), families::petersen()] {
            let c = colour::minimal_colourings(&g).into_iter().next().unwrap();
            assert!(c.k() <= 3);
            let o = orient_by_colouring(&g, &c).unwrap();
            assert!(is_semi_transitive(&o));
        }
    }

    #[test]
    fn orient_by_colouring_on_k4_is_transitive() {
        let k4 = Graph::complete(4).unwrap();
        let c = colour::minimal_colourings(&k4).into_iter().next().unwrap();
        let o = orient_by_colouring(&k4, &c).unwrap();
        assert!(is_transitive(&o));
    }

    #[test]
    fn orient_by_colouring_rejects_improper() {
        let k2 = Graph::complete(2).unwrap();
        let improper = Colouring::new(alloc::vec![VertexSet::full(2)]);
        assert_eq!(
            orient_by_colouring(&k2, &improper),
            Err(OrientError::ImproperColouring { u: 0, v: 1 })
        );
    }

    #[test]
    fn k4_and_c5_are_word_representable() {
        assert!(is_word_representable(&Graph::complete(4).unwrap()).unwrap());
        assert!(is_word_representable(&families::cycle(5).unwrap()).unwrap());
    }

    #[test]
    fn w5_is_not_word_representable() {
        let w5 = families::wheel(5).unwrap();
        assert_eq!(find_semi_transitive_orientation(&w5, u64::MAX), SearchOutcome::Exhausted);
        assert!(!is_word_representable(&w5).unwrap());
    }

    #[test]
    fn petersen_is_word_representable() {
        assert!(is_word_representable(&families::petersen()).unwrap());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let w5 = families::wheel(5).unwrap();
        assert_eq!(find_semi_transitive_orientation(&w5, 3), SearchOutcome::OutOfBudget);
    }

    #[test]
    fn size_guard() {
        let big = Graph::empty(13).unwrap();
        assert!(matches!(is_word_representable(&big), Err(OrientError::TooLarge { .. })));
        assert!(matches!(find_transitive_orientation(&big), Err(OrientError::TooLarge { .. })));
    }

    #[test]
    fn comparability_examples() {
        assert!(find_transitive_orientation(&families::cycle(5).unwrap()).unwrap().is_none());
        assert!(find_transitive_orientation(&families::cycle(6).unwrap()).unwrap().is_some());
        assert!(find_transitive_orientation(&Graph::complete(4).unwrap()).unwrap().is_some());
        let o = find_transitive_orientation(&families::path(4).unwrap()).unwrap().unwrap();
        assert!(is_transitive(&o));
    }

    #[test]
    fn transitive_orientations_are_semi_transitive() {
        for g in crate::canon::nonisomorphic_graphs(5).unwrap() {
            if let Some(o) = find_transitive_orientation(&g).unwrap() {
                assert!(is_semi_transitive(&o), "{g:?}");
            }
        }
    }

    #[test]
    fn shortcut_signature_reads_classes_along_path() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let o = Orientation::from_arcs(g, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let w = find_shortcut(&o).unwrap().unwrap();
        let c = Colouring::new(alloc::vec![
            VertexSet::singleton(0),
            VertexSet::singleton(1),
            VertexSet::singleton(2),
            VertexSet::singleton(3),
        ]);
        assert_eq!(shortcut_colour_signature(&w, &c), Ok(alloc::vec![1, 2, 3, 4]));
    }

    #[test]
    fn orientation_serde_round_trip() {
        let k4 = Graph::complete(4).unwrap();
        let o = Orientation::by_vertex_order(&k4, &[2, 0, 3, 1]);
        // Serde is exercised through JSON in the cli crate; here the repr
        // conversion is checked structurally.
        let repr = OrientationRepr { n: 4, arcs: o.arcs() };
        let back = Orientation::from_arcs(
            Graph::from_edges(repr.n, &repr.arcs).unwrap(),
            &repr.arcs,
        )
        .unwrap();
        assert_eq!(back, o);
    }
}
