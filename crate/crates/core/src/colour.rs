//! Proper colourings, chromatic numbers, and colour-class profiles.
//!
//! Colourings are canonicalized by ordering classes by their smallest
//! member, which enumerates each partition into colour classes exactly once.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexSet};

/// An ordered partition of the vertices into independent classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    classes: Vec<VertexSet>,
}

impl Colouring {
    pub fn new(classes: Vec<VertexSet>) -> Self {
        Colouring { classes }
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    /// Index of the class containing `v`.
    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(v))
    }

    /// True when the classes are disjoint, cover the graph, and are each
    /// independent sets.
    pub fn is_proper(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::EMPTY;
        for &c in &self.classes {
            if !seen.is_disjoint_from(c) || !g.is_independent_set(c) {
                return false;
            }
            seen = seen.union(c);
        }
        seen == g.vertex_set()
    }

    /// The same classes reordered by decreasing size, ties by smallest member.
    #[must_use]
    pub fn sorted_by_size(&self) -> Colouring {
        let mut classes = self.classes.clone();
        classes.sort_by_key(|c| (core::cmp::Reverse(c.len()), c.min()));
        Colouring { classes }
    }

    pub fn profile(&self) -> ColourProfile {
        let mut sizes: Vec<usize> = self.classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        ColourProfile { sizes }
    }
}

/// A multiset of colour-class sizes, stored non-increasing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColourProfile {
    sizes: Vec<usize>,
}

impl ColourProfile {
    pub fn new(mut sizes: Vec<usize>) -> Self {
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        ColourProfile { sizes }
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Shape `(k, 1, 1, ..., 1)`: at most one class of size above one.
    pub fn is_one_fat_class(&self) -> bool {
        self.sizes.iter().filter(|&&s| s > 1).count() <= 1
    }
}

impl fmt::Debug for ColourProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.sizes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// A greedy clique, used as a chromatic lower bound.
fn greedy_clique(g: &Graph) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    for start in 0..g.n() {
        let mut clique = VertexSet::singleton(start);
        let mut candidates = g.neighbours(start);
        while let Some(v) = candidates.min() {
            // Extend by the candidate with most remaining candidates.
            let mut pick = v;
            let mut pick_deg = 0;
            for u in candidates.iter() {
                let d = g.neighbours(u).intersection(candidates).len();
                if d > pick_deg {
                    pick = u;
                    pick_deg = d;
                }
            }
            clique.insert(pick);
            candidates = candidates.intersection(g.neighbours(pick));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

/// Finds one proper colouring with at most `k` colours, if any exists.
/// Classes in the result may be empty only when the graph itself needs
/// fewer colours; callers interested in exactly-`k` colourings should use
/// [`minimal_colourings`].
pub fn k_colouring(g: &Graph, k: usize) -> Option<Colouring> {
    let n = g.n();
    if n == 0 {
        return Some(Colouring::new(Vec::new()));
    }
    if k == 0 {
        return None;
    }
    // Static order: highest degree first fails fast on dense cores.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
    let mut colour = vec![usize::MAX; n];

    fn assign(
        g: &Graph,
        order: &[usize],
        colour: &mut [usize],
        idx: usize,
        used: usize,
        k: usize,
    ) -> bool {
        if idx == order.len() {
            return true;
        }
        let v = order[idx];
        let cap = core::cmp::min(used + 1, k);
        for c in 0..cap {
            if g.neighbours(v).iter().all(|u| colour[u] != c) {
                colour[v] = c;
                if assign(g, order, colour, idx + 1, core::cmp::max(used, c + 1), k) {
                    return true;
                }
                colour[v] = usize::MAX;
            }
        }
        false
    }

    if !assign(g, &order, &mut colour, 0, 0, k) {
        return None;
    }
    let used = colour.iter().copied().max().map_or(0, |c| c + 1);
    let mut classes = vec![VertexSet::EMPTY; used];
    for v in 0..n {
        classes[colour[v]].insert(v);
    }
    Some(Colouring::new(classes))
}

/// The chromatic number, by backtracking search from a greedy clique bound.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let lower = greedy_clique(g).len().max(1);
    for k in lower..=g.n() {
        if k_colouring(g, k).is_some() {
            return k;
        }
    }
    unreachable!("every graph is n-colourable")
}

/// All proper colourings with exactly `chromatic_number(g)` classes, one per
/// partition: classes are ordered by smallest member (restricted-growth
/// enumeration), so no permuted duplicates appear.
pub fn minimal_colourings(g: &Graph) -> Vec<Colouring> {
    let n = g.n();
    if n == 0 {
        return vec![Colouring::new(Vec::new())];
    }
    let k = chromatic_number(g);
    let mut out = Vec::new();
    let mut classes: Vec<VertexSet> = Vec::new();

    fn extend(g: &Graph, v: usize, k: usize, classes: &mut Vec<VertexSet>, out: &mut Vec<Colouring>) {
        let n = g.n();
        if v == n {
            if classes.len() == k {
                out.push(Colouring::new(classes.clone()));
            }
            return;
        }
        // Unplaced vertices must still be able to fill all remaining classes.
        if classes.len() + (n - v) < k {
            return;
        }
        for i in 0..classes.len() {
            if g.neighbours(v).is_disjoint_from(classes[i]) {
                classes[i].insert(v);
                extend(g, v + 1, k, classes, out);
                classes[i].remove(v);
            }
        }
        if classes.len() < k {
            classes.push(VertexSet::singleton(v));
            extend(g, v + 1, k, classes, out);
            classes.pop();
        }
    }

    extend(g, 0, k, &mut classes, &mut out);
    out
}

/// The set of class-size profiles realized by minimal colourings.
pub fn colour_profiles(g: &Graph) -> BTreeSet<ColourProfile> {
    minimal_colourings(g).iter().map(Colouring::profile).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    /// Brute-force oracle: does any of the k^n assignments properly colour g?
    fn brute_colourable(g: &Graph, k: usize) -> bool {
        let n = g.n();
        if n == 0 {
            return true;
        }
        let total = k.pow(n as u32);
        'outer: for code in 0..total {
            let mut c = code;
            let mut colour = vec![0usize; n];
            for slot in colour.iter_mut() {
                *slot = c % k;
                c /= k;
            }
            for (u, v) in g.edges() {
                if colour[u] == colour[v] {
                    continue 'outer;
                }
            }
            return true;
        }
        false
    }

    #[test]
    fn chromatic_number_examples() {
        assert_eq!(chromatic_number(&Graph::complete(4).unwrap()), 4);
        assert_eq!(chromatic_number(&families::cycle(5).unwrap()), 3);
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap()), 0);
        assert_eq!(chromatic_number(&Graph::empty(3).unwrap()), 1);
    }

    #[test]
    fn w5_needs_four_colours() {
        // Cross-checked against the brute-force assignment oracle.
        let w5 = families::wheel(5).unwrap();
        assert!(!brute_colourable(&w5, 3));
        assert!(brute_colourable(&w5, 4));
        assert_eq!(chromatic_number(&w5), 4);
    }

    #[test]
    fn chromatic_matches_brute_force_on_small_graphs() {
        for n in 1..=5 {
            for g in crate::canon::nonisomorphic_graphs(n).unwrap() {
                let chi = chromatic_number(&g);
                assert!(brute_colourable(&g, chi), "{g:?}");
                assert!(chi == 1 || !brute_colourable(&g, chi - 1), "{g:?}");
            }
        }
    }

    #[test]
    fn profiles_of_k4_and_empty() {
        let k4 = Graph::complete(4).unwrap();
        let profiles = colour_profiles(&k4);
        assert_eq!(profiles.len(), 1);
        assert_eq!(profiles.iter().next().unwrap().sizes(), &[1, 1, 1, 1]);

        let e3 = Graph::empty(3).unwrap();
        let profiles = colour_profiles(&e3);
        assert_eq!(profiles.len(), 1);
        assert_eq!(profiles.iter().next().unwrap().sizes(), &[3]);
    }

    #[test]
    fn profiles_of_c5_from_enumeration() {
        // Deriving the expected profile set by enumerating all 3^5 = 243
        // assignments and keeping the proper surjective ones.
        let c5 = families::cycle(5).unwrap();
        let mut expected = BTreeSet::new();
        'outer: for code in 0..243 {
            let mut c = code;
            let mut colour = [0usize; 5];
            for slot in colour.iter_mut() {
                *slot = c % 3;
                c /= 3;
            }
            for (u, v) in c5.edges() {
                if colour[u] == colour[v] {
                    continue 'outer;
                }
            }
            let mut sizes = [0usize; 3];
            for &c in &colour {
                sizes[c] += 1;
            }
            if sizes.iter().any(|&s| s == 0) {
                continue;
            }
            expected.insert(ColourProfile::new(sizes.to_vec()));
        }
        assert_eq!(colour_profiles(&c5), expected);
        assert_eq!(expected.len(), 1);
        assert_eq!(expected.iter().next().unwrap().sizes(), &[2, 2, 1]);
    }

    #[test]
    fn minimal_colourings_are_proper_and_deduplicated() {
        let g = families::cycle(6).unwrap();
        let all = minimal_colourings(&g);
        for c in &all {
            assert!(c.is_proper(&g));
            assert_eq!(c.k(), 2);
            // Canonical ordering: class minima strictly increase.
            let minima: Vec<_> = c.classes().iter().map(|cl| cl.min().unwrap()).collect();
            assert!(minima.windows(2).all(|w| w[0] < w[1]));
        }
        // C6 is connected and bipartite: a unique 2-class partition.
        assert_eq!(all.len(), 1);
    }

    #[test]
    fn singleton_classes_form_a_clique() {
        // Remark-style structural check on every minimal colouring of W5.
        let w5 = families::wheel(5).unwrap();
        for c in minimal_colourings(&w5) {
            let singles: VertexSet = c
                .classes()
                .iter()
                .filter(|cl| cl.len() == 1)
                .map(|cl| cl.min().unwrap())
                .collect();
            assert!(w5.is_clique(singles));
        }
    }
}
