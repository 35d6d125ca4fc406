//! Bounded backtracking searches for representant words.
//!
//! All searches are position-by-position with incremental per-pair pruning:
//! an edge pair is abandoned the moment its 11-count exceeds the level, and
//! a non-edge pair the moment its remaining occurrences can no longer push
//! the count past the level. Within the stated uniformity and block bounds
//! the searches are exhaustive, so `Exhausted` is a proof of non-existence
//! there; `OutOfBudget` is never conflated with it.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexSet};
use crate::word::{is_k11_representant, Word};

/// Tri-state search result. `Exhausted` means the whole bounded space was
/// searched and contains no solution; `OutOfBudget` means the node limit hit
/// first and nothing can be concluded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    Exhausted,
    OutOfBudget,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchOutcome<U> {
        match self {
            SearchOutcome::Found(t) => SearchOutcome::Found(f(t)),
            SearchOutcome::Exhausted => SearchOutcome::Exhausted,
            SearchOutcome::OutOfBudget => SearchOutcome::OutOfBudget,
        }
    }
}

/// Budgets for the representant searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest uniformity tried by word searches.
    pub t_max: usize,
    /// Largest number of permutation blocks tried by the permutational search.
    pub m_max: usize,
    /// Node limit shared by each individual search run.
    pub node_limit: u64,
}

impl SearchBudget {
    /// Defaults scaled to the graph: `t_max = 3`, `m_max = 2n`.
    pub fn for_graph(n: usize) -> Self {
        SearchBudget { t_max: 3, m_max: 2 * n.max(1), node_limit: 100_000_000 }
    }

    pub fn with_node_limit(mut self, node_limit: u64) -> Self {
        self.node_limit = node_limit;
        self
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { t_max: 3, m_max: 16, node_limit: 100_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchError {
    TooLarge { what: &'static str, n: usize, max: usize },
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::TooLarge { what, n, max } => {
                write!(f, "{what} is limited to {max} vertices, got {n}")
            }
        }
    }
}

impl core::error::Error for SearchError {}

struct Counter {
    used: u64,
    limit: u64,
}

impl Counter {
    fn new(limit: u64) -> Self {
        Counter { used: 0, limit }
    }

    fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.limit
    }
}

/// Per-pair incremental state: which of the two letters occurred last in the
/// pair subword, and the 11-count so far.
struct PairState {
    n: usize,
    last: Vec<u8>, // 0 = neither yet, 1 = lower letter, 2 = higher letter
    count: Vec<u32>,
}

impl PairState {
    fn new(n: usize) -> Self {
        PairState { n, last: vec![0; n * n], count: vec![0; n * n] }
    }

    fn cell(&self, x: usize, y: usize) -> usize {
        if x < y {
            x * self.n + y
        } else {
            y * self.n + x
        }
    }

    fn side(x: usize, y: usize) -> u8 {
        if x < y {
            1
        } else {
            2
        }
    }
}

/// Largest count still reachable for a pair with `r_this` occurrences of the
/// letter that occurred last and `r_other` of the other letter.
fn max_additional(r_last: usize, r_other: usize) -> u32 {
    match (r_last, r_other) {
        (0, 0) => 0,
        (a, 0) => a as u32,
        (0, b) => (b - 1) as u32,
        (a, b) => (a + b - 1) as u32,
    }
}

/// Exhaustive search for a `t`-uniform `k`-11-representant.
///
/// `pin_first` fixes the first letter to vertex 0. That is sound only at
/// `k = 0`: alternation of a uniform word is invariant under cyclic shifts
/// (any cyclic two-letter sequence with equal counts has an even number of
/// equal adjacencies, so no single cut point can remove them all), while
/// 11-counts at higher levels are not shift-invariant.
fn uniform_search(
    g: &Graph,
    k: u32,
    t: usize,
    pin_first: bool,
    counter: &mut Counter,
) -> SearchOutcome<Word> {
    let n = g.n();
    if n == 0 {
        return SearchOutcome::Found(Word::new(Vec::new()).expect("empty word"));
    }
    let mut state = PairState::new(n);
    let mut remaining = vec![t; n];
    let mut letters: Vec<usize> = Vec::with_capacity(t * n);

    fn descend(
        g: &Graph,
        k: u32,
        t: usize,
        pin_first: bool,
        state: &mut PairState,
        remaining: &mut Vec<usize>,
        letters: &mut Vec<usize>,
        counter: &mut Counter,
    ) -> SearchOutcome<()> {
        let n = g.n();
        if letters.len() == t * n {
            return SearchOutcome::Found(());
        }
        let mut budget_hit = false;
        for l in 0..n {
            if remaining[l] == 0 {
                continue;
            }
            if pin_first && letters.is_empty() && l != 0 {
                continue;
            }
            if !counter.tick() {
                return SearchOutcome::OutOfBudget;
            }
            // Apply the placement, journal the touched cells.
            let mut journal: Vec<(usize, u8, u32)> = Vec::with_capacity(n);
            let mut ok = true;
            for m in 0..n {
                if m == l {
                    continue;
                }
                let cell = state.cell(l, m);
                journal.push((cell, state.last[cell], state.count[cell]));
                if state.last[cell] == PairState::side(l, m) {
                    state.count[cell] += 1;
                    if g.has_edge(l, m) && state.count[cell] > k {
                        ok = false;
                    }
                }
                state.last[cell] = PairState::side(l, m);
            }
            remaining[l] -= 1;
            if ok {
                // Non-edge pairs touching l must still be able to exceed k.
                for m in 0..n {
                    if m == l || g.has_edge(l, m) {
                        continue;
                    }
                    let cell = state.cell(l, m);
                    let reachable =
                        state.count[cell] + max_additional(remaining[l], remaining[m]);
                    if reachable <= k {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                letters.push(l);
                match descend(g, k, t, pin_first, state, remaining, letters, counter) {
                    SearchOutcome::Found(()) => return SearchOutcome::Found(()),
                    SearchOutcome::OutOfBudget => budget_hit = true,
                    SearchOutcome::Exhausted => {}
                }
                letters.pop();
            }
            remaining[l] += 1;
            for &(cell, last, count) in journal.iter().rev() {
                state.last[cell] = last;
                state.count[cell] = count;
            }
            if budget_hit {
                return SearchOutcome::OutOfBudget;
            }
        }
        SearchOutcome::Exhausted
    }

    match descend(g, k, t, pin_first, &mut state, &mut remaining, &mut letters, counter) {
        SearchOutcome::Found(()) => {
            let word = Word::new(letters).expect("letters are vertex labels");
            debug_assert_eq!(is_k11_representant(&word, k as usize, g), Ok(true));
            SearchOutcome::Found(word)
        }
        SearchOutcome::Exhausted => SearchOutcome::Exhausted,
        SearchOutcome::OutOfBudget => SearchOutcome::OutOfBudget,
    }
}

/// Searches for a `t`-uniform word-representant with `t <= budget.t_max`.
///
/// Word-representants are the level-0 case, so the first letter is pinned to
/// vertex 0 by the cyclic-shift symmetry of uniform representants.
pub fn find_word_representant(g: &Graph, budget: &SearchBudget) -> SearchOutcome<Word> {
    let mut budget_hit = false;
    for t in 1..=budget.t_max {
        let mut counter = Counter::new(budget.node_limit);
        match uniform_search(g, 0, t, true, &mut counter) {
            SearchOutcome::Found(w) => return SearchOutcome::Found(w),
            SearchOutcome::OutOfBudget => budget_hit = true,
            SearchOutcome::Exhausted => {}
        }
    }
    if budget_hit {
        SearchOutcome::OutOfBudget
    } else {
        SearchOutcome::Exhausted
    }
}

/// Searches for a uniform `k`-11-representant; falls back to repeating a
/// word-representant `k + 1` times, which turns alternation counts of zero
/// into at most `k` and positive counts into at least `k + 1`.
pub fn find_k11_representant(g: &Graph, k: usize, budget: &SearchBudget) -> SearchOutcome<Word> {
    if k == 0 {
        return find_word_representant(g, budget);
    }
    let mut budget_hit = false;
    for t in 1..=budget.t_max {
        let mut counter = Counter::new(budget.node_limit);
        match uniform_search(g, k as u32, t, false, &mut counter) {
            SearchOutcome::Found(w) => return SearchOutcome::Found(w),
            SearchOutcome::OutOfBudget => budget_hit = true,
            SearchOutcome::Exhausted => {}
        }
    }
    match find_word_representant(g, budget) {
        SearchOutcome::Found(w) => {
            let mut powered = w.clone();
            for _ in 0..k {
                powered = powered.concat(&w);
            }
            if is_k11_representant(&powered, k, g) == Ok(true) {
                return SearchOutcome::Found(powered);
            }
            debug_assert!(false, "powered doubling must verify");
            if budget_hit {
                SearchOutcome::OutOfBudget
            } else {
                SearchOutcome::Exhausted
            }
        }
        SearchOutcome::OutOfBudget => SearchOutcome::OutOfBudget,
        SearchOutcome::Exhausted => {
            if budget_hit {
                SearchOutcome::OutOfBudget
            } else {
                SearchOutcome::Exhausted
            }
        }
    }
}

/// Searches for a `k`-11-representant that is a concatenation of at most
/// `budget.m_max` permutations of the vertex set, deepening one block at a
/// time. Counts only change at block boundaries (inside a block each letter
/// of a pair occurs once), which gives the pruning bound.
pub fn find_permutational_k11(
    g: &Graph,
    k: usize,
    budget: &SearchBudget,
) -> SearchOutcome<Word> {
    let n = g.n();
    if n == 0 {
        return SearchOutcome::Found(Word::new(Vec::new()).expect("empty word"));
    }
    let mut budget_hit = false;
    for m in 1..=budget.m_max {
        let mut counter = Counter::new(budget.node_limit);
        match permutational_search(g, k as u32, m, &mut counter) {
            SearchOutcome::Found(w) => return SearchOutcome::Found(w),
            SearchOutcome::OutOfBudget => budget_hit = true,
            SearchOutcome::Exhausted => {}
        }
    }
    if budget_hit {
        SearchOutcome::OutOfBudget
    } else {
        SearchOutcome::Exhausted
    }
}

fn permutational_search(g: &Graph, k: u32, m: usize, counter: &mut Counter) -> SearchOutcome<Word> {
    let n = g.n();
    let mut state = PairState::new(n);
    let mut letters: Vec<usize> = Vec::with_capacity(m * n);

    fn descend(
        g: &Graph,
        k: u32,
        m: usize,
        state: &mut PairState,
        letters: &mut Vec<usize>,
        counter: &mut Counter,
    ) -> SearchOutcome<()> {
        let n = g.n();
        if letters.len() == m * n {
            // Pruning bounds are necessary, not sufficient; accept only
            // words whose final counts realize the graph.
            for u in 0..n {
                for v in (u + 1)..n {
                    let cell = state.cell(u, v);
                    let is_edge = state.count[cell] <= k;
                    if is_edge != g.has_edge(u, v) {
                        return SearchOutcome::Exhausted;
                    }
                }
            }
            return SearchOutcome::Found(());
        }
        let block_pos = letters.len() % n;
        let block_start = letters.len() - block_pos;
        let used: VertexSet = letters[block_start..].iter().copied().collect();
        let blocks_after = m - letters.len() / n - 1;
        let mut budget_hit = false;
        for l in 0..n {
            if used.contains(l) {
                continue;
            }
            if !counter.tick() {
                return SearchOutcome::OutOfBudget;
            }
            let mut journal: Vec<(usize, u8, u32)> = Vec::with_capacity(n);
            let mut ok = true;
            for me in 0..n {
                if me == l {
                    continue;
                }
                let cell = state.cell(l, me);
                journal.push((cell, state.last[cell], state.count[cell]));
                if state.last[cell] == PairState::side(l, me) {
                    state.count[cell] += 1;
                    if g.has_edge(l, me) && state.count[cell] > k {
                        ok = false;
                    }
                }
                state.last[cell] = PairState::side(l, me);
            }
            if ok {
                for me in 0..n {
                    if me == l || g.has_edge(l, me) {
                        continue;
                    }
                    let cell = state.cell(l, me);
                    // Placing l settles this block's junction for the pair
                    // (the partner's later placement in the same block never
                    // matches l's side), so the only chances left are one
                    // per later block boundary.
                    let reachable = state.count[cell] + blocks_after as u32;
                    if reachable <= k {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                letters.push(l);
                match descend(g, k, m, state, letters, counter) {
                    SearchOutcome::Found(()) => return SearchOutcome::Found(()),
                    SearchOutcome::OutOfBudget => budget_hit = true,
                    SearchOutcome::Exhausted => {}
                }
                letters.pop();
            }
            for &(cell, last, count) in journal.iter().rev() {
                state.last[cell] = last;
                state.count[cell] = count;
            }
            if budget_hit {
                return SearchOutcome::OutOfBudget;
            }
        }
        SearchOutcome::Exhausted
    }

    match descend(g, k, m, &mut state, &mut letters, counter) {
        SearchOutcome::Found(()) => {
            let word = Word::new(letters).expect("letters are vertex labels");
            debug_assert_eq!(word.permutation_blocks(g.vertex_set()), Some(m));
            debug_assert_eq!(is_k11_representant(&word, k as usize, g), Ok(true));
            SearchOutcome::Found(word)
        }
        other => other.map(|()| unreachable!()),
    }
}

/// Circle-graph test: an exhaustive search for a 2-uniform word-representant
/// (a double-occurrence word whose alternation graph is `g`).
pub fn is_circle(g: &Graph) -> Result<Option<Word>, SearchError> {
    if g.n() > 7 {
        return Err(SearchError::TooLarge { what: "circle test", n: g.n(), max: 7 });
    }
    let mut counter = Counter::new(u64::MAX);
    Ok(uniform_search(g, 0, 2, true, &mut counter).found())
}

/// Interval-graph test through words: an exhaustive search for a 2-uniform
/// 1-11-representant.
pub fn is_interval_via_2uniform_111(g: &Graph) -> Result<Option<Word>, SearchError> {
    if g.n() > 6 {
        return Err(SearchError::TooLarge { what: "interval word test", n: g.n(), max: 6 });
    }
    let mut counter = Counter::new(u64::MAX);
    Ok(uniform_search(g, 1, 2, false, &mut counter).found())
}

/// Independent interval-graph oracle: brute force over all orderings of the
/// `2n` endpoint events, with each vertex's opening before its closing.
/// Adjacency must match interval overlap exactly.
pub fn interval_oracle(g: &Graph) -> Result<bool, SearchError> {
    let n = g.n();
    if n > 6 {
        return Err(SearchError::TooLarge { what: "interval oracle", n, max: 6 });
    }
    if n == 0 {
        return Ok(true);
    }

    fn events(
        g: &Graph,
        open: VertexSet,
        opened: VertexSet,
        closed: VertexSet,
        overlapped: &mut [VertexSet],
    ) -> bool {
        let n = g.n();
        if closed.len() == n {
            return true;
        }
        // Open a fresh interval: everything currently open must be adjacent.
        for v in 0..n {
            if opened.contains(v) {
                continue;
            }
            if open.is_subset_of(g.neighbours(v)) {
                let saved = overlapped[v];
                overlapped[v] = overlapped[v].union(open);
                for u in open.iter() {
                    overlapped[u].insert(v);
                }
                if events(g, open.with(v), opened.with(v), closed, overlapped) {
                    return true;
                }
                for u in open.iter() {
                    if !saved.contains(u) {
                        // v was new for u exactly when u was open now.
                        overlapped[u].remove(v);
                    }
                }
                overlapped[v] = saved;
            }
        }
        // Close an open interval: all its neighbours must have been met.
        for v in open.iter() {
            if overlapped[v] == g.neighbours(v)
                && events(g, open.without(v), opened, closed.with(v), overlapped)
            {
                return true;
            }
        }
        false
    }

    let mut overlapped = vec![VertexSet::EMPTY; n];
    Ok(events(g, VertexSet::EMPTY, VertexSet::EMPTY, VertexSet::EMPTY, &mut overlapped))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use crate::orient;

    #[test]
    fn complete_graph_gets_a_permutation() {
        let k3 = Graph::complete(3).unwrap();
        let w = find_word_representant(&k3, &SearchBudget::for_graph(3)).found().unwrap();
        assert_eq!(w.letters(), &[0, 1, 2]);
    }

    #[test]
    fn w5_has_no_representant_within_t3() {
        let w5 = families::wheel(5).unwrap();
        assert_eq!(
            find_word_representant(&w5, &SearchBudget::for_graph(6)),
            SearchOutcome::Exhausted
        );
    }

    #[test]
    fn c5_is_2_uniform_representable() {
        let c5 = families::cycle(5).unwrap();
        let w = find_word_representant(&c5, &SearchBudget::for_graph(5)).found().unwrap();
        assert_eq!(w.uniformity(), Some(2));
        assert_eq!(is_k11_representant(&w, 0, &c5), Ok(true));
    }

    #[test]
    fn empty_pair_at_level_one() {
        let e2 = Graph::empty(2).unwrap();
        let w = find_k11_representant(&e2, 1, &SearchBudget::for_graph(2)).found().unwrap();
        assert_eq!(w.letters(), &[0, 0, 1, 1]);
    }

    #[test]
    fn k2_at_level_zero() {
        let k2 = Graph::complete(2).unwrap();
        let w = find_k11_representant(&k2, 0, &SearchBudget::for_graph(2)).found().unwrap();
        assert_eq!(w.letters(), &[0, 1]);
    }

    #[test]
    fn word_representable_graphs_are_1_11_representable() {
        for g in [families::cycle(5).unwrap(), families::petersen().induced(&[0, 1, 2, 3, 4, 5])] {
            let w = find_k11_representant(&g, 1, &SearchBudget::for_graph(g.n()));
            let w = w.found().expect("level-1 representant");
            assert_eq!(is_k11_representant(&w, 1, &g), Ok(true));
        }
    }

    #[test]
    fn doubling_fallback_covers_low_budget_direct_search() {
        // With t_max = 1 the direct level-1 search can only try permutations,
        // but the fallback still produces a doubled representant for C5...
        let c5 = families::cycle(5).unwrap();
        let budget = SearchBudget { t_max: 2, m_max: 10, node_limit: 100_000_000 };
        let w = find_k11_representant(&c5, 1, &budget).found().unwrap();
        assert_eq!(is_k11_representant(&w, 1, &c5), Ok(true));
    }

    #[test]
    fn permutational_empty_graph() {
        let e2 = Graph::empty(2).unwrap();
        let w = find_permutational_k11(&e2, 2, &SearchBudget::for_graph(2)).found().unwrap();
        assert_eq!(w.permutation_blocks(VertexSet::full(2)), Some(4));
        assert_eq!(is_k11_representant(&w, 2, &e2), Ok(true));
    }

    #[test]
    fn permutational_complete_graph() {
        let k4 = Graph::complete(4).unwrap();
        let w = find_permutational_k11(&k4, 2, &SearchBudget::for_graph(4)).found().unwrap();
        assert!(w.permutation_blocks(VertexSet::full(4)).is_some());
        assert_eq!(is_k11_representant(&w, 2, &k4), Ok(true));
    }

    #[test]
    fn permutational_all_graphs_on_three_vertices() {
        for g in crate::canon::nonisomorphic_graphs(3).unwrap() {
            let w = find_permutational_k11(&g, 2, &SearchBudget::for_graph(3));
            let w = w.found().expect("permutationally 2-11-representable");
            assert!(w.permutation_blocks(VertexSet::full(3)).is_some());
            assert_eq!(is_k11_representant(&w, 2, &g), Ok(true));
        }
    }

    #[test]
    fn circle_examples() {
        let c4 = families::cycle(4).unwrap();
        let w = is_circle(&c4).unwrap().expect("C4 is a circle graph");
        assert_eq!(w.uniformity(), Some(2));
        assert_eq!(is_k11_representant(&w, 0, &c4), Ok(true));

        assert!(is_circle(&Graph::complete(4).unwrap()).unwrap().is_some());
        assert!(is_circle(&families::wheel(5).unwrap()).unwrap().is_none());
        assert!(is_circle(&Graph::empty(8).unwrap()).is_err());
    }

    #[test]
    fn interval_via_words_examples() {
        assert!(is_interval_via_2uniform_111(&families::path(3).unwrap()).unwrap().is_some());
        assert!(is_interval_via_2uniform_111(&families::cycle(4).unwrap()).unwrap().is_none());
        let k2 = Graph::complete(2).unwrap();
        let w = is_interval_via_2uniform_111(&k2).unwrap().unwrap();
        assert_eq!(is_k11_representant(&w, 1, &k2), Ok(true));
    }

    #[test]
    fn interval_oracle_examples() {
        assert_eq!(interval_oracle(&families::path(4).unwrap()), Ok(true));
        assert_eq!(interval_oracle(&families::cycle(4).unwrap()), Ok(false));
        assert_eq!(interval_oracle(&Graph::complete(3).unwrap()), Ok(true));
        assert!(interval_oracle(&Graph::empty(7).unwrap()).is_err());
    }

    #[test]
    fn interval_routes_agree_on_four_vertices() {
        for g in crate::canon::nonisomorphic_graphs(4).unwrap() {
            let by_word = is_interval_via_2uniform_111(&g).unwrap().is_some();
            let by_oracle = interval_oracle(&g).unwrap();
            assert_eq!(by_word, by_oracle, "{g:?}");
        }
    }

    #[test]
    fn circle_implies_word_representable() {
        for g in crate::canon::nonisomorphic_graphs(5).unwrap() {
            if is_circle(&g).unwrap().is_some() {
                assert!(orient::is_word_representable(&g).unwrap(), "{g:?}");
            }
        }
    }

    #[test]
    fn budget_hit_is_distinguished() {
        let g = families::petersen();
        let budget = SearchBudget { t_max: 3, m_max: 4, node_limit: 5 };
        assert_eq!(find_word_representant(&g, &budget), SearchOutcome::OutOfBudget);
    }
}
