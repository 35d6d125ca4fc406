//! Words over vertex alphabets and the `k`-11 semantics.
//!
//! Edges of a represented graph are read off a word pairwise: restrict the
//! word to the two letters and count occurrences of the consecutive pattern
//! 11 (factors `xx` or `yy`, counted with overlap, so `uuu` contributes 2).
//! A pair is an edge at level `k` when its count is at most `k`; level 0 is
//! classical alternation.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexSet, MAX_VERTICES};

/// A finite sequence of vertex labels. The alphabet is the set of distinct
/// letters occurring in the word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordError {
    /// Pairwise operations need two distinct letters.
    EqualPair { letter: usize },
    /// The letter does not occur in the word.
    LetterAbsent { letter: usize },
    /// A required vertex does not occur in the word.
    MissingVertex { vertex: usize },
    /// The word's alphabet differs from the graph's vertex set.
    AlphabetMismatch,
    LetterTooLarge { letter: usize },
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::EqualPair { letter } => {
                write!(f, "pair operations need distinct letters, got {letter} twice")
            }
            WordError::LetterAbsent { letter } => write!(f, "letter {letter} absent from word"),
            WordError::MissingVertex { vertex } => {
                write!(f, "vertex {vertex} does not occur in the word")
            }
            WordError::AlphabetMismatch => {
                write!(f, "word alphabet differs from the graph's vertex set")
            }
            WordError::LetterTooLarge { letter } => {
                write!(f, "letter {letter} exceeds the {MAX_VERTICES}-label limit")
            }
        }
    }
}

impl core::error::Error for WordError {}

impl Word {
    /// Wraps a letter sequence. Letters must fit the library-wide label cap.
    pub fn new(letters: Vec<usize>) -> Result<Self, WordError> {
        if let Some(&letter) = letters.iter().find(|&&l| l >= MAX_VERTICES) {
            return Err(WordError::LetterTooLarge { letter });
        }
        Ok(Word { letters })
    }

    pub fn from_slice(letters: &[usize]) -> Result<Self, WordError> {
        Word::new(letters.to_vec())
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn alphabet(&self) -> VertexSet {
        self.letters.iter().copied().collect()
    }

    pub fn occurrences(&self, letter: usize) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    /// `Some(t)` when every alphabet letter occurs exactly `t` times.
    pub fn uniformity(&self) -> Option<usize> {
        let alpha = self.alphabet();
        let first = alpha.min()?;
        let t = self.occurrences(first);
        for l in alpha.iter() {
            if self.occurrences(l) != t {
                return None;
            }
        }
        Some(t)
    }

    /// The subword induced by the letters `x` and `y`, order preserved.
    pub fn induced_pair(&self, x: usize, y: usize) -> Result<Word, WordError> {
        self.check_pair(x, y)?;
        let letters = self.letters.iter().copied().filter(|&l| l == x || l == y).collect();
        Ok(Word { letters })
    }

    /// Occurrences of the consecutive pattern 11 in the subword induced by
    /// `x` and `y`: positions `i` with equal adjacent letters, overlap
    /// counted (`uuu` contributes 2).
    pub fn count_11(&self, x: usize, y: usize) -> Result<usize, WordError> {
        self.check_pair(x, y)?;
        let mut last = usize::MAX;
        let mut count = 0;
        for &l in &self.letters {
            if l == x || l == y {
                if l == last {
                    count += 1;
                }
                last = l;
            }
        }
        Ok(count)
    }

    /// Whether `x` and `y` strictly alternate; equivalent to a zero 11-count.
    pub fn alternates(&self, x: usize, y: usize) -> Result<bool, WordError> {
        for &l in [x, y].iter() {
            if self.occurrences(l) == 0 {
                return Err(WordError::LetterAbsent { letter: l });
            }
        }
        Ok(self.count_11(x, y)? == 0)
    }

    /// The initial permutation: leftmost occurrences in order of appearance.
    #[must_use]
    pub fn initial_permutation(&self) -> Word {
        let mut seen = VertexSet::EMPTY;
        let mut letters = Vec::new();
        for &l in &self.letters {
            if !seen.contains(l) {
                seen.insert(l);
                letters.push(l);
            }
        }
        Word { letters }
    }

    #[must_use]
    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { letters }
    }

    #[must_use]
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// The word `ww`.
    #[must_use]
    pub fn doubled(&self) -> Word {
        self.concat(self)
    }

    /// If the word splits into consecutive blocks that are each a permutation
    /// of `v`, returns the number of blocks.
    pub fn permutation_blocks(&self, v: VertexSet) -> Option<usize> {
        let size = v.len();
        if size == 0 {
            return if self.is_empty() { Some(0) } else { None };
        }
        if self.letters.len() % size != 0 {
            return None;
        }
        for block in self.letters.chunks(size) {
            let seen: VertexSet = block.iter().copied().collect();
            if seen != v || block.len() != size {
                return None;
            }
        }
        Some(self.letters.len() / size)
    }

    fn check_pair(&self, x: usize, y: usize) -> Result<(), WordError> {
        if x == y {
            return Err(WordError::EqualPair { letter: x });
        }
        let alpha = self.alphabet();
        for l in [x, y] {
            if !alpha.contains(l) {
                return Err(WordError::LetterAbsent { letter: l });
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

/// The two doubling constructions `ww` and `r(pi(w))w`, both
/// 1-11-representants of the graph that `w` word-represents.
pub fn doubling_pair(w: &Word) -> (Word, Word) {
    (w.doubled(), w.initial_permutation().reversed().concat(w))
}

/// The graph induced by `w` at level `k` on the vertex set `v`: vertex `i`
/// of the result is the `i`-th smallest member of `v`, and a pair is an edge
/// exactly when its 11-count is at most `k`. Every member of `v` must occur
/// in `w`. Level 0 is the alternation graph.
pub fn graph_of_word(w: &Word, k: usize, v: VertexSet) -> Result<Graph, WordError> {
    let labels = v.to_vec();
    let n = labels.len();
    for &l in &labels {
        if w.occurrences(l) == 0 {
            return Err(WordError::MissingVertex { vertex: l });
        }
    }
    // Position of each label in the dense relabelling, or MAX for ignored letters.
    let mut pos = [usize::MAX; MAX_VERTICES];
    for (i, &l) in labels.iter().enumerate() {
        pos[l] = i;
    }
    // One fused scan: for every pair, track which of the two letters was seen
    // last and bump the count on repeats.
    let mut last = vec![usize::MAX; n * n];
    let mut counts = vec![0usize; n * n];
    for &l in w.letters() {
        let i = pos[l];
        if i == usize::MAX {
            continue;
        }
        for j in 0..n {
            if j == i {
                continue;
            }
            let cell = if i < j { i * n + j } else { j * n + i };
            if last[cell] == i {
                counts[cell] += 1;
            }
            last[cell] = i;
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if counts[i * n + j] <= k {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).map_err(|_| WordError::AlphabetMismatch)
}

/// Whether `w` is a `k`-11-representant of `g`: the alphabet must equal the
/// vertex set of `g` and the induced graph at level `k` must equal `g`.
pub fn is_k11_representant(w: &Word, k: usize, g: &Graph) -> Result<bool, WordError> {
    if w.alphabet() != g.vertex_set() {
        return Err(WordError::AlphabetMismatch);
    }
    Ok(&graph_of_word(w, k, g.vertex_set())? == g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[usize]) -> Word {
        Word::from_slice(letters).unwrap()
    }

    /// The running example word 42535214421.
    fn example() -> Word {
        w(&[4, 2, 5, 3, 5, 2, 1, 4, 4, 2, 1])
    }

    #[test]
    fn induced_pair_worked_example() {
        assert_eq!(example().induced_pair(4, 5).unwrap(), w(&[4, 5, 5, 4, 4]));
        // Manual subsequence scan for the pair {4, 2}.
        assert_eq!(example().induced_pair(4, 2).unwrap(), w(&[4, 2, 2, 4, 4, 2]));
        assert_eq!(w(&[7, 8]).induced_pair(7, 8).unwrap(), w(&[7, 8]));
        assert_eq!(example().induced_pair(4, 4), Err(WordError::EqualPair { letter: 4 }));
        assert_eq!(example().induced_pair(4, 9), Err(WordError::LetterAbsent { letter: 9 }));
    }

    #[test]
    fn count_11_worked_example() {
        // 45544 has the factors 55 and 44.
        assert_eq!(example().count_11(4, 5).unwrap(), 2);
        assert_eq!(w(&[1, 2, 1, 2]).count_11(1, 2).unwrap(), 0);
        // Overlap convention: xxx contributes two occurrences of xx.
        assert_eq!(w(&[1, 1, 1, 2]).count_11(1, 2).unwrap(), 2);
    }

    #[test]
    fn alternation_examples() {
        assert!(w(&[1, 2, 1, 2]).alternates(1, 2).unwrap());
        assert!(!example().alternates(4, 5).unwrap());
        assert!(w(&[1, 2]).alternates(1, 2).unwrap());
        assert_eq!(w(&[1, 2]).alternates(1, 3), Err(WordError::LetterAbsent { letter: 3 }));
    }

    #[test]
    fn initial_permutation_worked_example() {
        assert_eq!(example().initial_permutation(), w(&[4, 2, 5, 3, 1]));
        let p = w(&[3, 1, 2]);
        assert_eq!(p.initial_permutation(), p);
        assert_eq!(w(&[]).initial_permutation(), w(&[]));
    }

    #[test]
    fn reverse_worked_example() {
        assert_eq!(example().reversed(), w(&[1, 2, 4, 4, 1, 2, 5, 3, 5, 2, 4]));
        assert_eq!(w(&[6]).reversed(), w(&[6]));
        assert_eq!(example().reversed().reversed(), example());
    }

    #[test]
    fn graph_of_word_examples() {
        // A permutation repeated twice represents the complete graph.
        let pp = w(&[0, 1, 2, 3, 0, 1, 2, 3]);
        let g = graph_of_word(&pp, 0, VertexSet::full(4)).unwrap();
        assert_eq!(g, Graph::complete(4).unwrap());

        // xxyy: count 2, so an edge appears only at level 2.
        let xxyy = w(&[0, 0, 1, 1]);
        for (k, edges) in [(0, 0), (1, 0), (2, 1)] {
            let g = graph_of_word(&xxyy, k, VertexSet::full(2)).unwrap();
            assert_eq!(g.edge_count(), edges, "level {k}");
        }

        // The paper's word on alphabet {1..5}: alternation graph computed
        // pairwise; spot-check against direct counts.
        let v: VertexSet = [1usize, 2, 3, 4, 5].into_iter().collect();
        let g = graph_of_word(&example(), 0, v).unwrap();
        // Dense relabelling maps letter l to l-1.
        for x in 1..=5usize {
            for y in (x + 1)..=5 {
                let alternating = example().count_11(x, y).unwrap() == 0;
                assert_eq!(g.has_edge(x - 1, y - 1), alternating);
            }
        }

        let missing = graph_of_word(&w(&[0, 1]), 0, VertexSet::full(3));
        assert_eq!(missing, Err(WordError::MissingVertex { vertex: 2 }));
    }

    #[test]
    fn representant_checks() {
        let k4 = Graph::complete(4).unwrap();
        assert!(is_k11_representant(&w(&[0, 1, 2, 3, 0, 1, 2, 3]), 0, &k4).unwrap());

        let two_isolated = Graph::empty(2).unwrap();
        assert!(!is_k11_representant(&w(&[0, 1, 0, 1]), 1, &two_isolated).unwrap());

        assert_eq!(
            is_k11_representant(&w(&[0, 1]), 0, &Graph::complete(3).unwrap()),
            Err(WordError::AlphabetMismatch)
        );
    }

    #[test]
    fn doubling_pair_shapes() {
        let (ww, rpw) = doubling_pair(&w(&[0, 1, 2, 3]));
        assert_eq!(ww, w(&[0, 1, 2, 3, 0, 1, 2, 3]));
        assert_eq!(rpw, w(&[3, 2, 1, 0, 0, 1, 2, 3]));

        let (ww, rpw) = doubling_pair(&w(&[0, 1, 0]));
        assert_eq!(ww, w(&[0, 1, 0, 0, 1, 0]));
        assert_eq!(rpw, w(&[1, 0, 0, 1, 0]));
    }

    #[test]
    fn doubling_yields_1_11_representants() {
        // Both constructions turn a word-representant into a 1-11-representant.
        for letters in [
            &[0usize, 1, 2, 3][..],
            &[0, 1, 0, 2, 1, 2],
            &[2, 0, 1, 1, 0, 2],
            &[0, 1, 2, 0, 2, 1, 0],
        ] {
            let word = w(letters);
            let g = graph_of_word(&word, 0, word.alphabet()).unwrap();
            let (ww, rpw) = doubling_pair(&word);
            assert!(is_k11_representant(&ww, 1, &g).unwrap(), "{word:?}");
            assert!(is_k11_representant(&rpw, 1, &g).unwrap(), "{word:?}");
        }
    }

    #[test]
    fn permutation_blocks_examples() {
        let v = VertexSet::full(4);
        assert_eq!(w(&[0, 1, 2, 3, 1, 0, 2, 3]).permutation_blocks(v), Some(2));
        assert_eq!(w(&[0, 1, 2, 0]).permutation_blocks(VertexSet::full(3)), None);
        let xy = VertexSet::full(2);
        assert_eq!(w(&[0, 1, 1, 0, 0, 1, 1, 0]).permutation_blocks(xy), Some(4));
    }

    #[test]
    fn uniformity() {
        assert_eq!(w(&[0, 1, 0, 1]).uniformity(), Some(2));
        assert_eq!(w(&[0, 1, 0]).uniformity(), None);
        assert_eq!(w(&[5]).uniformity(), Some(1));
    }
}
