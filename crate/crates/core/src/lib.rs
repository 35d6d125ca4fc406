//! Core algorithms for word-representable graphs and their 1-11 relaxations.
//!
//! A word `w` over the vertex set of a graph `G` *represents* `G` when two
//! vertices alternate in `w` exactly when they are adjacent. Relaxing strict
//! alternation to "at most `k` consecutive equal pairs in the induced
//! two-letter subword" yields `k`-11-representability; word-representable
//! graphs are the `k = 0` case. This crate provides:
//!
//! - [`graph`]: dense bitset graphs up to 64 vertices, colourings, split
//!   partitions, and exhaustive non-isomorphic enumeration at desk scale;
//! - [`word`]: words over vertex alphabets and the 11-pattern semantics;
//! - [`orient`]: acyclic orientations, shortcut witnesses, and the
//!   semi-transitive-orientation decision procedure;
//! - [`search`]: bounded backtracking searches for representant words,
//!   plus circle/interval specializations and an independent interval oracle;
//! - [`prover`]: a rule-based certificate-producing prover for
//!   1-11-representability with an independent certificate checker;
//! - [`multi`]: edge-partition certificates bounding the strict
//!   multi-1-11-representation number.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats and the CLI
//! live in the companion `wordrep-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod canon;
pub mod colour;
pub mod graph;
pub mod multi;
pub mod orient;
pub mod prover;
pub mod search;
pub mod word;

pub use canon::{canonical_form, nonisomorphic_graphs, CanonicalForm};
pub use colour::{chromatic_number, colour_profiles, minimal_colourings, ColourProfile, Colouring};
pub use graph::{find_split_partition, Graph, GraphError, SplitPartition, VertexSet};
pub use orient::{
    find_semi_transitive_orientation, find_shortcut, find_transitive_orientation,
    is_word_representable, orient_by_colouring, Orientation, ShortcutWitness,
};
pub use prover::{check_certificate, prove_1_11, synthesize_word, Certificate, ProveOutcome};
pub use search::{SearchBudget, SearchOutcome};
pub use word::{graph_of_word, is_k11_representant, Word};
