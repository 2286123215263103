//! Tip-augmented plane trees: plane trees in which the leftmost child of every
//! interior vertex is a leaf. They are counted by the Motzkin numbers.
//!
//! The crate provides
//!
//! * parenthesis-word and labelled text encodings ([`tree`], [`labelled`]) and
//!   DOT output ([`dot`]),
//! * exhaustive generators and distribution tables ([`enumeration`]),
//! * the five leaf categories and the statistics vector `(i, j, k, r, s)`
//!   ([`leaf_stats`]),
//! * an involution on unlabelled tip-augmented trees that swaps singleton and
//!   elder non-twin leaves ([`mod@phi`]),
//! * the match merging bijection for labelled plane trees ([`chen`]) and the
//!   labelled involution built on it ([`mod@psi`]),
//! * invariant suites used by `tiptree verify` ([`verify`]).

pub mod chen;
pub mod dot;
pub mod enumeration;
mod error;
pub mod labelled;
pub mod leaf_stats;
mod node;
pub mod phi;
pub mod psi;
pub mod tree;
pub mod verify;

pub use chen::{
    decompose, decompose_all, flip, match_type, merge, merge_traced, parse_match_set,
    validate_match_set, Match, MatchCensus, MatchSet, MatchType, MergeKind, MergeStep,
    ValidationReport,
};
pub use dot::{render_dot, render_dot_labelled, DotStyle};
pub use enumeration::{
    catalan, check_symmetry, distribution_table, gen_labelled_plane_trees,
    gen_labelled_tip_augmented, gen_match_sets, gen_plane_trees, gen_tip_augmented, motzkin,
    DistributionTable, SymmetryReport,
};
pub use error::{Error, Result};
pub use labelled::{parse_labelled, serialize_labelled, Label, LabelledPlaneTree};
pub use leaf_stats::{interior_census, leaf_category, stats, LeafCategory, StatsVector};
pub use phi::{
    check_prop1, classify, phi, phi_with_correspondence, ClassView, Prop1Report, TreeClass,
};
pub use psi::{match_census, psi};
pub use tree::{is_tip_augmented, parse_tree, serialize_tree, PlaneTree, VertexId};
