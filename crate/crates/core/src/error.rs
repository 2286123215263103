use thiserror::Error;

use crate::labelled::Label;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("unbalanced parentheses at byte {pos}")]
    UnbalancedParens { pos: usize },
    #[error("illegal character {ch:?} at byte {pos}")]
    IllegalCharacter { ch: char, pos: usize },
    #[error("syntax error at byte {pos}: {msg}")]
    SyntaxError { pos: usize, msg: &'static str },
    #[error("label {0} occurs more than once")]
    DuplicateLabel(Label),

    #[error("vertex is not a leaf")]
    NotALeaf,
    #[error("the root carries no leaf category")]
    IsRoot,
    #[error("tree has a single vertex")]
    TrivialTree,
    #[error("tree is not tip-augmented")]
    NotTipAugmented,
    #[error("tree has {edges} edge(s); at least 2 are required")]
    TooSmall { edges: usize },

    #[error("invalid match set: {0}")]
    InvalidMatchSet(String),
    #[error("labels must be exactly 1..={expected_max}, all unmarked")]
    BadLabelDomain { expected_max: usize },
    #[error("no match-set preimage found (internal error)")]
    NoPreimage,
}
