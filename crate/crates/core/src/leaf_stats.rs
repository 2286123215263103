//! The five leaf categories and the statistics vector `(i, j, k, r, s)`.
//!
//! A non-root leaf is classified by its position among its siblings:
//!
//! | category         | condition                                        |
//! |------------------|--------------------------------------------------|
//! | singleton        | no siblings                                      |
//! | elder twin       | first child, and the second child is a leaf      |
//! | elder non-twin   | first child, and the second child is interior    |
//! | second           | second child                                     |
//! | younger          | third child or later                             |
//!
//! The first three refine the *old* leaves (leftmost children), the last two
//! the *young* ones.

use std::fmt;

use crate::error::{Error, Result};
use crate::tree::{PlaneTree, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LeafCategory {
    Singleton,
    ElderTwin,
    ElderNonTwin,
    Second,
    Younger,
}

impl LeafCategory {
    pub fn is_old(self) -> bool {
        matches!(self, Self::Singleton | Self::ElderTwin | Self::ElderNonTwin)
    }
}

/// Leaf counts `(i, j, k, r, s)`: singleton, elder twin, elder non-twin,
/// younger, second.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StatsVector {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub r: usize,
    pub s: usize,
}

impl StatsVector {
    pub fn new(i: usize, j: usize, k: usize, r: usize, s: usize) -> Self {
        StatsVector { i, j, k, r, s }
    }

    pub fn old(&self) -> usize {
        self.i + self.j + self.k
    }

    pub fn young(&self) -> usize {
        self.r + self.s
    }

    pub fn leaves(&self) -> usize {
        self.old() + self.young()
    }

    /// `(k, j, i, r, s)`.
    pub fn swap_ik(self) -> Self {
        StatsVector {
            i: self.k,
            k: self.i,
            ..self
        }
    }

    pub fn as_tuple(&self) -> (usize, usize, usize, usize, usize) {
        (self.i, self.j, self.k, self.r, self.s)
    }

    fn bump(&mut self, cat: LeafCategory) {
        match cat {
            LeafCategory::Singleton => self.i += 1,
            LeafCategory::ElderTwin => self.j += 1,
            LeafCategory::ElderNonTwin => self.k += 1,
            LeafCategory::Younger => self.r += 1,
            LeafCategory::Second => self.s += 1,
        }
    }
}

impl fmt::Display for StatsVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{},{})",
            self.i, self.j, self.k, self.r, self.s
        )
    }
}

pub fn leaf_category(t: &PlaneTree, v: VertexId) -> Result<LeafCategory> {
    if !t.is_leaf(v) {
        return Err(Error::NotALeaf);
    }
    let parent = t.parent(v).ok_or(Error::IsRoot)?;
    Ok(category_unchecked(t, parent, v))
}

fn category_unchecked(t: &PlaneTree, parent: VertexId, v: VertexId) -> LeafCategory {
    let siblings = t.children(parent);
    if siblings.len() == 1 {
        return LeafCategory::Singleton;
    }
    match siblings.iter().position(|&c| c == v) {
        Some(0) if t.is_leaf(siblings[1]) => LeafCategory::ElderTwin,
        Some(0) => LeafCategory::ElderNonTwin,
        Some(1) => LeafCategory::Second,
        _ => LeafCategory::Younger,
    }
}

/// Category of every non-root leaf, in preorder.
pub fn categories(t: &PlaneTree) -> impl Iterator<Item = (VertexId, LeafCategory)> + '_ {
    t.leaves()
        .filter_map(move |v| t.parent(v).map(|p| (v, category_unchecked(t, p, v))))
}

pub fn stats(t: &PlaneTree) -> Result<StatsVector> {
    if t.edge_count() == 0 {
        return Err(Error::TrivialTree);
    }
    Ok(stats_or_zero(t))
}

// The single-vertex tree gets the zero vector, which is what the recursive
// counting arguments expect for a trivial subtree.
pub(crate) fn stats_or_zero(t: &PlaneTree) -> StatsVector {
    let mut out = StatsVector::default();
    for (_, cat) in categories(t) {
        out.bump(cat);
    }
    out
}

/// Non-root interior vertices split into `(old, young)`: leftmost children
/// versus the rest.
pub fn interior_census(t: &PlaneTree) -> Result<(usize, usize)> {
    if t.edge_count() == 0 {
        return Err(Error::TrivialTree);
    }
    let mut old = 0;
    let mut young = 0;
    for v in t.vertices().skip(1).filter(|&v| !t.is_leaf(v)) {
        if t.position(v) == Some(0) {
            old += 1;
        } else {
            young += 1;
        }
    }
    Ok((old, young))
}
