//! The involution on labelled tip-augmented plane trees: decompose into
//! matches, turn every match with two marked vertices upside down, merge.

use crate::chen::{decompose, merge, merge_traced, MatchCensus, MatchType, MergeKind};
use crate::error::{Error, Result};
use crate::labelled::LabelledPlaneTree;
use crate::tree::is_tip_augmented;

fn check_domain(t: &LabelledPlaneTree) -> Result<()> {
    if !is_tip_augmented(t.shape()) {
        return Err(Error::NotTipAugmented);
    }
    if !t.has_standard_labels() {
        return Err(Error::BadLabelDomain {
            expected_max: t.edge_count() + 1,
        });
    }
    Ok(())
}

pub fn psi(t: &LabelledPlaneTree) -> Result<LabelledPlaneTree> {
    check_domain(t)?;
    if t.edge_count() == 0 {
        return Ok(t.clone());
    }
    merge(&decompose(t)?.flip_type_iv())
}

/// Per-type counts over the decomposition of `t`. Any labelled plane tree on
/// `1..=n+1` is accepted, tip-augmented or not.
pub fn match_census(t: &LabelledPlaneTree) -> Result<MatchCensus> {
    Ok(decompose(t)?.census())
}

/// How the type IV matches of a decomposition behave under merging.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TypeIvDiagnostics {
    /// Type IV matches whose root label is smaller than their leaf label.
    pub ascending: usize,
    /// Type IV matches whose root label is larger than their leaf label.
    pub descending: usize,
    /// Horizontal merges of an original type I match into an original type IV
    /// match.
    pub horizontal_i_into_iv: usize,
    /// Vertical merges of an original type I match into an original type IV
    /// match.
    pub vertical_i_into_iv: usize,
}

pub fn type_iv_diagnostics(t: &LabelledPlaneTree) -> Result<TypeIvDiagnostics> {
    let f = decompose(t)?;
    let mut d = TypeIvDiagnostics::default();
    for m in f
        .matches()
        .iter()
        .filter(|m| m.match_type() == MatchType::TypeIV)
    {
        if m.root.value < m.leaf.value {
            d.ascending += 1;
        } else {
            d.descending += 1;
        }
    }
    let (_, trace) = merge_traced(&f)?;
    for step in &trace {
        // T is always mark-free, so two vertices make it an original type I
        // match; a two-vertex T* with a marked root and a marked consumed
        // vertex is an original type IV match.
        let pair = step.unmarked_vertices == 2
            && step.marked_vertices == 2
            && step.marked_tree_root.marked
            && step.marked_tree.matches('*').count() == 2;
        if pair {
            match step.kind {
                MergeKind::Horizontal => d.horizontal_i_into_iv += 1,
                MergeKind::Vertical => d.vertical_i_into_iv += 1,
            }
        }
    }
    Ok(d)
}
