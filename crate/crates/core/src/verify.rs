//! Exhaustive invariant suites over all small trees, as run by `tiptree verify`.
//!
//! Each suite walks every object up to its own edge cap (the requested
//! maximum, clipped where the search space grows factorially) and records the
//! first few counterexamples it meets.

use std::collections::BTreeSet;
use std::fmt;

use crate::chen::{decompose, decompose_all, merge, MatchType};
use crate::enumeration::{
    check_symmetry, distribution_table, gen_labelled_plane_trees, gen_labelled_tip_augmented,
    gen_match_sets, gen_tip_augmented, gen_tip_augmented_with, motzkin, Strategy,
};
use crate::labelled::{Label, LabelledPlaneTree};
use crate::leaf_stats::{interior_census, stats, stats_or_zero};
use crate::phi::{check_prop1, classify, phi, phi_with_correspondence, TreeClass};
use crate::psi::psi;
use crate::tree::is_tip_augmented;

const KEEP_FAILURES: usize = 5;

/// Caps on the edge count for the suites whose inputs grow factorially.
pub const CORRESPONDENCE_CAP: usize = 8;
pub const CHEN_CAP: usize = 4;
pub const UNIQUENESS_CAP: usize = 3;
pub const PSI_CAP: usize = 5;
pub const FLIP_STABILITY_CAP: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    /// Largest edge count visited.
    pub max_edges: usize,
    /// Number of objects checked.
    pub cases: usize,
    pub failure_count: usize,
    /// The first few failures, described.
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str, max_edges: usize) -> Self {
        SuiteResult {
            name,
            max_edges,
            cases: 0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < KEEP_FAILURES {
                self.failures.push(describe());
            }
        }
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<22} n<={:<3} {:>8} cases  {}",
            self.name,
            self.max_edges,
            self.cases,
            if self.passed() {
                "PASS".to_string()
            } else {
                format!("FAIL ({})", self.failure_count)
            }
        )
    }
}

pub type Suite = fn(usize) -> SuiteResult;

/// Every suite, in the order `run_all` runs them.
pub const SUITES: &[(&str, Suite)] = &[
    ("motzkin_counts", motzkin_counts),
    ("symmetry", symmetry),
    ("phi_involution", phi_involution),
    ("prop1", prop1),
    ("phi_correspondence", phi_correspondence),
    ("chen_round_trip", chen_round_trip),
    ("chen_uniqueness", chen_uniqueness),
    ("match_census", match_census_identity),
    ("no_type_iii", no_type_iii),
    ("psi", psi_suite),
];

pub fn run_all(max_edges: usize) -> Vec<SuiteResult> {
    SUITES.iter().map(|(_, suite)| suite(max_edges)).collect()
}

/// Generator counts against the Motzkin recurrence, and the constructive
/// generator against filtering all plane trees.
pub fn motzkin_counts(max: usize) -> SuiteResult {
    let mut res = SuiteResult::new("motzkin_counts", max);
    for n in 1..=max {
        let built = gen_tip_augmented(n);
        let want = motzkin(n - 1);
        res.check(num_bigint::BigUint::from(built.len()) == want, || {
            format!(
                "n={n}: generated {} trees, m_{} = {want}",
                built.len(),
                n - 1
            )
        });
        let sorted = built.windows(2).all(|w| w[0] < w[1]);
        res.check(sorted && built.iter().all(is_tip_augmented), || {
            format!("n={n}: output not strictly ordered or not tip-augmented")
        });
        let filtered = gen_tip_augmented_with(n, Strategy::Filter);
        res.check(filtered == built, || {
            format!("n={n}: construct and filter disagree")
        });
    }
    res
}

pub fn symmetry(max: usize) -> SuiteResult {
    let mut res = SuiteResult::new("symmetry", max);
    for n in 2..=max {
        let table = distribution_table(n).expect("n >= 2");
        let report = check_symmetry(&table);
        res.check(report.is_symmetric(), || {
            format!("n={n}: {} asymmetric vectors", report.violations.len())
        });
        res.check(table.total() == motzkin(n - 1), || {
            format!("n={n}: table total is off")
        });
    }
    res
}

pub fn phi_involution(max: usize) -> SuiteResult {
    let mut res = SuiteResult::new("phi_involution", max);
    for n in 0..=max {
        for t in gen_tip_augmented(n) {
            let image = phi(&t).expect("tip-augmented input");
            let back = phi(&image).expect("phi stays tip-augmented");
            let stats_ok = n < 2 || stats_or_zero(&image) == stats_or_zero(&t).swap_ik();
            let shape_ok = is_tip_augmented(&image)
                && image.edge_count() == t.edge_count()
                && image.leaves().count() == t.leaves().count();
            let class_ok = n < 2 || {
                let (from, to) = (classify(&t).unwrap().class, classify(&image).unwrap().class);
                matches!(
                    (from, to),
                    (TreeClass::A1, TreeClass::A1)
                        | (TreeClass::A2, TreeClass::A2)
                        | (TreeClass::B1, TreeClass::B2)
                        | (TreeClass::B2, TreeClass::B1)
                )
            };
            res.check(back == t && stats_ok && shape_ok && class_ok, || {
                format!("{t} -> {image} -> {back}")
            });
        }
    }
    res
}

pub fn prop1(max: usize) -> SuiteResult {
    let mut res = SuiteResult::new("prop1", max);
    for n in 2..=max {
        for t in gen_tip_augmented(n) {
            let report = check_prop1(&t).expect("n >= 2, tip-augmented");
            res.check(report.agrees(), || format!("{t}: {report:?}"));
        }
    }
    res
}

/// The labelled variant on two labellings per shape (preorder and reversed
/// preorder).
pub fn phi_correspondence(max: usize) -> SuiteResult {
    let cap = max.min(CORRESPONDENCE_CAP);
    let mut res = SuiteResult::new("phi_correspondence", cap);
    for n in 0..=cap {
        for shape in gen_tip_augmented(n) {
            let size = shape.vertex_count() as u32;
            let forward = LabelledPlaneTree::preorder(shape.clone());
            let reversed =
                LabelledPlaneTree::new(shape.clone(), (1..=size).rev().map(Label::plain).collect())
                    .unwrap();
            for t in [forward, reversed] {
                let image = phi_with_correspondence(&t).unwrap();
                let back = phi_with_correspondence(&image).unwrap();
                let labels_ok = sorted_labels(&image) == sorted_labels(&t);
                let shape_ok = image.shape() == &phi(t.shape()).unwrap();
                res.check(back == t && labels_ok && shape_ok, || {
                    format!("{t} -> {image} -> {back}")
                });
            }
        }
    }
    res
}

/// Merge inverts decomposition on every labelled plane tree, and merge is a
/// bijection from all valid match sets onto them.
pub fn chen_round_trip(max: usize) -> SuiteResult {
    let cap = max.min(CHEN_CAP);
    let mut res = SuiteResult::new("chen_round_trip", cap);
    for n in 1..=cap {
        let trees = gen_labelled_plane_trees(n);
        for t in &trees {
            let f = decompose(t);
            let back = f.as_ref().ok().map(merge);
            res.check(matches!(&back, Some(Ok(b)) if b == t), || {
                format!("{t}: {f:?} -> {back:?}")
            });
        }
        let sets = gen_match_sets(n);
        let mut images = BTreeSet::new();
        for f in &sets {
            let t = merge(f).expect("valid match set");
            let again = decompose(&t);
            res.check(again.as_ref() == Ok(f), || {
                format!("{f} -> {t} -> {again:?}")
            });
            images.insert(t.encode());
        }
        res.check(
            images.len() == trees.len() && sets.len() == trees.len(),
            || {
                format!(
                    "n={n}: {} match sets hit {} of {} trees",
                    sets.len(),
                    images.len(),
                    trees.len()
                )
            },
        );
    }
    res
}

pub fn chen_uniqueness(max: usize) -> SuiteResult {
    let cap = max.min(UNIQUENESS_CAP);
    let mut res = SuiteResult::new("chen_uniqueness", cap);
    for n in 1..=cap {
        for t in gen_labelled_plane_trees(n) {
            let all = decompose_all(&t).unwrap();
            res.check(all.len() == 1, || format!("{t}: {} preimages", all.len()));
        }
    }
    res
}

/// Match types against the leaf and interior-vertex census.
pub fn match_census_identity(max: usize) -> SuiteResult {
    let cap = max.min(CHEN_CAP);
    let mut res = SuiteResult::new("match_census", cap);
    for n in 1..=cap {
        for t in gen_labelled_plane_trees(n) {
            let census = decompose(&t).unwrap().census();
            let s = stats(t.shape()).unwrap();
            let (old_int, young_int) = interior_census(t.shape()).unwrap();
            let want = (s.old(), s.young(), old_int, young_int);
            res.check(census.as_tuple() == want, || {
                format!("{t}: {census:?} vs {want:?}")
            });
        }
    }
    res
}

pub fn no_type_iii(max: usize) -> SuiteResult {
    let cap = max.min(PSI_CAP);
    let mut res = SuiteResult::new("no_type_iii", cap);
    for n in 1..=cap {
        for t in gen_labelled_tip_augmented(n) {
            let f = decompose(&t).unwrap();
            let bad = f
                .matches()
                .iter()
                .any(|m| m.match_type() == MatchType::TypeIII);
            res.check(!bad, || format!("{t}: {f}"));
        }
    }
    res
}

pub fn psi_suite(max: usize) -> SuiteResult {
    let cap = max.min(PSI_CAP);
    let mut res = SuiteResult::new("psi", cap);
    for n in 1..=cap {
        for t in gen_labelled_tip_augmented(n) {
            let image = match psi(&t) {
                Ok(image) => image,
                Err(e) => {
                    res.check(false, || format!("{t}: {e}"));
                    continue;
                }
            };
            let back = psi(&image);
            let closure =
                is_tip_augmented(image.shape()) && sorted_labels(&image) == sorted_labels(&t);
            let swap = n < 2 || stats(image.shape()) == stats(t.shape()).map(|s| s.swap_ik());
            let flip_ok = n > FLIP_STABILITY_CAP
                || decompose(&image) == decompose(&t).map(|f| f.flip_type_iv());
            res.check(
                back.as_ref() == Ok(&t) && closure && swap && flip_ok,
                || format!("{t} -> {image} -> {back:?}"),
            );
        }
    }
    res
}

fn sorted_labels(t: &LabelledPlaneTree) -> Vec<Label> {
    let mut v = t.labels().to_vec();
    v.sort();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_small() {
        for r in run_all(4) {
            assert!(r.passed(), "{r}: {:?}", r.failures);
            assert!(r.cases > 0, "{}", r.name);
        }
    }

    #[test]
    fn caps_apply() {
        assert_eq!(psi_suite(7).max_edges, PSI_CAP);
        assert_eq!(chen_uniqueness(2).max_edges, 2);
    }
}
