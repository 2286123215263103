//! Exhaustive generation of plane trees and tip-augmented plane trees, the
//! Motzkin and Catalan reference sequences, and distribution tables of the
//! leaf statistics.
//!
//! All generators yield trees in ascending order of their parenthesis words
//! (`(` before `)`).

use std::collections::BTreeMap;
use std::fmt::Write;

use itertools::Itertools;
use num_bigint::BigUint;

use crate::chen::{Match, MatchSet};
use crate::error::{Error, Result};
use crate::labelled::{Label, LabelledPlaneTree};
use crate::leaf_stats::{stats_or_zero, StatsVector};
use crate::tree::{is_tip_augmented, parse_tree, PlaneTree};

/// Motzkin numbers: `m_0 = 1`, `m_{k+1} = m_k + sum_{j<k} m_j m_{k-1-j}`.
pub fn motzkin(k: usize) -> BigUint {
    motzkin_prefix(k).pop().unwrap()
}

/// `[m_0, ..., m_k]`.
pub fn motzkin_prefix(k: usize) -> Vec<BigUint> {
    let mut m: Vec<BigUint> = vec![BigUint::from(1u32)];
    for next in 1..=k {
        let prev = next - 1;
        let mut acc = m[prev].clone();
        for j in 0..prev {
            acc += &m[j] * &m[prev - 1 - j];
        }
        m.push(acc);
    }
    m
}

/// Catalan numbers via `C_0 = 1`, `C_{k+1} = sum_{j<=k} C_j C_{k-j}`.
pub fn catalan(k: usize) -> BigUint {
    let mut c: Vec<BigUint> = vec![BigUint::from(1u32)];
    for next in 1..=k {
        let mut acc = BigUint::default();
        for j in 0..next {
            acc += &c[j] * &c[next - 1 - j];
        }
        c.push(acc);
    }
    c.pop().unwrap()
}

/// How `gen_tip_augmented_with` produces its trees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Build words directly under the tip-augmented constraint.
    #[default]
    Construct,
    /// Generate every plane tree and keep the tip-augmented ones.
    Filter,
}

/// Every plane tree with `n` edges.
pub fn gen_plane_trees(n: usize) -> Vec<PlaneTree> {
    words(n, false)
        .iter()
        .map(|w| parse_tree(w).unwrap())
        .collect()
}

/// Every tip-augmented plane tree with `n` edges.
pub fn gen_tip_augmented(n: usize) -> Vec<PlaneTree> {
    gen_tip_augmented_with(n, Strategy::Construct)
}

pub fn gen_tip_augmented_with(n: usize, strategy: Strategy) -> Vec<PlaneTree> {
    match strategy {
        Strategy::Construct => words(n, true)
            .iter()
            .map(|w| parse_tree(w).unwrap())
            .collect(),
        Strategy::Filter => gen_plane_trees(n)
            .into_iter()
            .filter(is_tip_augmented)
            .collect(),
    }
}

// Depth-first over the word, always trying `(` before `)`, so the output is
// already sorted. The root's `)` may only come last. A vertex whose first
// child is opened must see that child close at once: in word terms,
// tip-augmented means the word never contains `(((`.
fn words(n: usize, tip: bool) -> Vec<String> {
    struct Gen {
        opens: usize,
        tip: bool,
        out: Vec<String>,
        buf: Vec<u8>,
    }

    impl Gen {
        fn go(&mut self, opened: usize, depth: usize) {
            if opened == self.opens && depth == 0 {
                self.out.push(String::from_utf8(self.buf.clone()).unwrap());
                return;
            }
            let len = self.buf.len();
            let blocked = self.tip && len >= 2 && self.buf[len - 2..] == *b"((";
            if opened < self.opens && !blocked {
                self.buf.push(b'(');
                self.go(opened + 1, depth + 1);
                self.buf.pop();
            }
            if depth > 1 || (depth == 1 && opened == self.opens) {
                self.buf.push(b')');
                self.go(opened, depth - 1);
                self.buf.pop();
            }
        }
    }

    let mut g = Gen {
        opens: n + 1,
        tip,
        out: Vec::new(),
        buf: vec![b'('],
    };
    g.go(1, 1);
    g.out
}

/// Every labelling of `shapes` by `1..=n+1`, shape-major, labellings in
/// lexicographic order of the preorder label sequence.
pub fn labellings(shapes: &[PlaneTree]) -> Vec<LabelledPlaneTree> {
    let mut out = Vec::new();
    for shape in shapes {
        let size = shape.vertex_count() as u32;
        for perm in (1..=size).permutations(size as usize) {
            let labels = perm.into_iter().map(Label::plain).collect();
            out.push(LabelledPlaneTree::new(shape.clone(), labels).unwrap());
        }
    }
    out
}

/// Every labelled tip-augmented plane tree with `n` edges on `1..=n+1`.
pub fn gen_labelled_tip_augmented(n: usize) -> Vec<LabelledPlaneTree> {
    labellings(&gen_tip_augmented(n))
}

/// Every labelled plane tree with `n` edges on `1..=n+1`.
pub fn gen_labelled_plane_trees(n: usize) -> Vec<LabelledPlaneTree> {
    labellings(&gen_plane_trees(n))
}

/// Every valid match set with `n` matches: each way to pair up the labels
/// `1..=n+1, (n+2)*..=(2n)*` into `n` rooted two-vertex trees. There are
/// `(2n)!/n!` of them.
pub fn gen_match_sets(n: usize) -> Vec<MatchSet> {
    fn go(rest: &[Label], acc: &mut Vec<Match>, out: &mut Vec<MatchSet>) {
        let Some(first) = rest.first().copied() else {
            out.push(MatchSet::new(acc.clone()));
            return;
        };
        for idx in 1..rest.len() {
            let partner = rest[idx];
            let remaining: Vec<Label> = rest
                .iter()
                .copied()
                .filter(|&l| l != first && l != partner)
                .collect();
            for m in [Match::new(first, partner), Match::new(partner, first)] {
                acc.push(m);
                go(&remaining, acc, out);
                acc.pop();
            }
        }
    }
    if n == 0 {
        return Vec::new();
    }
    let n = n as u32;
    let labels: Vec<Label> = (1..=n + 1)
        .map(Label::plain)
        .chain((n + 2..=2 * n).map(Label::marked))
        .collect();
    let mut out = Vec::new();
    go(&labels, &mut Vec::new(), &mut out);
    out
}

/// Counts of tip-augmented trees with `n` edges per statistics vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionTable {
    pub n: usize,
    pub rows: BTreeMap<StatsVector, BigUint>,
}

impl DistributionTable {
    pub fn from_trees<'a>(n: usize, trees: impl IntoIterator<Item = &'a PlaneTree>) -> Self {
        let mut rows: BTreeMap<StatsVector, BigUint> = BTreeMap::new();
        for t in trees {
            *rows.entry(stats_or_zero(t)).or_default() += 1u32;
        }
        DistributionTable { n, rows }
    }

    pub fn total(&self) -> BigUint {
        self.rows.values().sum()
    }

    pub fn count(&self, v: &StatsVector) -> BigUint {
        self.rows.get(v).cloned().unwrap_or_default()
    }

    /// Header `n,i,j,k,r,s,count`, rows sorted by `(i,j,k,r,s)`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,i,j,k,r,s,count\n");
        for (v, c) in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                self.n, v.i, v.j, v.k, v.r, v.s, c
            );
        }
        out
    }

    /// One JSON object per line.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for (v, c) in &self.rows {
            let _ = writeln!(
                out,
                r#"{{"n":{},"i":{},"j":{},"k":{},"r":{},"s":{},"count":{}}}"#,
                self.n, v.i, v.j, v.k, v.r, v.s, c
            );
        }
        out
    }

    /// `(i,j,k,r,s) count` per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, c) in &self.rows {
            let _ = writeln!(out, "{v} {c}");
        }
        out
    }
}

pub fn distribution_table(n: usize) -> Result<DistributionTable> {
    if n == 0 {
        return Err(Error::TrivialTree);
    }
    Ok(DistributionTable::from_trees(n, &gen_tip_augmented(n)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryViolation {
    pub stats: StatsVector,
    pub count: BigUint,
    pub mirrored: BigUint,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SymmetryReport {
    pub violations: Vec<SymmetryViolation>,
}

impl SymmetryReport {
    pub fn is_symmetric(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Lists every vector whose count differs from that of its `i <-> k` mirror.
pub fn check_symmetry(table: &DistributionTable) -> SymmetryReport {
    let keys: std::collections::BTreeSet<_> =
        table.rows.keys().flat_map(|v| [*v, v.swap_ik()]).collect();
    let violations = keys
        .into_iter()
        .filter_map(|v| {
            let count = table.count(&v);
            let mirrored = table.count(&v.swap_ik());
            (count != mirrored).then_some(SymmetryViolation {
                stats: v,
                count,
                mirrored,
            })
        })
        .collect();
    SymmetryReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn encodings(ts: &[PlaneTree]) -> Vec<String> {
        ts.iter().map(PlaneTree::encode).collect()
    }

    #[test]
    fn motzkin_small() {
        assert_eq!(motzkin(0), BigUint::from(1u32));
        assert_eq!(motzkin(3), BigUint::from(4u32));
        assert_eq!(motzkin(4), BigUint::from(9u32));
    }

    #[test]
    fn catalan_small() {
        let got: Vec<_> = (0..6).map(catalan).collect();
        let want: Vec<BigUint> = [1u32, 1, 2, 5, 14, 42]
            .into_iter()
            .map(BigUint::from)
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn plane_tree_counts() {
        assert_eq!(encodings(&gen_plane_trees(0)), vec!["()"]);
        assert_eq!(gen_plane_trees(3).len(), 5);
        assert_eq!(gen_plane_trees(4).len(), 14);
    }

    #[test]
    fn tip_augmented_small() {
        assert_eq!(encodings(&gen_tip_augmented(0)), vec!["()"]);
        assert_eq!(encodings(&gen_tip_augmented(1)), vec!["(())"]);
        assert_eq!(encodings(&gen_tip_augmented(2)), vec!["(()())"]);
        assert_eq!(
            encodings(&gen_tip_augmented(4)),
            vec!["(()(()()))", "(()(())())", "(()()(()))", "(()()()())"]
        );
        assert_eq!(gen_tip_augmented(5).len(), 9);
    }

    #[test]
    fn strategies_agree() {
        for n in 0..=9 {
            assert_eq!(
                gen_tip_augmented_with(n, Strategy::Construct),
                gen_tip_augmented_with(n, Strategy::Filter),
                "n = {n}"
            );
        }
    }

    #[test]
    fn labelled_counts() {
        let one: Vec<_> = gen_labelled_tip_augmented(1)
            .iter()
            .map(|t| t.encode())
            .collect();
        assert_eq!(one, vec!["1(2)", "2(1)"]);
        assert_eq!(gen_labelled_tip_augmented(2).len(), 6);
        assert_eq!(gen_labelled_tip_augmented(5).len(), 6480);
        assert_eq!(gen_labelled_plane_trees(3).len(), 5 * 24);
    }

    #[test]
    fn match_set_counts() {
        assert!(gen_match_sets(0).is_empty());
        assert_eq!(gen_match_sets(1).len(), 2);
        assert_eq!(gen_match_sets(2).len(), 12);
        let four = gen_match_sets(4);
        assert_eq!(four.len(), 1680);
        assert!(four
            .iter()
            .all(|f| crate::chen::validate_match_set(f).is_valid()));
        let distinct: std::collections::HashSet<_> = four.iter().collect();
        assert_eq!(distinct.len(), four.len());
    }

    #[test]
    fn tables() {
        let t2 = distribution_table(2).unwrap();
        assert_eq!(t2.rows.len(), 1);
        assert_eq!(
            t2.count(&StatsVector::new(0, 1, 0, 0, 1)),
            BigUint::from(1u32)
        );

        let t3 = distribution_table(3).unwrap();
        let keys: Vec<_> = t3.rows.keys().copied().collect();
        assert_eq!(
            keys,
            vec![
                StatsVector::new(0, 1, 0, 1, 1),
                StatsVector::new(1, 0, 1, 0, 0)
            ]
        );

        let t4 = distribution_table(4).unwrap();
        let keys: Vec<_> = t4.rows.keys().copied().collect();
        assert_eq!(
            keys,
            vec![
                StatsVector::new(0, 1, 0, 2, 1),
                StatsVector::new(0, 1, 1, 0, 1),
                StatsVector::new(1, 0, 1, 1, 0),
                StatsVector::new(1, 1, 0, 0, 1),
            ]
        );
        assert!(t4.rows.values().all(|c| *c == BigUint::from(1u32)));
        assert_eq!(distribution_table(0), Err(Error::TrivialTree));
    }

    #[test]
    fn symmetry_reports() {
        assert!(check_symmetry(&distribution_table(4).unwrap()).is_symmetric());
        assert!(check_symmetry(&distribution_table(2).unwrap()).is_symmetric());

        let mut rows = BTreeMap::new();
        rows.insert(StatsVector::new(1, 0, 0, 0, 0), BigUint::from(1u32));
        let report = check_symmetry(&DistributionTable { n: 1, rows });
        assert_eq!(report.violations.len(), 2);
        assert_eq!(report.violations[1].stats, StatsVector::new(1, 0, 0, 0, 0));
        assert_eq!(report.violations[1].mirrored, BigUint::default());
    }

    #[test]
    fn export_formats() {
        let t = distribution_table(3).unwrap();
        assert_eq!(
            t.to_csv(),
            "n,i,j,k,r,s,count\n3,0,1,0,1,1,1\n3,1,0,1,0,0,1\n"
        );
        assert_eq!(
            t.to_json_lines().lines().next().unwrap(),
            r#"{"n":3,"i":0,"j":1,"k":0,"r":1,"s":1,"count":1}"#
        );
        assert_eq!(t.to_text(), "(0,1,0,1,1) 1\n(1,0,1,0,0) 1\n");
    }
}
