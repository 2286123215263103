//! Matches and the merging algorithm that assembles a set of `n` matches on
//! `{1, ..., n+1, (n+2)*, ..., (2n)*}` into a labelled plane tree on
//! `{1, ..., n+1}`, together with its inverse.
//!
//! Merging repeats, once per mark:
//!
//! 1. `T` is the tree with the smallest root among those without marks; its
//!    root is `i`.
//! 2. `j*` is the smallest marked vertex anywhere, in tree `T*`.
//! 3. If `j*` is the root of `T*`, identify `i` with `j*` (keeping `i`) and put
//!    the subtrees of `T*` to the right of those of `T` (horizontal merge).
//!    Otherwise `j*` is a leaf of `T*`; replace it by `T` (vertical merge).
//!
//! The inverse, [`decompose`], is a backtracking search that undoes merges
//! from the largest mark down, keeping only splits that the forward rule would
//! have chosen.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::labelled::{Label, LabelledPlaneTree, Parser};
use crate::node::Node;

/// A two-vertex rooted tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Match {
    pub root: Label,
    pub leaf: Label,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MatchType {
    /// Both unmarked.
    TypeI,
    /// Marked root, unmarked leaf.
    TypeII,
    /// Unmarked root, marked leaf.
    TypeIII,
    /// Both marked.
    TypeIV,
}

impl Match {
    pub fn new(root: Label, leaf: Label) -> Self {
        Match { root, leaf }
    }

    pub fn match_type(&self) -> MatchType {
        match_type(*self)
    }

    /// Root and leaf exchanged.
    pub fn flip(self) -> Self {
        flip(self)
    }
}

pub fn match_type(m: Match) -> MatchType {
    match (m.root.marked, m.leaf.marked) {
        (false, false) => MatchType::TypeI,
        (true, false) => MatchType::TypeII,
        (false, true) => MatchType::TypeIII,
        (true, true) => MatchType::TypeIV,
    }
}

pub fn flip(m: Match) -> Match {
    Match {
        root: m.leaf,
        leaf: m.root,
    }
}

impl fmt::Display for Match {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.root, self.leaf)
    }
}

impl FromStr for Match {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s.trim());
        let m = parse_match(&mut p)?;
        p.finish()?;
        Ok(m)
    }
}

fn parse_match(p: &mut Parser<'_>) -> Result<Match> {
    let root = p.label()?;
    p.expect(b':', "expected ':'")?;
    let leaf = p.label()?;
    Ok(Match { root, leaf })
}

/// A set of matches. Kept sorted, so equality is set equality and the text
/// form lists matches by ascending root.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MatchSet {
    matches: Vec<Match>,
}

impl MatchSet {
    pub fn new(mut matches: Vec<Match>) -> Self {
        matches.sort();
        MatchSet { matches }
    }

    /// Number of matches, which is the edge count of the merged tree.
    pub fn n(&self) -> usize {
        self.matches.len()
    }

    pub fn matches(&self) -> &[Match] {
        &self.matches
    }

    /// Every type IV match turned upside down.
    pub fn flip_type_iv(&self) -> MatchSet {
        MatchSet::new(
            self.matches
                .iter()
                .map(|&m| {
                    if m.match_type() == MatchType::TypeIV {
                        m.flip()
                    } else {
                        m
                    }
                })
                .collect(),
        )
    }

    pub fn census(&self) -> MatchCensus {
        let mut c = MatchCensus::default();
        for m in &self.matches {
            match m.match_type() {
                MatchType::TypeI => c.type_i += 1,
                MatchType::TypeII => c.type_ii += 1,
                MatchType::TypeIII => c.type_iii += 1,
                MatchType::TypeIV => c.type_iv += 1,
            }
        }
        c
    }
}

impl fmt::Display for MatchSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, m) in self.matches.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl FromStr for MatchSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_match_set(s)
    }
}

/// Comma-separated `root:leaf` items, e.g. `1:2,3:4,5*:6*`.
pub fn parse_match_set(text: &str) -> Result<MatchSet> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut p = Parser::new(text);
    let mut matches = vec![parse_match(&mut p)?];
    while p.eat(b',') {
        matches.push(parse_match(&mut p)?);
    }
    p.finish()?;
    Ok(MatchSet::new(matches))
}

/// Per-type match counts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MatchCensus {
    pub type_i: usize,
    pub type_ii: usize,
    pub type_iii: usize,
    pub type_iv: usize,
}

impl MatchCensus {
    pub fn as_tuple(&self) -> (usize, usize, usize, usize) {
        (self.type_i, self.type_ii, self.type_iii, self.type_iv)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Empty,
    DuplicateLabel(Label),
    /// A marked label outside `n+2..=2n`.
    OutOfRangeMark(Label),
    /// An unmarked label outside `1..=n+1`.
    OutOfRangeLabel(Label),
    MissingLabel(Label),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "no matches"),
            Violation::DuplicateLabel(l) => write!(f, "DuplicateLabel {l}"),
            Violation::OutOfRangeMark(l) => write!(f, "OutOfRangeMark {l}"),
            Violation::OutOfRangeLabel(l) => write!(f, "OutOfRangeLabel {l}"),
            Violation::MissingLabel(l) => write!(f, "MissingLabel {l}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("valid");
        }
        for (idx, v) in self.violations.iter().enumerate() {
            if idx > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks that the labels are exactly `1..=n+1` unmarked and
/// `(n+2)*..=(2n)*` marked, each used once.
pub fn validate_match_set(f: &MatchSet) -> ValidationReport {
    let n = f.n() as u32;
    let mut violations = Vec::new();
    if n == 0 {
        violations.push(Violation::Empty);
        return ValidationReport { violations };
    }
    let mut seen = BTreeSet::new();
    for l in f.matches.iter().flat_map(|m| [m.root, m.leaf]) {
        if !seen.insert(l) {
            violations.push(Violation::DuplicateLabel(l));
        } else if l.marked && !(n + 2..=2 * n).contains(&l.value) {
            violations.push(Violation::OutOfRangeMark(l));
        } else if !l.marked && !(1..=n + 1).contains(&l.value) {
            violations.push(Violation::OutOfRangeLabel(l));
        }
    }
    let expected = (1..=n + 1)
        .map(Label::plain)
        .chain((n + 2..=2 * n).map(Label::marked));
    for l in expected {
        if !seen.contains(&l) {
            violations.push(Violation::MissingLabel(l));
        }
    }
    ValidationReport { violations }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MergeKind {
    Horizontal,
    Vertical,
}

/// One step of the merging algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeStep {
    /// The consumed mark `j*`.
    pub mark: Label,
    pub kind: MergeKind,
    /// Root `i` of the unmarked tree `T`.
    pub unmarked_root: Label,
    /// Root of `T*` before the merge.
    pub marked_tree_root: Label,
    /// `T` and `T*` before the merge, in labelled text form.
    pub unmarked_tree: String,
    pub marked_tree: String,
    /// Vertex counts of `T` and `T*` before the merge. Trees only grow, so a
    /// count of 2 means the tree is still one of the original matches.
    pub unmarked_vertices: usize,
    pub marked_vertices: usize,
    /// The forest after this step, each tree in labelled text form.
    pub forest: Vec<String>,
}

pub fn merge(f: &MatchSet) -> Result<LabelledPlaneTree> {
    merge_impl(f, None)
}

pub fn merge_traced(f: &MatchSet) -> Result<(LabelledPlaneTree, Vec<MergeStep>)> {
    let mut trace = Vec::new();
    let t = merge_impl(f, Some(&mut trace))?;
    Ok((t, trace))
}

fn merge_impl(f: &MatchSet, mut trace: Option<&mut Vec<MergeStep>>) -> Result<LabelledPlaneTree> {
    let report = validate_match_set(f);
    if !report.is_valid() {
        return Err(Error::InvalidMatchSet(report.to_string()));
    }
    let mut forest: Vec<Node<Label>> = f
        .matches
        .iter()
        .map(|m| Node {
            label: m.root,
            children: vec![Node::leaf(m.leaf)],
        })
        .collect();

    while forest.len() > 1 {
        // A forest of m trees carries m - 1 marks, so some tree is mark-free.
        let t_idx = (0..forest.len())
            .filter(|&x| !forest[x].has_mark())
            .min_by_key(|&x| forest[x].label.value)
            .expect("a mark-free tree always exists");
        let mark = forest
            .iter()
            .flat_map(|t| t.labels())
            .filter(|l| l.marked)
            .min()
            .copied()
            .expect("more than one tree implies a mark");
        let star_idx = forest
            .iter()
            .position(|t| t.labels().any(|&l| l == mark))
            .unwrap();
        let marked_tree_root = forest[star_idx].label;

        let t = forest[t_idx].clone();
        let unmarked_root = t.label;
        let before = trace.is_some().then(|| {
            let star = &forest[star_idx];
            (
                t.to_labelled().encode(),
                star.to_labelled().encode(),
                t.vertex_count(),
                star.vertex_count(),
            )
        });
        let kind = if forest[star_idx].label == mark {
            let star = forest[star_idx].clone();
            forest[t_idx].children.extend(star.children);
            forest.remove(star_idx);
            MergeKind::Horizontal
        } else {
            let slot = find_leaf_mut(&mut forest[star_idx], mark)
                .expect("marked vertices are always roots or leaves");
            *slot = t;
            forest.remove(t_idx);
            MergeKind::Vertical
        };
        if let (Some(trace), Some(before)) = (trace.as_deref_mut(), before) {
            let (unmarked_tree, marked_tree, unmarked_vertices, marked_vertices) = before;
            trace.push(MergeStep {
                mark,
                kind,
                unmarked_root,
                marked_tree_root,
                unmarked_tree,
                marked_tree,
                unmarked_vertices,
                marked_vertices,
                forest: forest.iter().map(|t| t.to_labelled().encode()).collect(),
            });
        }
    }
    Ok(forest.pop().unwrap().to_labelled())
}

fn find_leaf_mut(t: &mut Node<Label>, label: Label) -> Option<&mut Node<Label>> {
    if t.label == label {
        return t.is_leaf().then_some(t);
    }
    t.children.iter_mut().find_map(|c| find_leaf_mut(c, label))
}

/// Requires labels exactly `1..=n+1`, unmarked, with `n >= 1`.
fn check_label_domain(t: &LabelledPlaneTree) -> Result<()> {
    if t.edge_count() == 0 {
        return Err(Error::TrivialTree);
    }
    if !t.has_standard_labels() {
        return Err(Error::BadLabelDomain {
            expected_max: t.edge_count() + 1,
        });
    }
    Ok(())
}

/// The unique match set that merges back to `t`.
pub fn decompose(t: &LabelledPlaneTree) -> Result<MatchSet> {
    check_label_domain(t)?;
    let mut found = Vec::new();
    search(t, false, &mut found);
    let f = found.pop().ok_or(Error::NoPreimage)?;
    debug_assert_eq!(merge(&f).as_ref(), Ok(t));
    Ok(f)
}

/// Runs the backtracking search to exhaustion and returns every match set it
/// accepts. A correct inverse yields exactly one.
pub fn decompose_all(t: &LabelledPlaneTree) -> Result<Vec<MatchSet>> {
    check_label_domain(t)?;
    let mut found = Vec::new();
    search(t, true, &mut found);
    Ok(found)
}

fn search(t: &LabelledPlaneTree, exhaustive: bool, found: &mut Vec<MatchSet>) {
    let n = t.edge_count() as u32;
    let mut forest = vec![Node::from_labelled(t)];
    undo(&mut forest, 2 * n, n + 2, exhaustive, found);
}

// Undoes the merge that consumed `mark`, for every mark from `mark` down to
// `lowest`. Returns true once a preimage has been found and the search should
// stop.
fn undo(
    forest: &mut Vec<Node<Label>>,
    mark: u32,
    lowest: u32,
    exhaustive: bool,
    found: &mut Vec<MatchSet>,
) -> bool {
    if mark < lowest {
        if forest.iter().all(|t| t.vertex_count() == 2) {
            found.push(MatchSet::new(
                forest
                    .iter()
                    .map(|t| Match {
                        root: t.label,
                        leaf: t.children[0].label,
                    })
                    .collect(),
            ));
            return !exhaustive;
        }
        return false;
    }
    let star = Label::marked(mark);
    for x in 0..forest.len() {
        for (t, t_star) in splits(&forest[x], star) {
            let root = t.label.value;
            let minimal = forest
                .iter()
                .enumerate()
                .filter(|&(y, other)| y != x && !other.has_mark())
                .all(|(_, other)| other.label.value > root)
                && (t_star.has_mark() || t_star.label.value > root);
            if !minimal {
                continue;
            }
            let saved = std::mem::replace(&mut forest[x], t_star);
            forest.push(t);
            let done = undo(forest, mark - 1, lowest, exhaustive, found);
            forest.pop();
            forest[x] = saved;
            if done {
                return true;
            }
        }
    }
    false
}

// Every way to split `x` into `(T, T*)` such that merging `T` into `T*` at
// `star` gives back `x`, with `T` mark-free.
fn splits(x: &Node<Label>, star: Label) -> Vec<(Node<Label>, Node<Label>)> {
    let mut out = Vec::new();
    // Horizontal: T keeps the root and a nonempty prefix of its children.
    if !x.label.marked {
        for cut in 1..x.children.len() {
            let t = Node {
                label: x.label,
                children: x.children[..cut].to_vec(),
            };
            if t.has_mark() {
                break;
            }
            out.push((
                t,
                Node {
                    label: star,
                    children: x.children[cut..].to_vec(),
                },
            ));
        }
    }
    // Vertical: T is a mark-free proper subtree with at least two vertices.
    let mut path = Vec::new();
    vertical(x, x, &mut path, star, &mut out);
    out
}

// Returns whether `node` is mark-free.
fn vertical(
    whole: &Node<Label>,
    node: &Node<Label>,
    path: &mut Vec<usize>,
    star: Label,
    out: &mut Vec<(Node<Label>, Node<Label>)>,
) -> bool {
    let mut clean = !node.label.marked;
    for (idx, c) in node.children.iter().enumerate() {
        path.push(idx);
        clean &= vertical(whole, c, path, star, out);
        path.pop();
    }
    if clean && !path.is_empty() && !node.is_leaf() {
        let mut t_star = whole.clone();
        let slot = path.iter().fold(&mut t_star, |n, &i| &mut n.children[i]);
        let t = std::mem::replace(slot, Node::leaf(star));
        out.push((t, t_star));
    }
    clean
}
