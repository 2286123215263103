//! Unlabelled plane trees and their balanced-parenthesis encoding.
//!
//! A tree with `n` edges is written as a word of `n + 1` matched pairs: a
//! vertex is `(` followed by the words of its children in order, then `)`.
//! Vertex identifiers are handed out in depth-first preorder, so the root is
//! always `VertexId(0)` and two trees are equal exactly when their encodings
//! are.

use std::borrow::Borrow;
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Preorder index of a vertex within its tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A rooted tree whose children are linearly ordered.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlaneTree {
    children: Vec<Vec<VertexId>>,
    parent: Vec<Option<VertexId>>,
}

impl PlaneTree {
    /// The single-vertex tree.
    pub fn singleton() -> Self {
        PlaneTree {
            children: vec![Vec::new()],
            parent: vec![None],
        }
    }

    /// A new root whose children are the roots of `subtrees`, in order.
    pub fn from_subtrees<I>(subtrees: I) -> Self
    where
        I: IntoIterator,
        I::Item: Borrow<PlaneTree>,
    {
        let mut t = PlaneTree::singleton();
        for s in subtrees {
            t.graft_on_root(s.borrow());
        }
        t
    }

    // Appends `s` as the last child of the root. Preorder numbering survives
    // because the root's last subtree is also last in preorder.
    fn graft_on_root(&mut self, s: &PlaneTree) {
        let base = self.children.len();
        let shift = |v: VertexId| VertexId(v.0 + base);
        self.children[0].push(VertexId(base));
        for (v, kids) in s.children.iter().enumerate() {
            self.children
                .push(kids.iter().copied().map(shift).collect());
            let p = match s.parent[v] {
                Some(p) => shift(p),
                None => VertexId(0),
            };
            self.parent.push(Some(p));
        }
    }

    pub fn root(&self) -> VertexId {
        VertexId(0)
    }

    pub fn vertex_count(&self) -> usize {
        self.children.len()
    }

    pub fn edge_count(&self) -> usize {
        self.vertex_count() - 1
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count()).map(VertexId)
    }

    pub fn children(&self, v: VertexId) -> &[VertexId] {
        &self.children[v.0]
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent[v.0]
    }

    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.children[v.0].is_empty()
    }

    pub fn leaves(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices().filter(|&v| self.is_leaf(v))
    }

    /// Zero-based position of `v` among its siblings; `None` for the root.
    pub fn position(&self, v: VertexId) -> Option<usize> {
        let p = self.parent(v)?;
        self.children(p).iter().position(|&c| c == v)
    }

    /// Number of vertices in the subtree rooted at `v`.
    pub fn subtree_size(&self, v: VertexId) -> usize {
        // In preorder a subtree is the id range from v to its rightmost descendant.
        let mut last = v;
        while let Some(&c) = self.children(last).last() {
            last = c;
        }
        last.0 - v.0 + 1
    }

    /// The subtree rooted at `v` as a tree of its own.
    pub fn subtree(&self, v: VertexId) -> PlaneTree {
        PlaneTree::from_subtrees(self.children(v).iter().map(|&c| self.subtree(c)))
    }

    /// The subtrees hanging from the root, left to right.
    pub fn root_subtrees(&self) -> Vec<PlaneTree> {
        self.children(self.root())
            .iter()
            .map(|&c| self.subtree(c))
            .collect()
    }

    /// Canonical balanced-parenthesis word.
    pub fn encode(&self) -> String {
        let mut out = String::with_capacity(2 * self.vertex_count());
        self.encode_into(self.root(), &mut out);
        out
    }

    fn encode_into(&self, v: VertexId, out: &mut String) {
        out.push('(');
        for &c in self.children(v) {
            self.encode_into(c, out);
        }
        out.push(')');
    }
}

impl fmt::Debug for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlaneTree({})", self.encode())
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl FromStr for PlaneTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_tree(s)
    }
}

/// Orders trees by their encodings with `(` before `)`, which is plain byte
/// order on the words.
impl Ord for PlaneTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.encode().cmp(&other.encode())
    }
}

impl PartialOrd for PlaneTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Parses a balanced-parenthesis word. Whitespace is ignored.
pub fn parse_tree(text: &str) -> Result<PlaneTree> {
    let mut children: Vec<Vec<VertexId>> = Vec::new();
    let mut parent: Vec<Option<VertexId>> = Vec::new();
    let mut stack: Vec<VertexId> = Vec::new();
    let mut closed = false;

    for (pos, ch) in text.char_indices() {
        match ch {
            '(' => {
                if closed {
                    // a second top-level tree
                    return Err(Error::UnbalancedParens { pos });
                }
                let v = VertexId(children.len());
                children.push(Vec::new());
                parent.push(stack.last().copied());
                if let Some(&p) = stack.last() {
                    children[p.0].push(v);
                }
                stack.push(v);
            }
            ')' => {
                if stack.pop().is_none() {
                    return Err(Error::UnbalancedParens { pos });
                }
                closed = stack.is_empty();
            }
            c if c.is_whitespace() => {}
            ch => return Err(Error::IllegalCharacter { ch, pos }),
        }
    }
    if children.is_empty() {
        return Err(Error::EmptyInput);
    }
    if !stack.is_empty() {
        return Err(Error::UnbalancedParens { pos: text.len() });
    }
    Ok(PlaneTree { children, parent })
}

pub fn serialize_tree(t: &PlaneTree) -> String {
    t.encode()
}

/// True iff the leftmost child of every interior vertex is a leaf.
pub fn is_tip_augmented(t: &PlaneTree) -> bool {
    t.vertices()
        .all(|v| t.children(v).first().is_none_or(|&c| t.is_leaf(c)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let t = parse_tree("()").unwrap();
        assert_eq!(t.vertex_count(), 1);
        assert_eq!(t.edge_count(), 0);
        assert!(is_tip_augmented(&t));
        assert_eq!(serialize_tree(&t), "()");
    }

    #[test]
    fn star_with_four_leaves() {
        let t = parse_tree("(()()()())").unwrap();
        assert_eq!(t.children(t.root()).len(), 4);
        assert!(t.children(t.root()).iter().all(|&c| t.is_leaf(c)));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_tree("(()"), Err(Error::UnbalancedParens { pos: 3 }));
        assert_eq!(parse_tree("())"), Err(Error::UnbalancedParens { pos: 2 }));
        assert_eq!(parse_tree("()()"), Err(Error::UnbalancedParens { pos: 2 }));
        assert_eq!(parse_tree(""), Err(Error::EmptyInput));
        assert_eq!(parse_tree("  "), Err(Error::EmptyInput));
        assert_eq!(
            parse_tree("(x)"),
            Err(Error::IllegalCharacter { ch: 'x', pos: 1 })
        );
    }

    #[test]
    fn whitespace_is_insignificant() {
        let t = parse_tree(" ( ()\n(()) ) ").unwrap();
        assert_eq!(t.encode(), "(()(()))");
    }

    #[test]
    fn serialize_by_grammar() {
        let u = PlaneTree::from_subtrees([PlaneTree::singleton(), PlaneTree::singleton()]);
        let t = PlaneTree::from_subtrees([PlaneTree::singleton(), u]);
        assert_eq!(serialize_tree(&t), "(()(()()))");
    }

    #[test]
    fn preorder_ids() {
        let t = parse_tree("(()(()())())").unwrap();
        assert_eq!(
            t.children(VertexId(0)),
            &[VertexId(1), VertexId(2), VertexId(5)]
        );
        assert_eq!(t.children(VertexId(2)), &[VertexId(3), VertexId(4)]);
        assert_eq!(t.parent(VertexId(4)), Some(VertexId(2)));
        assert_eq!(t.position(VertexId(5)), Some(2));
        assert_eq!(t.position(VertexId(0)), None);
        assert_eq!(t.subtree_size(VertexId(2)), 3);
        assert_eq!(t.subtree_size(VertexId(0)), 6);
        assert_eq!(t.subtree(VertexId(2)).encode(), "(()())");
    }

    #[test]
    fn tip_augmented_examples() {
        assert!(is_tip_augmented(&parse_tree("(()())").unwrap()));
        assert!(!is_tip_augmented(&parse_tree("((())())").unwrap()));
        assert!(is_tip_augmented(&parse_tree("(()(())())").unwrap()));
        assert!(is_tip_augmented(&parse_tree("(())").unwrap()));
    }

    #[test]
    fn ordering_is_lexicographic_on_words() {
        let a = parse_tree("(()(()))").unwrap();
        let b = parse_tree("(()()())").unwrap();
        assert!(a < b);
    }
}
