//! The four-class taxonomy of tip-augmented plane trees and the recursive
//! involution that exchanges singleton and elder non-twin leaves.
//!
//! Let `r` be the root, `w` its first child (always a leaf) and call a child
//! of `r` a *singleton parent* when its subtree has exactly one edge. Then
//!
//! * **B2**: some child at position 3 or later is a singleton parent; `u` is the
//!   rightmost one and `v` its leaf. `B` is `r` together with the children
//!   left of `u`.
//! * **A2**: the second child is the only singleton parent.
//! * **A1**: no singleton parents and the second child is a leaf.
//! * **B1**: no singleton parents and the second child `u` roots a subtree `A`
//!   with at least two edges.
//!
//! The involution keeps type-A trees in their class and recurses into the
//! trailing subtrees. B1 and B2 are exchanged: in B1 the children of `phi(A)`
//! are hung directly from `r`, followed by `u` carrying a single new leaf `v`,
//! and `w` disappears; B2 undoes this.

use std::fmt;

use crate::error::{Error, Result};
use crate::labelled::{Label, LabelledPlaneTree};
use crate::leaf_stats::stats_or_zero;
use crate::node::Node;
use crate::tree::{is_tip_augmented, PlaneTree, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TreeClass {
    A1,
    A2,
    B1,
    B2,
}

impl TreeClass {
    pub fn is_type_a(self) -> bool {
        matches!(self, TreeClass::A1 | TreeClass::A2)
    }
}

impl fmt::Display for TreeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TreeClass::A1 => "A1",
            TreeClass::A2 => "A2",
            TreeClass::B1 => "B1",
            TreeClass::B2 => "B2",
        })
    }
}

/// A classified tree with its named vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassView {
    pub class: TreeClass,
    pub root: VertexId,
    /// `w`.
    pub first_child: VertexId,
    pub second_child: VertexId,
    /// A2 and B1: the second child. B2: the rightmost singleton parent.
    pub u: Option<VertexId>,
    /// The singleton leaf under `u` (A2 and B2).
    pub v: Option<VertexId>,
    /// Root children that are kept (A1, A2: `w` and the second child), that
    /// root `A` (B1: the second child), or that form `B` (B2: all children
    /// left of `u`).
    pub left_block: Vec<VertexId>,
    /// Root children right of the block above (and right of `u` in B2).
    pub trailing: Vec<VertexId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    A1,
    A2,
    B1,
    B2 { u: usize },
}

// `edges[c]` is the edge count of the c-th root subtree.
fn shape_of(edges: &[usize]) -> Shape {
    let singleton_parents: Vec<usize> = (0..edges.len()).filter(|&c| edges[c] == 1).collect();
    match singleton_parents.last() {
        Some(&u) if u >= 2 => Shape::B2 { u },
        Some(_) => Shape::A2,
        None if edges[1] == 0 => Shape::A1,
        None => Shape::B1,
    }
}

fn check_domain(t: &PlaneTree) -> Result<()> {
    if !is_tip_augmented(t) {
        return Err(Error::NotTipAugmented);
    }
    if t.edge_count() < 2 {
        return Err(Error::TooSmall {
            edges: t.edge_count(),
        });
    }
    Ok(())
}

pub fn classify(t: &PlaneTree) -> Result<ClassView> {
    check_domain(t)?;
    let root = t.root();
    let kids = t.children(root);
    let edges: Vec<usize> = kids.iter().map(|&c| t.subtree_size(c) - 1).collect();
    let (w, second) = (kids[0], kids[1]);
    let view = |class, u: Option<usize>, split: usize| {
        let u_id = u.map(|p| kids[p]);
        ClassView {
            class,
            root,
            first_child: w,
            second_child: second,
            u: u_id,
            v: u_id
                .filter(|&x| t.children(x).len() == 1 && class != TreeClass::B1)
                .map(|x| t.children(x)[0]),
            left_block: kids[..split].to_vec(),
            trailing: kids[split + usize::from(class == TreeClass::B2)..].to_vec(),
        }
    };
    Ok(match shape_of(&edges) {
        Shape::A1 => view(TreeClass::A1, None, 2),
        Shape::A2 => view(TreeClass::A2, Some(1), 2),
        Shape::B1 => ClassView {
            left_block: vec![second],
            ..view(TreeClass::B1, Some(1), 2)
        },
        Shape::B2 { u } => view(TreeClass::B2, Some(u), u),
    })
}

/// Label transport used by the shared recursion. For unlabelled trees every
/// move is a no-op.
trait Carry: Clone {
    fn swap(a: &mut Self, b: &mut Self);
}

impl Carry for () {
    fn swap(_: &mut Self, _: &mut Self) {}
}

impl Carry for Label {
    fn swap(a: &mut Self, b: &mut Self) {
        std::mem::swap(a, b);
    }
}

fn phi_node<L: Carry>(t: Node<L>) -> Node<L> {
    if t.edge_count() <= 2 {
        return t;
    }
    let edges: Vec<usize> = t.children.iter().map(Node::edge_count).collect();
    let Node {
        label: root,
        mut children,
    } = t;
    match shape_of(&edges) {
        shape @ (Shape::A1 | Shape::A2) => {
            let tail = children.split_off(2);
            children.extend(tail.into_iter().map(phi_node));
            if shape == Shape::A2 {
                let (w, rest) = children.split_at_mut(1);
                L::swap(&mut w[0].label, &mut rest[0].children[0].label);
            }
            Node {
                label: root,
                children,
            }
        }
        Shape::B1 => {
            let tail = children.split_off(2);
            let u = children.pop().unwrap();
            let w = children.pop().unwrap();
            let phi_a = phi_node(Node {
                label: u.label.clone(),
                children: u.children,
            });
            debug_assert!(phi_a.children.len() >= 2);
            let mut out = phi_a.children;
            out.push(Node {
                label: u.label,
                children: vec![Node::leaf(w.label)],
            });
            out.extend(tail.into_iter().map(phi_node));
            Node {
                label: root,
                children: out,
            }
        }
        Shape::B2 { u } => {
            let tail = children.split_off(u + 1);
            let u = children.pop().unwrap();
            let v = u.children.into_iter().next().unwrap();
            let phi_b = phi_node(Node {
                label: root.clone(),
                children,
            });
            let mut out = vec![
                Node::leaf(v.label),
                Node {
                    label: u.label,
                    children: phi_b.children,
                },
            ];
            out.extend(tail.into_iter().map(phi_node));
            Node {
                label: root,
                children: out,
            }
        }
    }
}

/// The leaf-exchanging involution on tip-augmented plane trees. Trees with at
/// most two edges are fixed.
pub fn phi(t: &PlaneTree) -> Result<PlaneTree> {
    if !is_tip_augmented(t) {
        return Err(Error::NotTipAugmented);
    }
    Ok(phi_node(Node::from_plane(t)).to_plane())
}

/// `phi` on the shape, carrying each vertex's label to its image. The leaf
/// `w` removed in the B1 step hands its label to the new leaf `v` (and back
/// in B2); in A2 the labels of `w` and `v` are exchanged.
pub fn phi_with_correspondence(t: &LabelledPlaneTree) -> Result<LabelledPlaneTree> {
    if !is_tip_augmented(t.shape()) {
        return Err(Error::NotTipAugmented);
    }
    Ok(phi_node(Node::from_labelled(t)).to_labelled())
}

/// Singleton and elder non-twin counts computed two ways: directly, and from
/// the class-specific recurrence over the root's subtrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop1Report {
    pub class: TreeClass,
    /// `(i, k)` counted on the whole tree.
    pub direct: (usize, usize),
    /// `(i, k)` assembled from the parts.
    pub recurrence: (usize, usize),
}

impl Prop1Report {
    pub fn agrees(&self) -> bool {
        self.direct == self.recurrence
    }
}

pub fn check_prop1(t: &PlaneTree) -> Result<Prop1Report> {
    let view = classify(t)?;
    let ik = |s: &PlaneTree| {
        let v = stats_or_zero(s);
        (v.i, v.k)
    };
    let sum = |ids: &[VertexId]| {
        ids.iter()
            .map(|&c| ik(&t.subtree(c)))
            .fold((0, 0), |a, b| (a.0 + b.0, a.1 + b.1))
    };
    let (ti, tk) = sum(&view.trailing);
    let recurrence = match view.class {
        TreeClass::A1 => (ti, tk),
        TreeClass::A2 => (1 + ti, 1 + tk),
        TreeClass::B1 => {
            let (ai, ak) = ik(&t.subtree(view.second_child));
            (ai + ti, 1 + ak + tk)
        }
        TreeClass::B2 => {
            let (bi, bk) = ik(&PlaneTree::from_subtrees(
                view.left_block.iter().map(|&c| t.subtree(c)),
            ));
            (1 + bi + ti, bk + tk)
        }
    };
    let direct = ik(t);
    Ok(Prop1Report {
        class: view.class,
        direct,
        recurrence,
    })
}
