//! Owned recursive tree used by the algorithms that cut and re-graft subtrees
//! (the involutions and the match merging). The public arena types convert to
//! and from it.

use crate::labelled::{Label, LabelledPlaneTree};
use crate::tree::{PlaneTree, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Node<L> {
    pub label: L,
    pub children: Vec<Node<L>>,
}

impl<L> Node<L> {
    pub fn leaf(label: L) -> Self {
        Node {
            label,
            children: Vec::new(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.children.iter().map(Node::vertex_count).sum::<usize>()
    }

    pub fn edge_count(&self) -> usize {
        self.vertex_count() - 1
    }

    pub fn labels(&self) -> impl Iterator<Item = &L> + '_ {
        let mut stack = vec![self];
        std::iter::from_fn(move || {
            let node = stack.pop()?;
            stack.extend(node.children.iter().rev());
            Some(&node.label)
        })
    }
}

impl Node<()> {
    pub fn from_plane(t: &PlaneTree) -> Self {
        fn go(t: &PlaneTree, v: VertexId) -> Node<()> {
            Node {
                label: (),
                children: t.children(v).iter().map(|&c| go(t, c)).collect(),
            }
        }
        go(t, t.root())
    }

    pub fn to_plane(&self) -> PlaneTree {
        PlaneTree::from_subtrees(self.children.iter().map(Node::to_plane))
    }
}

impl Node<Label> {
    pub fn from_labelled(t: &LabelledPlaneTree) -> Self {
        fn go(t: &LabelledPlaneTree, v: VertexId) -> Node<Label> {
            Node {
                label: t.label(v),
                children: t.shape().children(v).iter().map(|&c| go(t, c)).collect(),
            }
        }
        go(t, t.shape().root())
    }

    /// Caller guarantees distinct labels.
    pub fn to_labelled(&self) -> LabelledPlaneTree {
        LabelledPlaneTree::from_subtrees_unchecked(
            self.label,
            self.children.iter().map(Node::to_labelled),
        )
    }

    pub fn has_mark(&self) -> bool {
        self.labels().any(|l| l.marked)
    }
}
