//! Labelled plane trees and the text form `label[(child,child,...)]`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tree::{PlaneTree, VertexId};

/// A positive vertex label, optionally marked (written with a trailing `*`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub value: u32,
    pub marked: bool,
}

impl Label {
    pub fn plain(value: u32) -> Self {
        Label {
            value,
            marked: false,
        }
    }

    pub fn marked(value: u32) -> Self {
        Label {
            value,
            marked: true,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)?;
        if self.marked {
            f.write_str("*")?;
        }
        Ok(())
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        let label = p.label()?;
        p.finish()?;
        Ok(label)
    }
}

/// A plane tree with pairwise distinct labels on its vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabelledPlaneTree {
    shape: PlaneTree,
    labels: Vec<Label>,
}

impl LabelledPlaneTree {
    /// `labels[v]` is the label of `VertexId(v)`.
    pub fn new(shape: PlaneTree, labels: Vec<Label>) -> Result<Self> {
        assert_eq!(shape.vertex_count(), labels.len(), "one label per vertex");
        let mut seen = HashSet::with_capacity(labels.len());
        for &l in &labels {
            if l.value == 0 {
                return Err(Error::SyntaxError {
                    pos: 0,
                    msg: "labels must be positive",
                });
            }
            if !seen.insert(l) {
                return Err(Error::DuplicateLabel(l));
            }
        }
        Ok(LabelledPlaneTree { shape, labels })
    }

    /// Labels the vertices of `shape` with `1, 2, ...` in preorder.
    pub fn preorder(shape: PlaneTree) -> Self {
        let labels = (1..=shape.vertex_count() as u32)
            .map(Label::plain)
            .collect();
        LabelledPlaneTree { shape, labels }
    }

    pub fn from_subtrees<I>(root: Label, subtrees: I) -> Result<Self>
    where
        I: IntoIterator<Item = LabelledPlaneTree>,
    {
        let t = Self::from_subtrees_unchecked(root, subtrees);
        LabelledPlaneTree::new(t.shape, t.labels)
    }

    pub(crate) fn from_subtrees_unchecked<I>(root: Label, subtrees: I) -> Self
    where
        I: IntoIterator<Item = LabelledPlaneTree>,
    {
        let subtrees: Vec<_> = subtrees.into_iter().collect();
        let shape = PlaneTree::from_subtrees(subtrees.iter().map(|s| &s.shape));
        let mut labels = Vec::with_capacity(shape.vertex_count());
        labels.push(root);
        for s in subtrees {
            labels.extend(s.labels);
        }
        LabelledPlaneTree { shape, labels }
    }

    pub fn shape(&self) -> &PlaneTree {
        &self.shape
    }

    pub fn into_shape(self) -> PlaneTree {
        self.shape
    }

    pub fn label(&self, v: VertexId) -> Label {
        self.labels[v.0]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn root_label(&self) -> Label {
        self.labels[0]
    }

    pub fn edge_count(&self) -> usize {
        self.shape.edge_count()
    }

    pub fn find(&self, label: Label) -> Option<VertexId> {
        self.labels.iter().position(|&l| l == label).map(VertexId)
    }

    /// True iff the labels are exactly `1..=n+1`, all unmarked.
    pub fn has_standard_labels(&self) -> bool {
        let n1 = self.labels.len() as u32;
        self.labels
            .iter()
            .all(|l| !l.marked && (1..=n1).contains(&l.value))
    }

    pub fn encode(&self) -> String {
        let mut out = String::new();
        self.encode_into(self.shape.root(), &mut out);
        out
    }

    fn encode_into(&self, v: VertexId, out: &mut String) {
        use fmt::Write;
        let _ = write!(out, "{}", self.label(v));
        let kids = self.shape.children(v);
        if !kids.is_empty() {
            out.push('(');
            for (idx, &c) in kids.iter().enumerate() {
                if idx > 0 {
                    out.push(',');
                }
                self.encode_into(c, out);
            }
            out.push(')');
        }
    }
}

impl fmt::Debug for LabelledPlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabelledPlaneTree({})", self.encode())
    }
}

impl fmt::Display for LabelledPlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl FromStr for LabelledPlaneTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_labelled(s)
    }
}

/// Parses `ltree := label [ "(" ltree ("," ltree)* ")" ]`, `label := digits ["*"]`.
/// Leading and trailing whitespace is ignored; none is allowed inside.
pub fn parse_labelled(text: &str) -> Result<LabelledPlaneTree> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut p = Parser::new(text);
    let mut children: Vec<Vec<VertexId>> = Vec::new();
    let mut labels = Vec::new();
    p.ltree(None, &mut children, &mut labels)?;
    p.finish()?;

    LabelledPlaneTree::new(build_shape(&children, VertexId(0)), labels)
}

fn build_shape(children: &[Vec<VertexId>], v: VertexId) -> PlaneTree {
    PlaneTree::from_subtrees(children[v.0].iter().map(|&c| build_shape(children, c)))
}

pub fn serialize_labelled(t: &LabelledPlaneTree) -> String {
    t.encode()
}

pub(crate) struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    pub fn new(text: &'a str) -> Self {
        Parser { text, pos: 0 }
    }

    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    pub fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, b: u8, msg: &'static str) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(Error::SyntaxError { pos: self.pos, msg })
        }
    }

    pub fn at_end(&self) -> bool {
        self.pos == self.text.len()
    }

    pub fn finish(&self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(Error::SyntaxError {
                pos: self.pos,
                msg: "unexpected trailing input",
            })
        }
    }

    pub fn label(&mut self) -> Result<Label> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::SyntaxError {
                pos: start,
                msg: "expected a label",
            });
        }
        let value: u32 = self.text[start..self.pos]
            .parse()
            .map_err(|_| Error::SyntaxError {
                pos: start,
                msg: "label out of range",
            })?;
        if value == 0 {
            return Err(Error::SyntaxError {
                pos: start,
                msg: "labels must be positive",
            });
        }
        let marked = self.eat(b'*');
        Ok(Label { value, marked })
    }

    fn ltree(
        &mut self,
        parent: Option<VertexId>,
        children: &mut Vec<Vec<VertexId>>,
        labels: &mut Vec<Label>,
    ) -> Result<()> {
        let label = self.label()?;
        let v = VertexId(labels.len());
        labels.push(label);
        children.push(Vec::new());
        if let Some(p) = parent {
            children[p.0].push(v);
        }
        if self.eat(b'(') {
            loop {
                self.ltree(Some(v), children, labels)?;
                if self.eat(b')') {
                    break;
                }
                self.expect(b',', "expected ',' or ')'")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PSI_LEFT: &str = "10(3,1(8,5),9,7(6,2(4,12(11))))";

    #[test]
    fn root_with_two_leaves() {
        let t = parse_labelled("1(2,3)").unwrap();
        assert_eq!(t.shape().encode(), "(()())");
        assert_eq!(t.root_label(), Label::plain(1));
        assert_eq!(
            t.labels(),
            &[Label::plain(1), Label::plain(2), Label::plain(3)]
        );
    }

    #[test]
    fn eleven_edge_example_round_trips() {
        let t = parse_labelled(PSI_LEFT).unwrap();
        assert_eq!(t.edge_count(), 11);
        assert!(t.has_standard_labels());
        assert_eq!(serialize_labelled(&t), PSI_LEFT);
        assert_eq!(t.shape().encode(), "(()(()())()(()(()(()))))");
    }

    #[test]
    fn duplicate_label_rejected() {
        assert_eq!(
            parse_labelled("1(2,2)"),
            Err(Error::DuplicateLabel(Label::plain(2)))
        );
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(
            parse_labelled("1(2,"),
            Err(Error::SyntaxError { .. })
        ));
        assert!(matches!(
            parse_labelled("1()"),
            Err(Error::SyntaxError { .. })
        ));
        assert!(matches!(
            parse_labelled("1(2)3"),
            Err(Error::SyntaxError { .. })
        ));
        assert!(matches!(
            parse_labelled("0"),
            Err(Error::SyntaxError { .. })
        ));
        assert!(matches!(
            parse_labelled("1 (2)"),
            Err(Error::SyntaxError { .. })
        ));
        assert_eq!(parse_labelled(""), Err(Error::EmptyInput));
    }

    #[test]
    fn serialize_nested() {
        let t = parse_labelled("1(2,3(4))").unwrap();
        assert_eq!(t.encode(), "1(2,3(4))");
    }

    #[test]
    fn marked_labels_render_with_star() {
        let t = LabelledPlaneTree::from_subtrees(
            Label::marked(5),
            [LabelledPlaneTree::from_subtrees(Label::marked(6), []).unwrap()],
        )
        .unwrap();
        assert_eq!(t.encode(), "5*(6*)");
        assert_eq!(parse_labelled("5*(6*)").unwrap(), t);
        assert!(!t.has_standard_labels());
    }

    #[test]
    fn marked_and_unmarked_same_value_are_distinct() {
        assert!(parse_labelled("5(5*)").is_ok());
    }
}
