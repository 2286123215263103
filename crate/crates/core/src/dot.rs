//! Graphviz DOT output.
//!
//! Singleton leaves are drawn as open circles and elder non-twin leaves as
//! larger bold filled circles; every other vertex is a small filled dot.
//! Child order is kept with `ordering=out`.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::labelled::LabelledPlaneTree;
use crate::leaf_stats::{categories, LeafCategory};
use crate::tree::PlaneTree;

#[derive(Debug, Clone)]
pub struct DotStyle {
    /// Default node attributes.
    pub node: String,
    /// Per-vertex attribute overrides by leaf category.
    pub categories: BTreeMap<LeafCategory, String>,
}

impl Default for DotStyle {
    fn default() -> Self {
        let mut categories = BTreeMap::new();
        categories.insert(
            LeafCategory::Singleton,
            r#"style="solid", fillcolor="white", width=0.2"#.to_string(),
        );
        categories.insert(
            LeafCategory::ElderNonTwin,
            r#"style="filled,bold", fillcolor="black", width=0.2"#.to_string(),
        );
        DotStyle {
            node: r#"shape=circle, style=filled, fillcolor=black, width=0.12, fixedsize=true, label="""#
                .to_string(),
            categories,
        }
    }
}

impl DotStyle {
    /// No category-specific styling.
    pub fn plain() -> Self {
        DotStyle {
            categories: BTreeMap::new(),
            ..Default::default()
        }
    }
}

pub fn render_dot(t: &PlaneTree, style: &DotStyle) -> String {
    render(t, None, style)
}

/// Labels are attached with `xlabel` so the category styling stays visible.
pub fn render_dot_labelled(t: &LabelledPlaneTree, style: &DotStyle) -> String {
    render(t.shape(), Some(t), style)
}

fn render(t: &PlaneTree, labelled: Option<&LabelledPlaneTree>, style: &DotStyle) -> String {
    let cats: BTreeMap<_, _> = categories(t).collect();
    let mut out = String::new();
    out.push_str("digraph tree {\n");
    out.push_str("  ordering=out;\n");
    let _ = writeln!(out, "  node [{}];", style.node);
    out.push_str("  edge [arrowhead=none];\n");
    for v in t.vertices() {
        let mut attrs = Vec::new();
        if let Some(extra) = cats.get(&v).and_then(|c| style.categories.get(c)) {
            attrs.push(extra.clone());
        }
        if let Some(l) = labelled {
            attrs.push(format!("xlabel=\"{}\"", l.label(v)));
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  n{};", v.0);
        } else {
            let _ = writeln!(out, "  n{} [{}];", v.0, attrs.join(", "));
        }
    }
    for v in t.vertices() {
        for c in t.children(v) {
            let _ = writeln!(out, "  n{} -> n{};", v.0, c.0);
        }
    }
    out.push_str("}\n");
    out
}
