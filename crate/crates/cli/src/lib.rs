//! The `tiptree` command line.
//!
//! [`run_cli`] takes the full argument vector (program name first) and returns
//! the exit code with everything that would have gone to stdout and stderr, so
//! the binary is a thin shell around it.
//!
//! Exit codes: 0 on success, 1 on a domain error (a malformed or unsuitable
//! tree, an invalid match set, a failed check), 2 on a usage error.

use std::fmt::Write as _;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tiptree_core::chen::{MergeKind, MergeStep};
use tiptree_core::psi::type_iv_diagnostics;
use tiptree_core::{
    check_symmetry, classify, decompose, distribution_table, gen_labelled_plane_trees,
    gen_labelled_tip_augmented, gen_plane_trees, gen_tip_augmented, merge_traced, parse_labelled,
    parse_match_set, parse_tree, phi, phi_with_correspondence, psi, render_dot,
    render_dot_labelled, stats, validate_match_set, verify, DotStyle, LabelledPlaneTree, MatchSet,
    PlaneTree, StatsVector,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "tiptree",
    version,
    about = "Tip-augmented plane trees and their involutions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every tree with the given number of edges.
    Enumerate {
        #[arg(long)]
        edges: usize,
        /// Only trees whose interior vertices all have a leaf as first child.
        #[arg(long)]
        tip_augmented: bool,
        /// Every labelling by 1..=n+1 of every shape.
        #[arg(long)]
        labelled: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Leaf statistics (i,j,k,r,s) of a tree.
    Stats(TreeArgs),
    /// The class (A1, A2, B1, B2) of a tip-augmented tree.
    Classify(TreeArgs),
    /// Apply the unlabelled involution (labels are carried along if given).
    Phi(TraceTreeArgs),
    /// Apply the labelled involution.
    Psi(TraceTreeArgs),
    /// Decompose a labelled tree into its match set.
    Decompose(TraceTreeArgs),
    /// Merge a match set into a labelled tree.
    Merge {
        /// Match set such as `1:2,3:4,5*:6*`, or `-` for stdin.
        #[arg(long)]
        matches: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        trace: bool,
    },
    /// Distribution of statistics vectors over all tip-augmented trees.
    Table {
        #[arg(long)]
        edges: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Exit 1 if the table is not symmetric under i <-> k.
        #[arg(long)]
        check_symmetry: bool,
    },
    /// Run the exhaustive invariant suites.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_edges: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Graphviz DOT for a tree.
    Render(TreeArgs),
}

#[derive(Debug, Args)]
struct TreeArgs {
    /// Parenthesis word such as `(()(()))`, labelled tree such as `1(2,3(4))`,
    /// or `-` for stdin.
    #[arg(long)]
    tree: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct TraceTreeArgs {
    #[command(flatten)]
    tree: TreeArgs,
    #[arg(long)]
    trace: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<tiptree_core::Error> for Failure {
    fn from(e: tiptree_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<Output, Failure>;

#[derive(Default)]
struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

enum TreeInput {
    Plain(PlaneTree),
    Labelled(LabelledPlaneTree),
}

impl TreeInput {
    fn shape(&self) -> &PlaneTree {
        match self {
            TreeInput::Plain(t) => t,
            TreeInput::Labelled(t) => t.shape(),
        }
    }
}

/// Runs one invocation with the process's stdin.
pub fn run_cli<I, S>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run_cli_with_stdin(argv, &mut std::io::stdin())
}

/// Runs one invocation; `-` arguments are read from `stdin`.
pub fn run_cli_with_stdin<I, S>(argv: I, stdin: &mut dyn Read) -> (i32, String, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                (EXIT_USAGE, String::new(), newline(text))
            } else {
                (EXIT_OK, newline(text), String::new())
            };
        }
    };
    let out = match dispatch(cli.command, stdin) {
        Ok(out) => out,
        Err(Failure::Usage(msg)) => Output {
            code: EXIT_USAGE,
            stderr: format!("error: {msg}"),
            ..Default::default()
        },
        Err(Failure::Domain(msg)) => Output {
            code: EXIT_DOMAIN,
            stderr: format!("error: {msg}"),
            ..Default::default()
        },
    };
    (out.code, newline(out.stdout), newline(out.stderr))
}

fn newline(mut s: String) -> String {
    if !s.is_empty() && !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn dispatch(cmd: Command, stdin: &mut dyn Read) -> Outcome {
    match cmd {
        Command::Enumerate {
            edges,
            tip_augmented,
            labelled,
            format,
        } => enumerate(edges, tip_augmented, labelled, format),
        Command::Stats(a) => stats_cmd(&read_tree(&a.tree, stdin)?, a.format),
        Command::Classify(a) => classify_cmd(&read_tree(&a.tree, stdin)?, a.format),
        Command::Phi(a) => phi_cmd(&read_tree(&a.tree.tree, stdin)?, a.tree.format, a.trace),
        Command::Psi(a) => psi_cmd(&read_labelled(&a.tree.tree, stdin)?, a.tree.format, a.trace),
        Command::Decompose(a) => {
            decompose_cmd(&read_labelled(&a.tree.tree, stdin)?, a.tree.format, a.trace)
        }
        Command::Merge {
            matches,
            format,
            trace,
        } => {
            let text = read_arg(&matches, stdin)?;
            merge_cmd(&parse_match_set(&text)?, format, trace)
        }
        Command::Table {
            edges,
            format,
            check_symmetry,
        } => table(edges, format, check_symmetry),
        Command::Verify { max_edges, format } => verify_cmd(max_edges, format),
        Command::Render(a) => render(&read_tree(&a.tree, stdin)?, a.format),
    }
}

fn read_arg(arg: &str, stdin: &mut dyn Read) -> Result<String, Failure> {
    if arg != "-" {
        return Ok(arg.to_string());
    }
    let mut text = String::new();
    stdin
        .read_to_string(&mut text)
        .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
    Ok(text.trim().to_string())
}

/// A leading `(` means a parenthesis word; anything else is a labelled tree.
fn read_tree(arg: &str, stdin: &mut dyn Read) -> Result<TreeInput, Failure> {
    let text = read_arg(arg, stdin)?;
    if text.trim_start().starts_with('(') {
        Ok(TreeInput::Plain(parse_tree(&text)?))
    } else {
        Ok(TreeInput::Labelled(parse_labelled(&text)?))
    }
}

fn read_labelled(arg: &str, stdin: &mut dyn Read) -> Result<LabelledPlaneTree, Failure> {
    match read_tree(arg, stdin)? {
        TreeInput::Labelled(t) => Ok(t),
        TreeInput::Plain(_) => Err(Failure::Domain(
            "this command needs a labelled tree such as 1(2,3(4))".into(),
        )),
    }
}

fn unsupported(format: Format, allowed: &[Format]) -> Result<(), Failure> {
    if allowed.contains(&format) {
        return Ok(());
    }
    let names: Vec<_> = allowed.iter().map(|f| format_name(*f)).collect();
    Err(Failure::Usage(format!(
        "--format {} is not available here (use {})",
        format_name(format),
        names.join(", ")
    )))
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Text => "text",
        Format::Json => "json",
        Format::Csv => "csv",
        Format::Dot => "dot",
    }
}

fn enumerate(n: usize, tip: bool, labelled: bool, format: Format) -> Outcome {
    unsupported(format, &[Format::Text, Format::Json, Format::Csv])?;
    let words: Vec<String> = match (tip, labelled) {
        (true, false) => gen_tip_augmented(n).iter().map(PlaneTree::encode).collect(),
        (false, false) => gen_plane_trees(n).iter().map(PlaneTree::encode).collect(),
        (true, true) => gen_labelled_tip_augmented(n)
            .iter()
            .map(LabelledPlaneTree::encode)
            .collect(),
        (false, true) => gen_labelled_plane_trees(n)
            .iter()
            .map(LabelledPlaneTree::encode)
            .collect(),
    };
    let out = match format {
        Format::Json => json!(words).to_string(),
        Format::Csv => std::iter::once("tree".to_string())
            .chain(words)
            .collect::<Vec<_>>()
            .join("\n"),
        _ => words.join("\n"),
    };
    Ok(Output::ok(out))
}

fn stats_json(v: &StatsVector) -> Value {
    json!({"i": v.i, "j": v.j, "k": v.k, "r": v.r, "s": v.s})
}

fn stats_cmd(t: &TreeInput, format: Format) -> Outcome {
    unsupported(format, &[Format::Text, Format::Json, Format::Csv])?;
    let v = stats(t.shape())?;
    let out = match format {
        Format::Json => stats_json(&v).to_string(),
        Format::Csv => format!("i,j,k,r,s\n{},{},{},{},{}", v.i, v.j, v.k, v.r, v.s),
        _ => format!("{v}"),
    };
    Ok(Output::ok(out))
}

fn classify_cmd(t: &TreeInput, format: Format) -> Outcome {
    unsupported(format, &[Format::Text, Format::Json])?;
    let class = classify(t.shape())?.class;
    Ok(Output::ok(match format {
        Format::Json => json!({"class": class.to_string()}).to_string(),
        _ => class.to_string(),
    }))
}

fn phi_cmd(t: &TreeInput, format: Format, trace: bool) -> Outcome {
    unsupported(format, &[Format::Text, Format::Json, Format::Dot])?;
    let (input, image, image_shape) = match t {
        TreeInput::Plain(p) => {
            let img = phi(p)?;
            (p.encode(), img.encode(), img)
        }
        TreeInput::Labelled(l) => {
            let img = phi_with_correspondence(l)?;
            (l.encode(), img.encode(), img.shape().clone())
        }
    };
    if format == Format::Dot {
        return Ok(Output::ok(match t {
            TreeInput::Plain(_) => render_dot(&image_shape, &DotStyle::default()),
            TreeInput::Labelled(l) => {
                render_dot_labelled(&phi_with_correspondence(l)?, &DotStyle::default())
            }
        }));
    }
    // Trees with fewer than two edges are fixed and have no class.
    let class = classify(t.shape()).ok().map(|c| c.class.to_string());
    let before = stats(t.shape()).ok();
    let after = stats(&image_shape).ok();
    if format == Format::Json {
        let mut v = json!({"input": input, "output": image});
        if trace {
            v["class"] = json!(class);
            v["stats_before"] = before.as_ref().map(stats_json).into();
            v["stats_after"] = after.as_ref().map(stats_json).into();
        }
        return Ok(Output::ok(v.to_string()));
    }
    let mut out = String::new();
    if trace {
        let _ = writeln!(out, "class: {}", class.as_deref().unwrap_or("-"));
        if let (Some(b), Some(a)) = (before, after) {
            let _ = writeln!(out, "stats: {b} -> {a}");
        }
    }
    out.push_str(&image);
    Ok(Output::ok(out))
}

fn psi_cmd(t: &LabelledPlaneTree, format: Format, trace: bool) -> Outcome {
    unsupported(format, &[Format::Text, Format::Json, Format::Dot])?;
    let image = psi(t)?;
    if format == Format::Dot {
        return Ok(Output::ok(render_dot_labelled(
            &image,
            &DotStyle::default(),
        )));
    }
    let before = stats(t.shape()).ok();
    let after = stats(image.shape()).ok();
    let (forest, flipped) = if t.edge_count() > 0 {
        let f = decompose(t)?;
        let g = f.flip_type_iv();
        (Some(f), Some(g))
    } else {
        (None, None)
    };
    if format == Format::Json {
        let mut v = json!({"input": t.encode(), "output": image.encode()});
        if trace {
            v["matches"] = forest.as_ref().map(MatchSet::to_string).into();
            v["flipped"] = flipped.as_ref().map(MatchSet::to_string).into();
            v["stats_before"] = before.as_ref().map(stats_json).into();
            v["stats_after"] = after.as_ref().map(stats_json).into();
        }
        return Ok(Output::ok(v.to_string()));
    }
    let mut out = String::new();
    if trace {
        if let (Some(f), Some(g)) = (&forest, &flipped) {
            let _ = writeln!(out, "matches: {f}");
            let _ = writeln!(out, "flipped: {g}");
            let (_, steps) = merge_traced(g)?;
            write_steps(&mut out, &steps);
        }
        if let (Some(b), Some(a)) = (before, after) {
            let _ = writeln!(out, "stats: {b} -> {a}");
        }
    }
    out.push_str(&image.encode());
    Ok(Output::ok(out))
}

fn write_steps(out: &mut String, steps: &[MergeStep]) {
    for s in steps {
        let kind = match s.kind {
            MergeKind::Horizontal => "horizontal",
            MergeKind::Vertical => "vertical",
        };
        let _ = writeln!(
            out,
            "{}: {kind} {} into {} -> {}",
            s.mark,
            s.unmarked_tree,
            s.marked_tree,
            s.forest.join(" ")
        );
    }
}

fn steps_json(steps: &[MergeStep]) -> Value {
    steps
        .iter()
        .map(|s| {
            json!({
                "mark": s.mark.to_string(),
                "kind": if s.kind == MergeKind::Horizontal { "horizontal" } else { "vertical" },
                "unmarked_tree": s.unmarked_tree,
                "marked_tree": s.marked_tree,
                "forest": s.forest,
            })
        })
        .collect()
}

fn census_json(f: &MatchSet) -> Value {
    let c = f.census();
    json!({"I": c.type_i, "II": c.type_ii, "III": c.type_iii, "IV": c.type_iv})
}

fn decompose_cmd(t: &LabelledPlaneTree, format: Format, trace: bool) -> Outcome {
    unsupported(format, &[Format::Text, Format::Json])?;
    let f = decompose(t)?;
    let steps = if trace {
        merge_traced(&f)?.1
    } else {
        Vec::new()
    };
    let diag = if trace {
        type_iv_diagnostics(t).ok()
    } else {
        None
    };
    if format == Format::Json {
        let mut v =
            json!({"tree": t.encode(), "matches": f.to_string(), "census": census_json(&f)});
        if trace {
            v["steps"] = steps_json(&steps);
            if let Some(d) = diag {
                v["type_iv"] = json!({
                    "ascending": d.ascending,
                    "descending": d.descending,
                    "horizontal_i_into_iv": d.horizontal_i_into_iv,
                    "vertical_i_into_iv": d.vertical_i_into_iv,
                });
            }
        }
        return Ok(Output::ok(v.to_string()));
    }
    let mut out = String::new();
    if trace {
        let c = f.census();
        let _ = writeln!(
            out,
            "census: I={} II={} III={} IV={}",
            c.type_i, c.type_ii, c.type_iii, c.type_iv
        );
        if let Some(d) = diag {
            let _ = writeln!(
                out,
                "type IV: ascending={} descending={} horizontal I->IV={} vertical I->IV={}",
                d.ascending, d.descending, d.horizontal_i_into_iv, d.vertical_i_into_iv
            );
        }
        write_steps(&mut out, &steps);
    }
    out.push_str(&f.to_string());
    Ok(Output::ok(out))
}

fn merge_cmd(f: &MatchSet, format: Format, trace: bool) -> Outcome {
    unsupported(format, &[Format::Text, Format::Json, Format::Dot])?;
    let report = validate_match_set(f);
    if !report.is_valid() {
        return Err(Failure::Domain(format!("invalid match set: {report}")));
    }
    let (t, steps) = merge_traced(f)?;
    let out = match format {
        Format::Dot => render_dot_labelled(&t, &DotStyle::default()),
        Format::Json => {
            let mut v = json!({"matches": f.to_string(), "tree": t.encode()});
            if trace {
                v["steps"] = steps_json(&steps);
            }
            v.to_string()
        }
        _ => {
            let mut out = String::new();
            if trace {
                write_steps(&mut out, &steps);
            }
            out.push_str(&t.encode());
            out
        }
    };
    Ok(Output::ok(out))
}

fn table(n: usize, format: Format, check: bool) -> Outcome {
    unsupported(format, &[Format::Text, Format::Json, Format::Csv])?;
    let table = distribution_table(n)?;
    let mut out = Output::ok(match format {
        Format::Json => table.to_json_lines(),
        Format::Csv => table.to_csv(),
        _ => table.to_text(),
    });
    if check {
        let report = check_symmetry(&table);
        if !report.is_symmetric() {
            out.code = EXIT_DOMAIN;
            for v in &report.violations {
                let _ = writeln!(
                    out.stderr,
                    "asymmetric: {} has {} trees, its i<->k mirror has {}",
                    v.stats, v.count, v.mirrored
                );
            }
        }
    }
    Ok(out)
}

fn verify_cmd(max_edges: usize, format: Format) -> Outcome {
    unsupported(format, &[Format::Text, Format::Json])?;
    let results = verify::run_all(max_edges);
    let all_passed = results.iter().all(|r| r.passed());
    let mut out = String::new();
    match format {
        Format::Json => {
            for r in &results {
                let _ = writeln!(
                    out,
                    "{}",
                    json!({
                        "suite": r.name,
                        "max_edges": r.max_edges,
                        "cases": r.cases,
                        "failures": r.failure_count,
                        "examples": r.failures,
                        "passed": r.passed(),
                    })
                );
            }
        }
        _ => {
            for r in &results {
                let _ = writeln!(out, "{r}");
                for f in &r.failures {
                    let _ = writeln!(out, "    {f}");
                }
            }
            let _ = writeln!(
                out,
                "{}",
                if all_passed {
                    "all suites passed"
                } else {
                    "some suites FAILED"
                }
            );
        }
    }
    let mut res = Output::ok(out);
    if !all_passed {
        res.code = EXIT_DOMAIN;
    }
    Ok(res)
}

fn render(t: &TreeInput, format: Format) -> Outcome {
    unsupported(format, &[Format::Text, Format::Dot])?;
    let style = DotStyle::default();
    Ok(Output::ok(match t {
        TreeInput::Plain(p) => render_dot(p, &style),
        TreeInput::Labelled(l) => render_dot_labelled(l, &style),
    }))
}
