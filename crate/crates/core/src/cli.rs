//! The `dualgraded` command line.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use crate::graphs::{
    check_duality, export, make_graph, path_count_identity, AnyGraph, CompositionGraph, DualityReport, ExportFormat,
    GraphError, TreeGraph,
};
use crate::growth::{
    build_growth_diagram, chain_to_bst, chain_to_increasing_tree, chain_to_quasi_ribbon, chain_to_ribbon,
    CompositionPair, DualPair, GrowthError, GrowthGrid, GrowthReport, TreePair,
};
use crate::perm::{parse_permutation, Permutation};
use crate::ribbon::{hypoplactic_insert, shadow_lines};
use crate::trees::{bst_insert, LabeledBinaryTree, Reading};

/// Largest `n` accepted by the exhaustive verifications.
pub const MAX_VERIFY_N: usize = 10;

#[derive(Parser, Debug)]
#[command(name = "dualgraded", version, about = "Insertion algorithms, dual graded graphs and growth diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Insert a permutation and print the pair (P, Q).
    Insert {
        algorithm: Algorithm,
        /// One-line notation: `415362` or `4,1,5,3,6,2`.
        permutation: String,
        #[arg(long, value_enum, default_value_t = TextFormat::Ascii)]
        format: TextFormat,
        #[command(flatten)]
        out: OutArg,
    },
    /// Build a growth diagram and read (P, Q) off its boundaries.
    Growth {
        #[arg(value_enum)]
        family: FamilyArg,
        permutation: String,
        /// Also run the direct insertion and report MATCH or MISMATCH.
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t = TextFormat::Ascii)]
        format: TextFormat,
        #[command(flatten)]
        out: OutArg,
    },
    /// Export the ranks of a graded graph.
    Graph {
        /// lifted-binary-tree, binword, tree-lattice or reflected-bracket-tree
        name: String,
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        #[command(flatten)]
        out: OutArg,
    },
    /// Run one of the verifications; exits 1 on any failure.
    Verify {
        #[command(subcommand)]
        mode: VerifyMode,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyMode {
    /// Check DU - UD = rI rank by rank.
    Duality {
        #[arg(long, value_enum, default_value_t = PairArg::Compositions)]
        pair: PairArg,
        /// Graph supplying U; overrides --pair together with --down.
        #[arg(long, requires = "down")]
        up: Option<String>,
        /// Graph supplying D.
        #[arg(long, requires = "up")]
        down: Option<String>,
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        /// Expected value of r at every rank.
        #[arg(long, default_value_t = 1)]
        r: i64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Compare growth diagrams with direct insertion over all of S_n.
    Equivalence {
        #[arg(long, value_enum, default_value_t = FamilyChoice::Both)]
        family: FamilyChoice,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Compare the shadow-line construction with hypoplactic insertion.
    Shadow {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Check that the chain counts of a dual pair satisfy sum e1*e2 = n!.
    Paths {
        #[arg(long, value_enum, default_value_t = PairArg::Compositions)]
        pair: PairArg,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Args, Debug)]
struct OutArg {
    /// Write output to this file instead of stdout.
    #[arg(long = "out", value_name = "FILE")]
    path: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Algorithm {
    Hypoplactic,
    BstLeft,
    BstRight,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TextFormat {
    Ascii,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FamilyArg {
    Composition,
    Tree,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FamilyChoice {
    Composition,
    Tree,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum PairArg {
    Compositions,
    Trees,
}

/// Outcome of a command: text for the output stream and an exit code.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }

    fn verdict(text: String, passed: bool) -> Self {
        Outcome { text, code: if passed { 0 } else { 1 } }
    }
}

/// Failure before any output is produced.
struct Failure {
    message: String,
    code: i32,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure { message: message.to_string(), code: 2 }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::usage(e)
    }
}

impl From<GrowthError> for Failure {
    fn from(e: GrowthError) -> Self {
        Failure { message: format!("internal invariant breach: {e}"), code: 1 }
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` (or the `--out` file) and diagnostics to `err`.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let (result, path) = match cli.command {
        Command::Insert { algorithm, permutation, format, out } => {
            (cmd_insert(algorithm, &permutation, format), out.path)
        }
        Command::Growth { family, permutation, check, format, out } => {
            (cmd_growth(family, &permutation, check, format), out.path)
        }
        Command::Graph { name, max_rank, format, out } => (cmd_graph(&name, max_rank, format), out.path),
        Command::Verify { mode } => match mode {
            VerifyMode::Duality { pair, up, down, max_rank, r, out } => {
                (verify_duality(pair, up.zip(down), max_rank, r), out.path)
            }
            VerifyMode::Equivalence { family, max_n, out } => (verify_equivalence(family, max_n), out.path),
            VerifyMode::Shadow { max_n, out } => (verify_shadow(max_n), out.path),
            VerifyMode::Paths { pair, n, out } => (verify_paths(pair, n), out.path),
        },
    };
    match result {
        Ok(outcome) => {
            let written = match path {
                Some(p) => std::fs::write(&p, &outcome.text).map_err(|e| format!("cannot write {}: {e}", p.display())),
                None => out.write_all(outcome.text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => outcome.code,
                Err(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                    2
                }
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn parse(text: &str) -> Result<Permutation, Failure> {
    parse_permutation(text).map_err(|e| Failure::usage(format!("invalid permutation `{text}`: {e}")))
}

fn word_json(p: &Permutation) -> serde_json::Value {
    json!(p.word())
}

fn cmd_insert(algorithm: Algorithm, text: &str, format: TextFormat) -> Result<Outcome, Failure> {
    let p = parse(text)?;
    let mut s = String::new();
    match algorithm {
        Algorithm::Hypoplactic => {
            let (big_p, big_q) = hypoplactic_insert(&p);
            match format {
                TextFormat::Ascii => {
                    writeln!(s, "P = {big_p}").unwrap();
                    writeln!(s, "Q = {big_q}").unwrap();
                    write!(s, "\nP\n{}\nQ\n{}", big_p.render_ascii(), big_q.render_ascii()).unwrap();
                }
                TextFormat::Json => {
                    let v = json!({"algorithm": "hypoplactic", "permutation": word_json(&p), "P": big_p, "Q": big_q});
                    s = pretty(&v);
                }
            }
        }
        Algorithm::BstLeft | Algorithm::BstRight => {
            let (reading, name) = match algorithm {
                Algorithm::BstLeft => (Reading::LeftToRight, "bst-left"),
                _ => (Reading::RightToLeft, "bst-right"),
            };
            let (big_p, big_q) = bst_insert(&p, reading);
            match format {
                TextFormat::Ascii => {
                    writeln!(s, "P = {big_p}").unwrap();
                    writeln!(s, "Q = {big_q}").unwrap();
                    write!(s, "\nP\n{}\nQ\n{}", render_sideways(&big_p), render_sideways(&big_q)).unwrap();
                }
                TextFormat::Json => {
                    let v = json!({"algorithm": name, "permutation": word_json(&p), "P": big_p, "Q": big_q});
                    s = pretty(&v);
                }
            }
        }
    }
    Ok(Outcome::ok(s))
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

/// The tree turned a quarter left: right subtrees above, one indent step
/// per level. The empty tree prints as `-`.
pub fn render_sideways(t: &LabeledBinaryTree) -> String {
    fn go(t: &LabeledBinaryTree, depth: usize, out: &mut String) {
        if let LabeledBinaryTree::Node { label, left, right } = t {
            go(right, depth + 1, out);
            writeln!(out, "{}{label}", "  ".repeat(depth)).unwrap();
            go(left, depth + 1, out);
        }
    }
    let mut out = String::new();
    go(t, 0, &mut out);
    if out.is_empty() {
        out.push_str("-\n");
    }
    out
}

fn chain_text<V: std::fmt::Display>(chain: &[V]) -> String {
    chain.iter().map(V::to_string).collect::<Vec<_>>().join(" ")
}

fn cmd_growth(family: FamilyArg, text: &str, check: bool, format: TextFormat) -> Result<Outcome, Failure> {
    let p = parse(text)?;
    match family {
        FamilyArg::Composition => {
            let grid = build_growth_diagram::<CompositionPair>(&p)?;
            let chains = grid.boundary_chains();
            let big_p = chain_to_quasi_ribbon(&chains.right)?;
            let big_q = chain_to_ribbon(&chains.top)?;
            let matches = check.then(|| hypoplactic_insert(&p) == (big_p.clone(), big_q.clone()));
            let tableaux =
                format!("P = {big_p}\nQ = {big_q}\n\nP\n{}\nQ\n{}", big_p.render_ascii(), big_q.render_ascii());
            growth_output::<CompositionPair, _, _>(grid, big_p, big_q, &tableaux, matches, format)
        }
        FamilyArg::Tree => {
            let grid = build_growth_diagram::<TreePair>(&p)?;
            let chains = grid.boundary_chains();
            let big_p = chain_to_bst(&chains.right)?;
            let big_q = chain_to_increasing_tree(&chains.top)?;
            let matches = check.then(|| bst_insert(&p, Reading::LeftToRight) == (big_p.clone(), big_q.clone()));
            let trees =
                format!("P = {big_p}\nQ = {big_q}\n\nP\n{}\nQ\n{}", render_sideways(&big_p), render_sideways(&big_q));
            growth_output::<TreePair, _, _>(grid, big_p, big_q, &trees, matches, format)
        }
    }
}

fn growth_output<F, P, Q>(
    grid: GrowthGrid<F::V>,
    big_p: P,
    big_q: Q,
    pair_text: &str,
    matches: Option<bool>,
    format: TextFormat,
) -> Result<Outcome, Failure>
where
    F: DualPair,
    P: serde::Serialize,
    Q: serde::Serialize,
{
    let chains = grid.boundary_chains();
    let verdict = matches.map(|m| if m { "MATCH" } else { "MISMATCH" });
    let text = match format {
        TextFormat::Ascii => {
            let mut s = format!("{} growth diagram, n = {}\n\n{}\n", F::FAMILY, grid.n, grid.render_ascii());
            writeln!(s, "top chain:   {}", chain_text(&chains.top)).unwrap();
            writeln!(s, "right chain: {}\n", chain_text(&chains.right)).unwrap();
            s.push_str(pair_text);
            if let Some(v) = verdict {
                writeln!(s, "\n{v}").unwrap();
            }
            s
        }
        TextFormat::Json => {
            let report = GrowthReport::new::<F>(grid, big_p, big_q);
            let mut v = serde_json::to_value(&report).expect("report serializes");
            v["top"] = json!(chains.top);
            v["right"] = json!(chains.right);
            if let Some(verdict) = verdict {
                v["check"] = json!(verdict);
            }
            pretty(&v)
        }
    };
    Ok(Outcome::verdict(text, matches != Some(false)))
}

fn cmd_graph(name: &str, max_rank: usize, format: GraphFormat) -> Result<Outcome, Failure> {
    let format = match format {
        GraphFormat::Dot => ExportFormat::Dot,
        GraphFormat::Json => ExportFormat::Json,
    };
    let text = match make_graph(name)? {
        AnyGraph::Compositions(g) => export(&g, max_rank, format)?,
        AnyGraph::Trees(g) => export(&g, max_rank, format)?,
    };
    Ok(Outcome::ok(text))
}

fn duality_text(report: &DualityReport) -> String {
    let mut s = format!("duality {} up to rank {}\n", report.pair, report.max_rank);
    for v in &report.ranks {
        write!(s, "rank {}: {} vertices, r = {}: ", v.rank, v.vertices, v.r).unwrap();
        match &v.counterexample {
            None => s.push_str("PASS\n"),
            Some(c) => {
                writeln!(s, "FAIL at ({}, {}): expected {}, got {}", c.row, c.col, c.expected, c.actual).unwrap()
            }
        }
    }
    s.push_str(if report.is_dual() { "all ranks PASS\n" } else { "FAIL\n" });
    s
}

fn verify_duality(
    pair: PairArg,
    custom: Option<(String, String)>,
    max_rank: usize,
    r: i64,
) -> Result<Outcome, Failure> {
    let report = match custom {
        Some((up, down)) => match (make_graph(&up)?, make_graph(&down)?) {
            (AnyGraph::Compositions(a), AnyGraph::Compositions(b)) => check_duality(&a, &b, max_rank, |_| r)?,
            (AnyGraph::Trees(a), AnyGraph::Trees(b)) => check_duality(&a, &b, max_rank, |_| r)?,
            _ => return Err(Failure::usage(format!("{up} and {down} have different vertex sets"))),
        },
        None => match pair {
            PairArg::Compositions => {
                check_duality(&CompositionGraph::lifted_binary_tree(), &CompositionGraph::binword(), max_rank, |_| r)?
            }
            PairArg::Trees => {
                check_duality(&TreeGraph::lattice(), &TreeGraph::reflected_bracket_tree(), max_rank, |_| r)?
            }
        },
    };
    Ok(Outcome::verdict(duality_text(&report), report.is_dual()))
}

fn guard_n(max_n: usize) -> Result<(), Failure> {
    if max_n > MAX_VERIFY_N {
        return Err(Failure::usage(format!("n = {max_n} exceeds the limit {MAX_VERIFY_N}")));
    }
    Ok(())
}

/// Runs `mismatch` on every permutation of each `n <= max_n` in parallel,
/// reporting per-`n` counts and the smallest failing permutation.
fn exhaustive(label: &str, max_n: usize, mismatch: impl Fn(&Permutation) -> Option<String> + Sync) -> (String, bool) {
    let mut s = String::new();
    let mut total = 0;
    let mut passed = true;
    for n in 0..=max_n {
        let perms = Permutation::all(n);
        let mut failures: Vec<(Permutation, String)> =
            perms.par_iter().filter_map(|p| mismatch(p).map(|m| (p.clone(), m))).collect();
        failures.sort();
        total += perms.len();
        match failures.first() {
            None => writeln!(s, "{label} n = {n}: {} permutations, all MATCH", perms.len()).unwrap(),
            Some((p, why)) => {
                passed = false;
                writeln!(s, "{label} n = {n}: {} of {} MISMATCH; first {p}: {why}", failures.len(), perms.len())
                    .unwrap()
            }
        }
    }
    writeln!(s, "{label} total: {total} permutations, {}", if passed { "PASS" } else { "FAIL" }).unwrap();
    (s, passed)
}

fn verify_equivalence(family: FamilyChoice, max_n: usize) -> Result<Outcome, Failure> {
    guard_n(max_n)?;
    let mut text = String::new();
    let mut passed = true;
    if family != FamilyChoice::Tree {
        let (s, ok) = exhaustive("composition", max_n, |p| match crate::growth::growth_insert_composition(p) {
            Ok(pair) if pair == hypoplactic_insert(p) => None,
            Ok((a, b)) => Some(format!("growth gave P = {a}, Q = {b}")),
            Err(e) => Some(e.to_string()),
        });
        text.push_str(&s);
        passed &= ok;
    }
    if family != FamilyChoice::Composition {
        let (s, ok) = exhaustive("tree", max_n, |p| match crate::growth::growth_insert_tree(p) {
            Ok(pair) if pair == bst_insert(p, Reading::LeftToRight) => None,
            Ok((a, b)) => Some(format!("growth gave P = {a}, Q = {b}")),
            Err(e) => Some(e.to_string()),
        });
        text.push_str(&s);
        passed &= ok;
    }
    Ok(Outcome::verdict(text, passed))
}

fn verify_shadow(max_n: usize) -> Result<Outcome, Failure> {
    guard_n(max_n)?;
    let (text, passed) = exhaustive("shadow", max_n, |p| {
        let (a, b) = shadow_lines(p);
        (hypoplactic_insert(p) != (a.clone(), b.clone())).then(|| format!("shadow lines gave P = {a}, Q = {b}"))
    });
    Ok(Outcome::verdict(text, passed))
}

fn verify_paths(pair: PairArg, n: usize) -> Result<Outcome, Failure> {
    let (lhs, rhs) = match pair {
        PairArg::Compositions => {
            path_count_identity(&CompositionGraph::lifted_binary_tree(), &CompositionGraph::binword(), n)?
        }
        PairArg::Trees => path_count_identity(&TreeGraph::lattice(), &TreeGraph::reflected_bracket_tree(), n)?,
    };
    let verdict = if lhs == rhs { "PASS" } else { "FAIL" };
    Ok(Outcome::verdict(format!("n = {n}: sum e1*e2 = {lhs}, n! = {rhs}: {verdict}\n"), lhs == rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("dualgraded").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn insert_hypoplactic() {
        let (code, out, _) = call(&["insert", "hypoplactic", "415362"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("P = 1 2 / 3 / 4 5 6\nQ = 2 6 / 4 / 1 3 5\n"));
        let (code, out, _) = call(&["insert", "hypoplactic", "1"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("P = 1\nQ = 1\n"));
        let (code, out, _) = call(&["insert", "hypoplactic", "4,1,5,3,6,2", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["Q"]["rows"], json!([[2, 6], [4], [1, 3, 5]]));
    }

    #[test]
    fn insert_bst() {
        let (code, out, _) = call(&["insert", "bst-left", "351426", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["P"]["label"], 3);
        assert_eq!(v["Q"]["label"], 1);
        let (code, out, _) = call(&["insert", "bst-right", "351426"]);
        assert_eq!(code, 0);
        // sylvester insertion starts from the last letter
        assert!(out.lines().next().unwrap().contains(" 6 "));
        assert_eq!(render_sideways(&LabeledBinaryTree::Empty), "-\n");
        assert_eq!(render_sideways(&"((- 1 -) 2 (- 3 -))".parse().unwrap()), "  3\n2\n  1\n");
    }

    #[test]
    fn usage_and_parse_errors_exit_2() {
        assert_eq!(call(&["insert", "hypoplactic", "4153612"]).0, 2);
        let (code, _, err) = call(&["insert", "hypoplactic", "1,5"]);
        assert_eq!(code, 2);
        assert!(err.contains('5'));
        assert_eq!(call(&["insert", "rsk", "12"]).0, 2);
        assert_eq!(call(&["graph", "young"]).0, 2);
        assert_eq!(call(&["graph", "tree-lattice", "--max-rank", "11"]).0, 2);
        assert_eq!(call(&["graph", "binword", "--format", "ascii"]).0, 2);
        assert_eq!(call(&["verify", "shadow", "--max-n", "11"]).0, 2);
        assert_eq!(call(&[]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn growth_commands() {
        let (code, out, _) = call(&["growth", "composition", "415362", "--check"]);
        assert_eq!(code, 0);
        assert!(out.contains("top chain:   ∅ 1 11 12 22 23 213\n"));
        assert!(out.contains("right chain: ∅ 1 2 21 211 212 213\n"));
        assert!(out.trim_end().ends_with("MATCH"));
        let (code, out, _) = call(&["growth", "tree", "351426", "--check"]);
        assert_eq!(code, 0);
        assert!(out.contains("\nMATCH"));
        let (code, out, _) = call(&["growth", "composition", ""]);
        assert_eq!(code, 0);
        assert!(out.contains("P = ∅"));
        let (code, out, _) = call(&["growth", "tree", "2413", "--check", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["family"], "tree");
        assert_eq!(v["check"], "MATCH");
        assert_eq!(v["grid"].as_array().unwrap().len(), 5);
    }

    #[test]
    fn graph_command() {
        let (code, out, _) = call(&["graph", "binword", "--max-rank", "4", "--format", "dot"]);
        assert_eq!(code, 0);
        assert_eq!(out.matches(" -> ").count(), 25);
        let (code, out, _) = call(&["graph", "tree-lattice", "--max-rank", "0"]);
        assert_eq!(code, 0);
        assert_eq!(out.matches("[label=").count(), 1);
        let (_, out, _) = call(&["graph", "reflected-bracket-tree", "--max-rank", "4", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let counts: Vec<usize> =
            v["ranks"].as_array().unwrap().iter().map(|r| r["vertices"].as_array().unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14]);
        assert_eq!(call(&["graph", "binword", "--max-rank", "4"]).1, call(&["graph", "binword", "--max-rank", "4"]).1);
    }

    #[test]
    fn verify_commands() {
        let (code, out, _) = call(&["verify", "duality", "--pair", "compositions", "--max-rank", "5"]);
        assert_eq!(code, 0);
        assert_eq!(out.matches("PASS").count(), 7);
        let (code, out, _) = call(&[
            "verify",
            "duality",
            "--up",
            "lifted-binary-tree",
            "--down",
            "lifted-binary-tree",
            "--max-rank",
            "3",
        ]);
        assert_eq!(code, 1);
        assert!(out.contains("rank 2: 2 vertices, r = 1: FAIL"));
        assert_eq!(call(&["verify", "duality", "--up", "binword", "--down", "tree-lattice"]).0, 2);
        let (code, out, _) = call(&["verify", "equivalence", "--family", "tree", "--max-n", "5"]);
        assert_eq!(code, 0);
        assert!(out.contains("tree n = 5: 120 permutations, all MATCH"));
        let (code, out, _) = call(&["verify", "paths", "--pair", "trees", "--n", "5"]);
        assert_eq!(code, 0);
        assert_eq!(out, "n = 5: sum e1*e2 = 120, n! = 120: PASS\n");
        assert_eq!(call(&["verify", "shadow", "--max-n", "5"]).0, 0);
        let (code, out, _) = call(&["verify", "duality", "--pair", "trees", "--max-rank", "2", "--r", "2"]);
        assert_eq!(code, 1);
        assert!(out.contains("expected 2, got 1"));
    }

    #[test]
    fn out_file() {
        let path = std::env::temp_dir().join(format!("dualgraded-cli-{}.dot", std::process::id()));
        let (code, out, _) = call(&["graph", "lifted-binary-tree", "--max-rank", "2", "--out", path.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert!(out.is_empty());
        let written = std::fs::read_to_string(&path).unwrap();
        assert_eq!(written.matches(" -> ").count(), 3);
        std::fs::remove_file(&path).unwrap();
    }
}
