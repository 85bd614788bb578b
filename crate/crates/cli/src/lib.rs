//! Command-line front end: argument definitions and the commands.

use std::collections::BTreeSet;
use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;
use trienum::bipartite::is_bipartite;
use trienum::chordal::is_chordal;
use trienum::cliquewidth::{cotree_to_kexpression, cw_enumerate, parse_kexpression};
use trienum::cotree::{build_cotree, is_cograph};
use trienum::degeneracy::degeneracy;
use trienum::deletion::{
    greedy_ddeg_deletion_set, lift_error, DeletionSet, TargetClass, P4_SEARCH_LIMIT,
};
use trienum::forest::feedback_edge_number;
use trienum::hardness::{build_gp_gadget, verify_gadget};
use trienum::kernels::{
    dtdd_kernelize, dtdd_maxdeg_kernelize, fes_kernelize, Advice, EnumAdviceKernel, DTDD_LIMIT,
};
use trienum::oracle::{enumerate_edge_intersect, enumerate_triples, TRIPLES_LIMIT};
use trienum::solvers::*;
use trienum::triangle::format_with_labels;
use trienum::{parse_edge_list, Graph, KExprError, ParseError, TriangleSet, Vertex};

const FORMATS: &str = "\
FILE FORMATS

Edge list: one edge per line as two whitespace-separated non-negative
integer labels, e.g. `3 17`. Blank lines and lines starting with `#` are
ignored. Self-loops and repeated edges are errors. Vertices are the labels
that occur; isolated vertices cannot be expressed.

Deletion set: one vertex label per line; blank lines and `#` lines are
ignored.

k-expression: prefix notation over `v(i)` (new vertex with label i),
`u(E,E)` (disjoint union), `eta(i,j,E)` (join all vertices labeled i to all
labeled j, i != j) and `rho(i,j,E)` (relabel i to j). Labels are integers
from 1. Whitespace is ignored and `#` starts a comment running to the end
of the line. The vertex created by the k-th `v(..)` from the left gets
label k-1.

Triangle output: one `a b c` line per triangle in input labels, ascending
within the line. `--sorted` also sorts the lines.

Exit codes: 0 success, 1 usage or I/O error, 2 invalid input or violated
precondition, 3 internal check failed (algorithms disagree, gadget check).";

#[derive(Debug, Parser)]
#[command(
    name = "trienum",
    version,
    about = "Triangle enumeration with parameterized algorithms"
)]
#[command(after_long_help = FORMATS)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the triangles of a graph
    Triangles(TrianglesArgs),
    /// Shrink a graph to a kernel; writes <base>.kernel.edges, <base>.advice and <base>.meta
    Kernelize(KernelizeArgs),
    /// Build the hardness gadget; writes <base>.gadget.edges
    Gadget(GadgetArgs),
    /// Print structural parameters of a graph
    Params(ParamsArgs),
    /// Time several algorithms on one graph and check that they agree
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Brute,
    Edge,
    Degeneracy,
    Fes,
    Dtdd,
    DtddMaxdeg,
    Bipartite,
    Chordal,
    Cograph,
    Cliquewidth,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Brute => "brute",
            Algo::Edge => "edge",
            Algo::Degeneracy => "degeneracy",
            Algo::Fes => "fes",
            Algo::Dtdd => "dtdd",
            Algo::DtddMaxdeg => "dtdd-maxdeg",
            Algo::Bipartite => "bipartite",
            Algo::Chordal => "chordal",
            Algo::Cograph => "cograph",
            Algo::Cliquewidth => "cliquewidth",
        }
    }

    fn takes_deletion_set(self) -> bool {
        matches!(
            self,
            Algo::Dtdd | Algo::DtddMaxdeg | Algo::Bipartite | Algo::Chordal
        )
    }
}

#[derive(Debug, Args)]
#[command(after_long_help = FORMATS)]
pub struct TrianglesArgs {
    /// Edge-list file; optional with --kexpr
    pub file: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub algo: Algo,
    /// Deletion set file (dtdd, dtdd-maxdeg, bipartite, chordal)
    #[arg(long)]
    pub deletion_set: Option<PathBuf>,
    /// Degeneracy of G - D (dtdd, dtdd-maxdeg). Defaults to the degeneracy
    /// of G - D for a given set, else 2 with a greedily computed set
    #[arg(long = "d")]
    pub d: Option<usize>,
    /// k-expression file (cliquewidth)
    #[arg(long)]
    pub kexpr: Option<PathBuf>,
    /// Print only the number of triangles
    #[arg(long)]
    pub count_only: bool,
    /// Sort output lines
    #[arg(long)]
    pub sorted: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KernelParam {
    Fes,
    Dtdd,
    DtddMaxdeg,
}

#[derive(Debug, Args)]
#[command(after_long_help = FORMATS)]
pub struct KernelizeArgs {
    pub file: PathBuf,
    #[arg(long, value_enum)]
    pub param: KernelParam,
    /// Deletion set file (dtdd, dtdd-maxdeg)
    #[arg(long)]
    pub deletion_set: Option<PathBuf>,
    /// Degeneracy of G - D (dtdd, dtdd-maxdeg)
    #[arg(long = "d")]
    pub d: Option<usize>,
    /// Directory for the output files; defaults to the input's directory
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(after_long_help = FORMATS)]
pub struct GadgetArgs {
    pub file: PathBuf,
    /// Check sizes, domination, coloring, diameter and triangle equivalence
    #[arg(long)]
    pub verify: bool,
    /// Directory for the output file; defaults to the input's directory
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(after_long_help = FORMATS)]
pub struct ParamsArgs {
    pub file: PathBuf,
}

#[derive(Debug, Args)]
#[command(after_long_help = FORMATS)]
pub struct BenchArgs {
    pub file: PathBuf,
    /// Comma-separated algorithms; all by default
    #[arg(long, value_enum, value_delimiter = ',')]
    pub algos: Vec<Algo>,
    /// Repetitions per algorithm; the median time is reported
    #[arg(long, default_value_t = 3)]
    pub reps: usize,
    /// Deletion set used by dtdd, dtdd-maxdeg, bipartite and chordal
    #[arg(long)]
    pub deletion_set: Option<PathBuf>,
    #[arg(long = "d")]
    pub d: Option<usize>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("{}: {source}", path.display())]
    KExpr { path: PathBuf, source: KExprError },
    #[error("{0}")]
    Input(String),
    /// Vertex ids in the error are input labels.
    #[error("{0}")]
    Precondition(trienum::Error),
    #[error(
        "{first} and {other} disagree; only in {first}: {only_first:?}; only in {other}: {only_other:?}"
    )]
    CountMismatch {
        first: String,
        other: String,
        only_first: Vec<String>,
        only_other: Vec<String>,
    },
    #[error("check failed: {0}")]
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 1,
            CliError::Parse { .. }
            | CliError::KExpr { .. }
            | CliError::Input(_)
            | CliError::Precondition(_) => 2,
            CliError::CountMismatch { .. } | CliError::CheckFailed(_) => 3,
        }
    }
}

fn io_error(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Rewrites the vertex ids in an error to the input labels of `g`.
fn precondition(e: trienum::Error, g: &Graph) -> CliError {
    let labels: Vec<Vertex> = g.labels().iter().map(|&l| l as Vertex).collect();
    CliError::Precondition(lift_error(e, &labels))
}

pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let file = File::open(path).map_err(io_error(path))?;
    parse_edge_list(BufReader::new(file)).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

/// Reads a deletion set file and maps its labels to the ids of `g`.
pub fn read_deletion_set(path: &Path, g: &Graph) -> Result<Vec<Vertex>, CliError> {
    let text = fs::read_to_string(path).map_err(io_error(path))?;
    let id_of: std::collections::HashMap<u64, Vertex> =
        g.vertices().map(|v| (g.label(v), v)).collect();
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let label: u64 = line.parse().map_err(|_| {
            CliError::Input(format!(
                "{}:{}: expected a vertex label, got {line:?}",
                path.display(),
                i + 1
            ))
        })?;
        let v = id_of.get(&label).ok_or_else(|| {
            CliError::Input(format!(
                "{}:{}: vertex {label} is not in the graph",
                path.display(),
                i + 1
            ))
        })?;
        out.push(*v);
    }
    Ok(out)
}

/// Deletion set to `d`-degenerate graphs: the given one, or a greedy one
/// for `d` (default 2).
fn degenerate_deletion_set(g: &Graph, given: Option<Vec<Vertex>>, d: Option<usize>) -> DeletionSet {
    match given {
        Some(vs) => {
            let d = d.unwrap_or_else(|| degeneracy(&g.without_vertices(&vs).graph));
            DeletionSet::new(vs, TargetClass::Degenerate(d))
        }
        None => greedy_ddeg_deletion_set(g, d.unwrap_or(2)),
    }
}

fn write_triangles(
    out: &mut dyn Write,
    g: &Graph,
    t: &TriangleSet,
    sorted: bool,
) -> io::Result<()> {
    if sorted {
        let mut lines: Vec<[u64; 3]> = t
            .iter()
            .map(|t| {
                let mut l = t.vertices().map(|v| g.label(v));
                l.sort_unstable();
                l
            })
            .collect();
        lines.sort_unstable();
        for [a, b, c] in lines {
            writeln!(out, "{a} {b} {c}")?;
        }
    } else {
        for t in t.iter() {
            writeln!(out, "{}", format_with_labels(t, g))?;
        }
    }
    Ok(())
}

fn stdout_error(e: io::Error) -> CliError {
    CliError::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Triangles(a) => cmd_triangles(a, out),
        Command::Kernelize(a) => cmd_kernelize(a, out),
        Command::Gadget(a) => cmd_gadget(a, out),
        Command::Params(a) => cmd_params(&read_graph(&a.file)?, out),
        Command::Bench(a) => cmd_bench(a, out),
    }
}

fn validate_triangles(a: &TrianglesArgs) -> Result<(), CliError> {
    if a.kexpr.is_some() && a.algo != Algo::Cliquewidth {
        return Err(CliError::Usage(
            "--kexpr only applies to --algo=cliquewidth".into(),
        ));
    }
    if a.deletion_set.is_some() && !a.algo.takes_deletion_set() {
        return Err(CliError::Usage(format!(
            "--deletion-set does not apply to --algo={}",
            a.algo.name()
        )));
    }
    if a.d.is_some() && !matches!(a.algo, Algo::Dtdd | Algo::DtddMaxdeg) {
        return Err(CliError::Usage(format!(
            "--d does not apply to --algo={}",
            a.algo.name()
        )));
    }
    if a.file.is_none() && a.kexpr.is_none() {
        return Err(CliError::Usage("an input file is required".into()));
    }
    Ok(())
}

/// Runs one algorithm on `g`. Deletion sets are taken from `given` or, for
/// the degenerate case, computed greedily.
fn solve(
    algo: Algo,
    g: &Graph,
    given: Option<Vec<Vertex>>,
    d: Option<usize>,
) -> Result<TriangleSet, CliError> {
    let wrap = |e| precondition(e, g);
    match algo {
        Algo::Brute => enumerate_triples(g).map_err(wrap),
        Algo::Edge => Ok(enumerate_edge_intersect(g)),
        Algo::Degeneracy => Ok(solve_degeneracy(g)),
        Algo::Fes => Ok(solve_fes(g)),
        Algo::Dtdd => solve_dtdd(g, &degenerate_deletion_set(g, given, d)).map_err(wrap),
        Algo::DtddMaxdeg => {
            solve_dtdd_maxdeg(g, &degenerate_deletion_set(g, given, d)).map_err(wrap)
        }
        Algo::Bipartite => solve_bipartite_deletion(g, &given.unwrap_or_default()).map_err(wrap),
        Algo::Chordal => solve_chordal_deletion(g, &given.unwrap_or_default()).map_err(wrap),
        Algo::Cograph => solve_cograph(g).map_err(wrap),
        Algo::Cliquewidth => {
            let tree = build_cotree(g).map_err(|e| match e {
                trienum::Error::NotCograph(_) => CliError::Input(format!(
                    "{}; without --kexpr only cographs are supported",
                    precondition(e, g)
                )),
                e => wrap(e),
            })?;
            Ok(match cotree_to_kexpression(&tree) {
                Some((e, leaves)) => cw_enumerate(&e)
                    .iter()
                    .map(|t| t.map(|x| leaves[x]))
                    .collect(),
                None => TriangleSet::new(),
            })
        }
    }
}

fn cmd_triangles(a: &TrianglesArgs, out: &mut dyn Write) -> Result<(), CliError> {
    validate_triangles(a)?;
    let (g, triangles) = match &a.kexpr {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(io_error(path))?;
            let e = parse_kexpression(&text).map_err(|source| CliError::KExpr {
                path: path.clone(),
                source,
            })?;
            let h = e.evaluate();
            if let Some(file) = &a.file {
                let g = read_graph(file)?;
                let from_file: BTreeSet<(u64, u64)> = g
                    .edges()
                    .map(|(u, v)| (g.label(u).min(g.label(v)), g.label(u).max(g.label(v))))
                    .collect();
                let from_expr: BTreeSet<(u64, u64)> =
                    h.edges().map(|(u, v)| (u as u64, v as u64)).collect();
                if from_file != from_expr {
                    return Err(CliError::Input(format!(
                        "{} does not describe the graph in {}",
                        path.display(),
                        file.display()
                    )));
                }
            }
            let t = cw_enumerate(&e);
            (h, t)
        }
        None => {
            let file = a.file.as_ref().expect("validated");
            let g = read_graph(file)?;
            let given = match &a.deletion_set {
                Some(p) => Some(read_deletion_set(p, &g)?),
                None => None,
            };
            let t = solve(a.algo, &g, given, a.d)?;
            (g, t)
        }
    };
    if a.count_only {
        writeln!(out, "{}", triangles.len()).map_err(stdout_error)
    } else {
        write_triangles(out, &g, &triangles, a.sorted).map_err(stdout_error)
    }
}

/// `<dir>/<stem>` where `dir` is `out_dir` or the input's directory.
fn output_base(file: &Path, out_dir: Option<&Path>) -> PathBuf {
    let stem = file.file_stem().unwrap_or(file.as_os_str());
    let dir = out_dir.or_else(|| file.parent()).unwrap_or(Path::new(""));
    dir.join(stem)
}

fn with_suffix(base: &Path, suffix: &str) -> PathBuf {
    let mut s = base.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn write_file(
    path: &Path,
    body: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> Result<(), CliError> {
    let file = File::create(path).map_err(io_error(path))?;
    let mut w = BufWriter::new(file);
    body(&mut w).and_then(|_| w.flush()).map_err(io_error(path))
}

fn write_meta(w: &mut dyn Write, name: &str, kernel: &EnumAdviceKernel) -> io::Result<()> {
    writeln!(w, "param={name}")?;
    writeln!(w, "param_in={}", kernel.param_in)?;
    writeln!(w, "param_out={}", kernel.param_out)?;
    writeln!(w, "kernel_vertices={}", kernel.graph.vertex_count())?;
    writeln!(w, "kernel_edges={}", kernel.graph.edge_count())?;
    for c in &kernel.checks {
        let verdict = if c.holds() { "ok" } else { "violated" };
        writeln!(w, "{}={} bound={} {verdict}", c.name, c.actual, c.bound)?;
    }
    writeln!(
        w,
        "verdict={}",
        if kernel.bounds_hold() {
            "ok"
        } else {
            "violated"
        }
    )
}

fn write_advice(w: &mut dyn Write, g: &Graph, kernel: &EnumAdviceKernel) -> io::Result<()> {
    let k = &kernel.graph;
    writeln!(w, "[sentinel]")?;
    if let Some(t) = kernel.sentinel {
        let [a, b, c] = t.vertices().map(|x| k.label(x));
        writeln!(w, "{a} {b} {c}")?;
    }
    match &kernel.advice {
        Advice::Triangles(a) => {
            writeln!(w, "[triangles]")?;
            write_triangles(w, g, &a.triangles, true)?;
        }
        Advice::Dtdd(a) => {
            writeln!(w, "[triangles]")?;
            write_triangles(w, g, &a.t1, true)?;
            writeln!(w, "[modules]")?;
            for m in &a.modules {
                write!(w, "{}:", g.label(m.representative))?;
                for &x in &m.members {
                    write!(w, " {}", g.label(x))?;
                }
                writeln!(w)?;
            }
        }
    }
    Ok(())
}

fn cmd_kernelize(a: &KernelizeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if a.param == KernelParam::Fes && (a.deletion_set.is_some() || a.d.is_some()) {
        return Err(CliError::Usage(
            "--deletion-set and --d do not apply to --param=fes".into(),
        ));
    }
    let g = read_graph(&a.file)?;
    let (name, kernel) = match a.param {
        KernelParam::Fes => ("fes", fes_kernelize(&g)),
        KernelParam::Dtdd | KernelParam::DtddMaxdeg => {
            let given = match &a.deletion_set {
                Some(p) => Some(read_deletion_set(p, &g)?),
                None => None,
            };
            let ds = degenerate_deletion_set(&g, given, a.d);
            if a.param == KernelParam::Dtdd {
                (
                    "dtdd",
                    dtdd_kernelize(&g, &ds).map_err(|e| precondition(e, &g))?,
                )
            } else {
                (
                    "dtdd-maxdeg",
                    dtdd_maxdeg_kernelize(&g, &ds).map_err(|e| precondition(e, &g))?,
                )
            }
        }
    };
    let base = output_base(&a.file, a.out_dir.as_deref());
    let edges = with_suffix(&base, ".kernel.edges");
    let advice = with_suffix(&base, ".advice");
    let meta = with_suffix(&base, ".meta");
    write_file(&edges, |w| kernel.graph.write_edge_list(w))?;
    write_file(&advice, |w| write_advice(w, &g, &kernel))?;
    write_file(&meta, |w| write_meta(w, name, &kernel))?;
    for p in [&edges, &advice, &meta] {
        writeln!(out, "{}", p.display()).map_err(stdout_error)?;
    }
    if !kernel.bounds_hold() {
        return Err(CliError::CheckFailed(format!(
            "kernel size bound violated, see {}",
            meta.display()
        )));
    }
    Ok(())
}

fn cmd_gadget(a: &GadgetArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let g = read_graph(&a.file)?;
    let gg = build_gp_gadget(&g);
    let path = with_suffix(&output_base(&a.file, a.out_dir.as_deref()), ".gadget.edges");
    write_file(&path, |w| gg.g_prime.write_edge_list(w))?;
    writeln!(out, "{}", path.display()).map_err(stdout_error)?;
    if a.verify {
        let report = verify_gadget(&gg, &g);
        writeln!(out, "{report}").map_err(stdout_error)?;
        if !report.all_ok() {
            return Err(CliError::CheckFailed(
                "gadget properties do not hold".into(),
            ));
        }
    }
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn cmd_params(g: &Graph, out: &mut dyn Write) -> Result<(), CliError> {
    let mut line = format!(
        "n={} m={} delta={} degeneracy={} fes={} bipartite={} chordal={} cograph={}",
        g.vertex_count(),
        g.edge_count(),
        g.max_degree(),
        degeneracy(g),
        feedback_edge_number(g),
        yes_no(is_bipartite(g)),
        yes_no(is_chordal(g)),
        yes_no(is_cograph(g)),
    );
    for d in 0..=2 {
        line.push_str(&format!(
            " deletion_d{d}={}",
            greedy_ddeg_deletion_set(g, d).len()
        ));
    }
    writeln!(out, "{line}").map_err(stdout_error)
}

pub type Enumerator<'a> = Box<dyn Fn(&Graph) -> Result<TriangleSet, CliError> + 'a>;

/// A named triangle enumerator for [`bench_table`].
pub struct Runner<'a> {
    pub name: String,
    pub run: Enumerator<'a>,
}

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub name: String,
    pub median: Duration,
    pub count: usize,
}

/// Runs every runner `reps` times and checks that all of them return the
/// same triangles as the first.
pub fn bench_table(g: &Graph, runners: &[Runner], reps: usize) -> Result<Vec<BenchRow>, CliError> {
    let mut rows = Vec::new();
    let mut reference: Option<(String, TriangleSet)> = None;
    for r in runners {
        let mut times = Vec::with_capacity(reps.max(1));
        let mut result = TriangleSet::new();
        for _ in 0..reps.max(1) {
            let start = Instant::now();
            result = (r.run)(g)?;
            times.push(start.elapsed());
        }
        times.sort_unstable();
        match &reference {
            None => reference = Some((r.name.clone(), result.clone())),
            Some((first, expected)) => {
                if !result.set_eq(expected) {
                    let (only_first, only_other) = expected.symmetric_difference(&result, 10);
                    let show = |ts: Vec<trienum::Triangle>| {
                        ts.iter().map(|t| format_with_labels(t, g)).collect()
                    };
                    return Err(CliError::CountMismatch {
                        first: first.clone(),
                        other: r.name.clone(),
                        only_first: show(only_first),
                        only_other: show(only_other),
                    });
                }
            }
        }
        rows.push(BenchRow {
            name: r.name.clone(),
            median: times[times.len() / 2],
            count: result.len(),
        });
    }
    Ok(rows)
}

/// Builds the runners for `algos`; algorithms whose preconditions cannot
/// be met are skipped with a note. Deletion sets are computed up front so
/// that timings cover the algorithms only.
fn bench_runners<'a>(
    g: &'a Graph,
    algos: &[Algo],
    given: Option<Vec<Vertex>>,
    d: Option<usize>,
) -> (Vec<Runner<'a>>, Vec<String>) {
    let mut runners = Vec::new();
    let mut skipped = Vec::new();
    let n = g.vertex_count();
    for &algo in algos {
        let name = algo.name().to_string();
        let skip = match algo {
            Algo::Brute if n > TRIPLES_LIMIT => Some(format!("more than {TRIPLES_LIMIT} vertices")),
            Algo::Bipartite | Algo::Chordal if given.is_none() => {
                Some("no --deletion-set given".into())
            }
            Algo::Cograph if n > P4_SEARCH_LIMIT => {
                Some(format!("more than {P4_SEARCH_LIMIT} vertices"))
            }
            Algo::Cliquewidth if n > P4_SEARCH_LIMIT || !is_cograph(g) => {
                Some("needs a k-expression; only cographs get one automatically".into())
            }
            _ => None,
        };
        if let Some(why) = skip {
            skipped.push(format!("{name}: {why}"));
            continue;
        }
        let run: Enumerator = match algo {
            Algo::Dtdd | Algo::DtddMaxdeg => {
                let ds = degenerate_deletion_set(g, given.clone(), d);
                if let Err(e) = ds.verify(g) {
                    skipped.push(format!("{name}: {}", precondition(e, g)));
                    continue;
                }
                if algo == Algo::Dtdd && ds.len() > DTDD_LIMIT {
                    skipped.push(format!(
                        "{name}: deletion set of {} vertices exceeds {DTDD_LIMIT}",
                        ds.len()
                    ));
                    continue;
                }
                if algo == Algo::Dtdd {
                    Box::new(move |g| solve_dtdd(g, &ds).map_err(|e| precondition(e, g)))
                } else {
                    Box::new(move |g| solve_dtdd_maxdeg(g, &ds).map_err(|e| precondition(e, g)))
                }
            }
            Algo::Bipartite | Algo::Chordal => {
                let k = given.clone().expect("checked above");
                let target = if algo == Algo::Bipartite {
                    TargetClass::Bipartite
                } else {
                    TargetClass::Chordal
                };
                if let Err(e) = DeletionSet::new(k.clone(), target).verify(g) {
                    skipped.push(format!("{name}: {}", precondition(e, g)));
                    continue;
                }
                Box::new(move |g| solve(algo, g, Some(k.clone()), None))
            }
            _ => Box::new(move |g| solve(algo, g, None, None)),
        };
        runners.push(Runner { name, run });
    }
    (runners, skipped)
}

fn cmd_bench(a: &BenchArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let g = read_graph(&a.file)?;
    let given = match &a.deletion_set {
        Some(p) => Some(read_deletion_set(p, &g)?),
        None => None,
    };
    let algos: Vec<Algo> = if a.algos.is_empty() {
        Algo::value_variants().to_vec()
    } else {
        a.algos.clone()
    };
    let (runners, skipped) = bench_runners(&g, &algos, given, a.d);
    let rows = bench_table(&g, &runners, a.reps)?;
    let mut text = String::from("algorithm\tmedian_ms\ttriangles\n");
    for r in &rows {
        text.push_str(&format!(
            "{}\t{:.3}\t{}\n",
            r.name,
            r.median.as_secs_f64() * 1e3,
            r.count
        ));
    }
    for s in &skipped {
        text.push_str(&format!("# skipped {s}\n"));
    }
    out.write_all(text.as_bytes()).map_err(stdout_error)
}
