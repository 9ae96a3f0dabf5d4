//! Command-line front end for the `mdim` binary.
//!
//! Exit status: 0 on success, 1 when a verification suite fails, 2 on input
//! or usage errors.

use std::fmt::Write as _;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::constructions::{build_family, FamilySpec};
use crate::formats::{emit_dot, emit_edgelist, emit_graph6, parse_edgelist, parse_graph6};
use crate::graph::{Graph, VertexSet};
use crate::harness::{run_suite, Suite, SuiteConfig, VerificationReport, DEFAULT_SEED};
use crate::solver::{element_vectors, mdim_exact, MdimResult};
use crate::structure::{analyze, StructureReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

/// Overrides `--jobs` when set to a positive integer.
pub const JOBS_ENV: &str = "MDIM_JOBS";

#[derive(Debug, Parser)]
#[command(name = "mdim", version, about = "Mixed metric dimension of small graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Append wall-clock timings to the output.
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact mixed metric dimension and a lexicographically first basis.
    Mdim {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        output_format: OutputFormat,
        /// Search every vertex subset, skipping the forced/cut-vertex reductions.
        #[arg(long)]
        no_prune: bool,
        /// Print the distance vector of every vertex and edge w.r.t. the basis.
        #[arg(long)]
        certificate: bool,
    },
    /// Degrees, universal and cut vertices, blocks and maximal neighbors.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        output_format: OutputFormat,
    },
    /// Build a named family member, e.g. `lambda:5,5` or `random_tree:8:seed=3`.
    Construct {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Graph6)]
        output_format: OutputFormat,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Order for the characterization suite (2..=6); all orders when omitted.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        output_format: OutputFormat,
    },
    /// Transcode between graph formats.
    Convert {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Edgelist)]
        output_format: OutputFormat,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input file, or `-` for stdin.
    #[arg(required_unless_present = "family", conflicts_with = "family")]
    pub input: Option<PathBuf>,
    /// Family spec instead of an input file.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
    pub input_format: InputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
    Graph6,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Characterization,
    Delta,
    G6Uniqueness,
    CutBound,
    ClassFormulas,
    Products,
    Solver,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Characterization => vec![Suite::Characterization],
            SuiteArg::Delta => vec![Suite::Delta],
            SuiteArg::G6Uniqueness => vec![Suite::G6Uniqueness],
            SuiteArg::CutBound => vec![Suite::CutBound],
            SuiteArg::ClassFormulas => vec![Suite::ClassFormulas],
            SuiteArg::Products => vec![Suite::Products],
            SuiteArg::Solver => vec![Suite::Solver],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

/// Thread count: `MDIM_JOBS`, then `--jobs`, else rayon's default.
pub fn resolve_jobs(flag: Option<usize>, env: Option<&str>) -> anyhow::Result<usize> {
    if let Some(raw) = env.filter(|s| !s.trim().is_empty()) {
        let jobs: usize = raw.trim().parse().with_context(|| format!("{JOBS_ENV}={raw:?} is not a count"))?;
        if jobs == 0 {
            bail!("{JOBS_ENV} must be positive");
        }
        return Ok(jobs);
    }
    match flag {
        Some(0) => bail!("--jobs must be positive"),
        Some(j) => Ok(j),
        None => Ok(0),
    }
}

/// Runs a parsed command line, writing documents to `out`.
pub fn run(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> anyhow::Result<u8> {
    let env = std::env::var(JOBS_ENV).ok();
    let jobs = resolve_jobs(cli.jobs, env.as_deref())?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().context("thread pool")?;
    let timings = cli.timings;
    // stdin is drained up front so the work itself can move to the pool
    let mut piped = String::new();
    if cli.command.input().is_some_and(|i| i.input.as_ref().is_some_and(|p| p.as_os_str() == "-")) {
        stdin.read_to_string(&mut piped).context("reading stdin")?;
    }
    let (status, text) = pool.install(|| dispatch(cli.command, timings, &piped))?;
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(status)
}

impl Command {
    fn input(&self) -> Option<&InputArgs> {
        match self {
            Command::Mdim { input, .. }
            | Command::Analyze { input, .. }
            | Command::Construct { input, .. }
            | Command::Convert { input, .. } => Some(input),
            Command::Verify { .. } => None,
        }
    }
}

fn dispatch(command: Command, timings: bool, stdin: &str) -> anyhow::Result<(u8, String)> {
    match command {
        Command::Mdim { input, output_format, no_prune, certificate } => {
            allow(output_format, &[OutputFormat::Text, OutputFormat::Json], "mdim")?;
            let graphs = read_graphs(&input, stdin)?;
            let started = Instant::now();
            let results: Vec<anyhow::Result<String>> = graphs
                .par_iter()
                .map(|g| render_mdim(g, !no_prune, certificate, output_format))
                .collect();
            let mut text = join_blocks(results, output_format)?;
            append_timing(&mut text, timings, started, output_format);
            Ok((EXIT_OK, text))
        }
        Command::Analyze { input, output_format } => {
            allow(output_format, &[OutputFormat::Text, OutputFormat::Json], "analyze")?;
            let graphs = read_graphs(&input, stdin)?;
            let started = Instant::now();
            let results: Vec<anyhow::Result<String>> =
                graphs.par_iter().map(|g| render_analysis(g, output_format)).collect();
            let mut text = join_blocks(results, output_format)?;
            append_timing(&mut text, timings, started, output_format);
            Ok((EXIT_OK, text))
        }
        Command::Construct { input, output_format } | Command::Convert { input, output_format } => {
            allow(
                output_format,
                &[OutputFormat::Graph6, OutputFormat::Edgelist, OutputFormat::Dot, OutputFormat::Json],
                "construct/convert",
            )?;
            let graphs = read_graphs(&input, stdin)?;
            let blocks = graphs.iter().map(|g| Ok(render_graph(g, output_format))).collect();
            Ok((EXIT_OK, join_blocks(blocks, output_format)?))
        }
        Command::Verify { suite, n, trials, seed, output_format } => {
            allow(output_format, &[OutputFormat::Text, OutputFormat::Json], "verify")?;
            if let Some(n) = n {
                if !(2..=6).contains(&n) {
                    bail!("--n must lie in 2..=6, got {n}");
                }
            }
            if trials == Some(0) {
                bail!("--trials must be positive");
            }
            let cfg = SuiteConfig { n, trials, seed };
            let mut text = String::new();
            let mut status = EXIT_OK;
            for s in suite.suites() {
                let report = run_suite(s, &cfg)?;
                if !report.passed {
                    status = EXIT_FAILED;
                }
                text.push_str(&render_report(&report, output_format, timings)?);
            }
            Ok((status, text))
        }
    }
}

fn allow(format: OutputFormat, allowed: &[OutputFormat], command: &str) -> anyhow::Result<()> {
    if !allowed.contains(&format) {
        let name = format.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default();
        bail!("output format `{name}` is not available for {command}");
    }
    Ok(())
}

/// All graphs named by the input arguments; graph6 input may hold many lines.
/// `stdin` holds the piped text used when the path is `-`.
pub fn read_graphs(input: &InputArgs, stdin: &str) -> anyhow::Result<Vec<Graph>> {
    if let Some(spec) = &input.family {
        let spec: FamilySpec = spec.parse().with_context(|| format!("family spec `{spec}`"))?;
        return Ok(vec![build_family(&spec).with_context(|| format!("building `{spec}`"))?]);
    }
    let path = input.input.as_ref().context("no input given")?;
    let text = if path.as_os_str() == "-" {
        stdin.to_owned()
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    match input.input_format {
        InputFormat::Edgelist => Ok(vec![parse_edgelist(&text)?]),
        InputFormat::Graph6 => {
            let mut graphs = Vec::new();
            for (i, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                graphs.push(parse_graph6(line).with_context(|| format!("graph6 line {}", i + 1))?);
            }
            if graphs.is_empty() {
                bail!("no graphs in input");
            }
            Ok(graphs)
        }
    }
}

fn join_blocks(blocks: Vec<anyhow::Result<String>>, format: OutputFormat) -> anyhow::Result<String> {
    let blocks = blocks.into_iter().collect::<anyhow::Result<Vec<_>>>()?;
    // text and DOT blocks are separated by a blank line; line formats concatenate
    let sep = if matches!(format, OutputFormat::Text | OutputFormat::Dot) { "\n" } else { "" };
    Ok(blocks.join(sep))
}

fn append_timing(text: &mut String, timings: bool, started: Instant, format: OutputFormat) {
    if !timings {
        return;
    }
    let secs = started.elapsed().as_secs_f64();
    if format == OutputFormat::Json {
        let _ = writeln!(text, "{}", json!({ "elapsed_seconds": secs }));
    } else {
        let _ = writeln!(text, "elapsed: {secs:.3}s");
    }
}

fn render_graph(g: &Graph, format: OutputFormat) -> String {
    match format {
        OutputFormat::Graph6 => format!("{}\n", emit_graph6(g)),
        OutputFormat::Edgelist => emit_edgelist(g),
        OutputFormat::Dot => emit_dot(g),
        _ => format!("{}\n", json!({ "n": g.order(), "m": g.edge_count(), "graph6": emit_graph6(g), "edges": g.edge_pairs() })),
    }
}

fn render_mdim(g: &Graph, prune: bool, certificate: bool, format: OutputFormat) -> anyhow::Result<String> {
    let r = mdim_exact(g, prune)?;
    let table = if certificate { Some(element_vectors(g, r.basis)?) } else { None };
    let g6 = emit_graph6(g);
    if format == OutputFormat::Json {
        let mut doc = serde_json::to_value(&r)?;
        doc["graph6"] = Value::from(g6);
        doc["n"] = Value::from(g.order());
        if let Some(table) = table {
            doc["certificate"] = table
                .iter()
                .map(|(x, vec)| json!({ "element": x.to_string(), "vector": vec }))
                .collect::<Value>();
        }
        return Ok(format!("{doc}\n"));
    }
    Ok(mdim_text(&g6, &r, table.as_deref()))
}

fn mdim_text(g6: &str, r: &MdimResult, table: Option<&[(crate::graph::MixedElement, Vec<u8>)]>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph: {g6}");
    let _ = writeln!(out, "dimension: {}", r.dimension);
    let _ = writeln!(out, "basis: {}", r.basis);
    let _ = writeln!(out, "forced: {}", r.forced);
    let _ = writeln!(out, "excluded: {}", r.excluded);
    let _ = writeln!(out, "pruned: {}", r.pruned);
    let _ = writeln!(out, "nodes searched: {}", r.nodes_searched);
    let formula = r.formula_used.map_or_else(|| "none".to_owned(), |t| t.to_string());
    let _ = writeln!(out, "formula: {formula}");
    if let Some(table) = table {
        let _ = writeln!(out, "certificate (distances to {}):", r.basis);
        for (x, vec) in table {
            let cells: Vec<String> = vec.iter().map(u8::to_string).collect();
            let _ = writeln!(out, "  {:<8} {}", x.to_string(), cells.join(" "));
        }
    }
    out
}

fn render_analysis(g: &Graph, format: OutputFormat) -> anyhow::Result<String> {
    let r = analyze(g)?;
    if format == OutputFormat::Json {
        let mut doc = serde_json::to_value(&r)?;
        doc["graph6"] = Value::from(emit_graph6(g));
        doc["all_have_maximal_neighbor"] = Value::from(r.all_have_maximal_neighbor());
        return Ok(format!("{doc}\n"));
    }
    Ok(analysis_text(&emit_graph6(g), &r))
}

fn analysis_text(g6: &str, r: &StructureReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph: {g6}");
    let _ = writeln!(out, "n: {}  m: {}", r.n, r.m);
    let _ = writeln!(out, "degree: min {} max {}", r.min_degree, r.max_degree);
    let _ = writeln!(out, "universal: {}", r.universal);
    let _ = writeln!(out, "cut vertices: {} (zeta = {})", r.cut_vertices, r.zeta);
    let blocks: Vec<String> = r.blocks.iter().map(VertexSet::to_string).collect();
    let _ = writeln!(out, "blocks: {}", blocks.join(" "));
    let _ = writeln!(out, "block graph: {}", r.is_block_graph);
    let _ = writeln!(out, "chemical: {}", r.is_chemical);
    let witnesses: Vec<String> = r
        .maximal_neighbor_of
        .iter()
        .enumerate()
        .map(|(v, w)| match w {
            Some(y) => format!("{v}->{y}"),
            None => format!("{v}->-"),
        })
        .collect();
    let _ = writeln!(out, "maximal neighbors: {}", witnesses.join(" "));
    let _ = writeln!(out, "every vertex has a maximal neighbor: {}", r.all_have_maximal_neighbor());
    out
}

fn render_report(report: &VerificationReport, format: OutputFormat, timings: bool) -> anyhow::Result<String> {
    if format == OutputFormat::Json {
        let mut doc = serde_json::to_value(report)?;
        if timings {
            doc["elapsed_seconds"] = Value::from(report.elapsed.as_secs_f64());
        }
        return Ok(format!("{doc}\n"));
    }
    Ok(report.render_text(timings))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str], stdin: &str) -> (u8, String) {
        let cli = Cli::try_parse_from(std::iter::once("mdim").chain(args.iter().copied())).unwrap();
        let mut out = Vec::new();
        let status = run(cli, &mut stdin.as_bytes(), &mut out).unwrap();
        (status, String::from_utf8(out).unwrap())
    }

    #[test]
    fn jobs_resolution() {
        assert_eq!(resolve_jobs(Some(3), None).unwrap(), 3);
        assert_eq!(resolve_jobs(Some(3), Some("5")).unwrap(), 5);
        assert_eq!(resolve_jobs(None, None).unwrap(), 0);
        assert!(resolve_jobs(None, Some("x")).is_err());
        assert!(resolve_jobs(Some(0), None).is_err());
    }

    #[test]
    fn mdim_from_stdin_batch() {
        let (status, out) = run_args(&["mdim", "-"], "A_\nBw\n");
        assert_eq!(status, EXIT_OK);
        assert!(out.ends_with('\n'));
        let dims: Vec<&str> = out.lines().filter(|l| l.starts_with("dimension")).collect();
        assert_eq!(dims, vec!["dimension: 2", "dimension: 3"]);
    }

    #[test]
    fn construct_graph6() {
        let (_, out) = run_args(&["construct", "--family", "lambda:5,5"], "");
        assert_eq!(out.len(), 1 + (13 * 12 / 2usize).div_ceil(6) + 1);
        assert_eq!(out.as_bytes()[0], 63 + 13);
    }

    #[test]
    fn format_validation() {
        let cli = Cli::try_parse_from(["mdim", "mdim", "--family", "g6", "--output-format", "dot"]).unwrap();
        assert!(run(cli, &mut "".as_bytes(), &mut Vec::new()).is_err());
        assert!(Cli::try_parse_from(["mdim", "mdim"]).is_err());
        assert!(Cli::try_parse_from(["mdim", "mdim", "x.g6", "--family", "g6"]).is_err());
    }
}
