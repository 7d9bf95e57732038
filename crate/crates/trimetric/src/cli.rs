//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when a sweep or
//! check finds a violated bound (or a family formula mismatch).

use std::ffi::OsString;
use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::edgelist::parse_edge_list;
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::graph6::{parse_graph6, parse_graph6_lines};
use crate::report::{
    compute_report, render_checks, render_compute, render_family, render_ng, render_scan, Format,
};
use crate::theorems::{
    check_all, exhaustive_scan, ng_scan, tree_scan, verify_family_formula, Status, TheoremId,
    ALL_THEOREMS,
};

#[derive(Parser)]
#[command(
    name = "trimetric",
    version,
    about = "Distance invariants of graphs, centered on the triameter"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute distance and domination invariants for one graph
    Compute {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check named bounds on one graph
    Check {
        #[command(flatten)]
        input: GraphInput,
        /// Comma-separated bound ids, e.g. T01,T13 (default: all)
        #[arg(long, value_name = "IDS")]
        ids: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check bounds on every connected graph in a range of orders
    Scan {
        /// Order range "A-B", or a single order "N"
        #[arg(long, value_name = "A-B")]
        orders: String,
        /// Sweep labeled trees instead of all connected graphs
        #[arg(long)]
        trees: bool,
        /// Comma-separated bound ids (default: all)
        #[arg(long, value_name = "IDS")]
        ids: Option<String>,
        #[command(flatten)]
        workers: WorkerArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Survey triameters of complement pairs at one order
    NgScan {
        /// Graph order (5, 6, or 7)
        #[arg(long, value_name = "N")]
        order: usize,
        #[command(flatten)]
        workers: WorkerArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Verify a closed-form triameter formula across a parameter range
    Family {
        /// Family kind: path, cycle, complete, star, spider, grid, or petersen
        #[arg(long, value_name = "KIND")]
        kind: String,
        /// Smallest parameter value
        #[arg(long, default_value_t = 3)]
        from: usize,
        /// Largest parameter value
        #[arg(long, default_value_t = 12)]
        to: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Literal graph6 string
    #[arg(long, value_name = "G6")]
    graph6: Option<String>,
    /// File holding one graph, as graph6 or an "n m" edge list ("-" = stdin)
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Family spec such as path:6, grid:3,4, or petersen
    #[arg(long, value_name = "SPEC")]
    family: Option<String>,
}

#[derive(Args)]
struct WorkerArgs {
    /// Worker threads for the sweep
    #[arg(long, env = "TRIMETRIC_WORKERS", default_value_t = 1)]
    workers: usize,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format: text, json, or csv
    #[arg(long, default_value = "text")]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
}

impl GraphInput {
    fn load(&self) -> Result<(Graph, String)> {
        if let Some(s) = &self.graph6 {
            return Ok((parse_graph6(s)?, format!("graph6:{s}")));
        }
        if let Some(spec) = &self.family {
            let spec: FamilySpec = spec.parse()?;
            return Ok((spec.generate()?, spec.to_string()));
        }
        let path = self.input.as_ref().expect("clap group guarantees one source");
        let text = if path.as_os_str() == "-" {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        } else {
            fs::read_to_string(path)?
        };
        let graph = parse_graph_text(&text)?;
        Ok((graph, path.display().to_string()))
    }
}

/// Decides between the two file formats. Edge lists start with the numeric
/// "n m" header; graph6 bytes are all >= 63, so a leading ASCII digit can
/// only be an edge list.
fn parse_graph_text(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| Error::InvalidInput("input is empty".into()))?;
    if first.starts_with(|c: char| c.is_ascii_digit()) {
        return parse_edge_list(text);
    }
    let mut graphs = parse_graph6_lines(text)?;
    match graphs.len() {
        1 => Ok(graphs.pop().expect("length checked")),
        k => Err(Error::InvalidInput(format!(
            "input holds {k} graphs; expected exactly one"
        ))),
    }
}

fn parse_orders(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::InvalidInput(format!("bad order range {s:?} (expected \"A-B\" or \"N\")"));
    let parse_one = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    match s.split_once('-') {
        None => Ok(vec![parse_one(s)?]),
        Some((a, b)) => {
            let (a, b) = (parse_one(a)?, parse_one(b)?);
            if a > b {
                return Err(bad());
            }
            Ok((a..=b).collect())
        }
    }
}

fn parse_ids(s: Option<&str>) -> Result<Vec<TheoremId>> {
    match s {
        None => Ok(ALL_THEOREMS.to_vec()),
        Some(s) => s.split(',').map(|t| TheoremId::from_str(t.trim())).collect(),
    }
}

fn emit(out: &OutputArgs, rendered: &str) -> Result<()> {
    match &out.output {
        Some(path) => fs::write(path, rendered)?,
        None => {
            use std::io::Write;
            std::io::stdout().lock().write_all(rendered.as_bytes())?;
        }
    }
    Ok(())
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Compute { input, out } => {
            let (g, source) = input.load()?;
            let report = compute_report(&g, &source)?;
            emit(&out, &render_compute(&report, out.format))?;
            Ok(0)
        }
        Command::Check { input, ids, out } => {
            let (g, _) = input.load()?;
            let ids = parse_ids(ids.as_deref())?;
            let reports = check_all(&g, &ids)?;
            let violated = reports.iter().any(|r| r.status == Status::Violated);
            emit(&out, &render_checks(&reports, out.format))?;
            Ok(if violated { 2 } else { 0 })
        }
        Command::Scan { orders, trees, ids, workers, out } => {
            let orders = parse_orders(&orders)?;
            let ids = parse_ids(ids.as_deref())?;
            let summary = if trees {
                tree_scan(&orders, &ids, workers.workers)?
            } else {
                exhaustive_scan(&orders, &ids, workers.workers)?
            };
            emit(&out, &render_scan(&summary, out.format))?;
            Ok(if summary.total_violations() > 0 { 2 } else { 0 })
        }
        Command::NgScan { order, workers, out } => {
            let summary = ng_scan(order, workers.workers)?;
            emit(&out, &render_ng(&summary, out.format))?;
            Ok(0)
        }
        Command::Family { kind, from, to, out } => {
            let verification = verify_family_formula(&kind, from, to)?;
            let mismatched = verification.mismatches > 0;
            emit(&out, &render_family(&verification, out.format))?;
            Ok(if mismatched { 2 } else { 0 })
        }
    }
}

/// Parses `argv` and runs the selected command, returning the process
/// exit code instead of exiting, so tests can drive it directly.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        // A closed pipe on stdout (e.g. piping into `head`) is not an error.
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
