use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use stk_cli::{ReportFormat, ReportWriter};
use stk_core::closure::closure;
use stk_core::graph::{enumerate_graphs, is_connected, parse_edge_list, to_edge_list, MAX_ENUMERATION_N};
use stk_core::spectral::{extremal_rho_quotient, spectral_radius, DEFAULT_TOL};
use stk_core::trees::{has_k_ended_tree, min_leaf_spanning_tree, Decision, DEFAULT_TREE_BUDGET};
use stk_core::verify::{parse_corpus_spec, run_corpus_with, CheckConfig, ClaimId};
use stk_core::{extremal_graph, parse_graph6, to_graph6, Error, Graph, Params};

/// Spanning k-ended trees: generation, closure, spectral radius, tree search
/// and claim verification over graph corpora.
#[derive(Parser)]
#[command(name = "stk", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Oracle {
    Quotient,
}

#[derive(clap::Args)]
struct Input {
    /// Read the graph from this file instead of standard input.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Graph encoding for input and output.
    #[arg(long, value_enum, default_value = "graph6")]
    format: GraphFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Print the extremal graph K_t ∇ (K_{n−k−2t+1} ∪ (k+t−1)K_1) (extremal_graph).
    GenExtremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value = "graph6")]
        format: GraphFormat,
    },
    /// Print the l-closure of the input graph (closure).
    Closure {
        #[arg(long)]
        l: usize,
        /// Emit JSON with the added edges instead of the bare graph.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Spectral radius of the input graph (spectral_radius), or of the
    /// extremal graph from its quotient matrix (extremal_rho_quotient).
    Rho {
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum)]
        oracle: Option<Oracle>,
        #[arg(long, required_if_eq("oracle", "quotient"))]
        n: Option<usize>,
        #[arg(long, required_if_eq("oracle", "quotient"))]
        k: Option<usize>,
        #[arg(long, required_if_eq("oracle", "quotient"))]
        t: Option<usize>,
        #[command(flatten)]
        input: Input,
    },
    /// Decide whether the input graph has a spanning tree with at most k
    /// leaves (has_k_ended_tree, or min_leaf_spanning_tree with --exact).
    Tree {
        #[arg(long)]
        k: usize,
        /// Compute a minimum-leaf spanning tree.
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = DEFAULT_TREE_BUDGET)]
        budget: u64,
        #[command(flatten)]
        input: Input,
    },
    /// Evaluate a claim over a corpus (run_corpus). Exits with status 2 if a
    /// counterexample is found.
    Verify {
        /// One of T1..T7, L1, L2, L4, L5, C1.
        #[arg(long)]
        claim: String,
        /// enumerate:<n>[:connected], sample:gnp:<n>:<p>:<count>:<seed>[:<minconn>],
        /// sample:perturb:<count>:<seed>, sample:closed:<count>:<seed>, extremal,
        /// g6:<string>, or a graph6 file.
        #[arg(long)]
        corpus: String,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
        /// Order for parameterized corpora.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, env = "STK_THREADS", default_value_t = 1)]
        threads: usize,
        #[arg(long, default_value_t = DEFAULT_TREE_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
    },
    /// List every labelled graph on n vertices (enumerate_graphs).
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long, value_enum, default_value = "graph6")]
        format: GraphFormat,
    },
}

#[derive(Debug)]
enum Failure {
    Core(Error),
    Io(io::Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Io(e) => write!(f, "{e}"),
            Failure::Usage(m) => f.write_str(m),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn read_graph(input: &Input) -> Result<Graph, Failure> {
    let text = match &input.input {
        Some(p) => std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    Ok(match input.format {
        GraphFormat::Edgelist => parse_edge_list(&text)?,
        GraphFormat::Graph6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| Failure::Usage("no graph on input".into()))?;
            parse_graph6(line.as_bytes())?
        }
    })
}

fn render(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Graph6 => format!("{}\n", to_graph6(g)),
        GraphFormat::Edgelist => to_edge_list(g),
    }
}

fn emit_json(v: &serde_json::Value) -> io::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, v)?;
    out.write_all(b"\n")
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::GenExtremal { n, k, t, format } => {
            let g = extremal_graph(&Params::new(k, t, n)?)?;
            print!("{}", render(&g, format));
        }
        Command::Closure { l, trace, input } => {
            let g = read_graph(&input)?;
            let (cl, tr) = closure(&g, l);
            if trace {
                emit_json(&json!({ "graph6": to_graph6(&cl), "trace": tr }))?;
            } else {
                print!("{}", render(&cl, input.format));
            }
        }
        Command::Rho { tol, oracle, n, k, t, input } => match oracle {
            Some(Oracle::Quotient) => {
                let p = Params::new(k.unwrap_or(0), t.unwrap_or(0), n.unwrap_or(0))?;
                let rho: f64 = extremal_rho_quotient(&p)?;
                emit_json(&json!({ "rho": rho, "oracle": "quotient" }))?;
            }
            None => {
                let g = read_graph(&input)?;
                let est = spectral_radius::<f64>(&g, tol)?;
                emit_json(&json!({ "rho": est.rho, "residual": est.residual, "iterations": est.iterations }))?;
            }
        },
        Command::Tree { k, exact, budget, input } => {
            let g = read_graph(&input)?;
            if k < 2 {
                return Err(Failure::Usage(format!("--k {k}: must be at least 2")));
            }
            let (decision, witness, nodes) = if exact {
                let m = min_leaf_spanning_tree(&g, budget)?;
                let d = if m.witness.leaf_count <= k {
                    Decision::Yes
                } else if m.exact {
                    Decision::No
                } else {
                    Decision::Unknown
                };
                (d, Some(m.witness), m.nodes_expanded)
            } else {
                let d = has_k_ended_tree(&g, k, budget)?;
                (d.decision, d.witness, d.nodes_expanded)
            };
            emit_json(&json!({
                "decision": decision,
                "leaf_count": witness.as_ref().map(|w| w.leaf_count),
                "edges": witness.as_ref().map(|w| &w.edges),
                "nodes_expanded": nodes,
            }))?;
        }
        Command::Verify { claim, corpus, k, t, n, threads, budget, tol, seed, format } => {
            let claim: ClaimId = claim.parse()?;
            if !(tol > 0.0) {
                return Err(Failure::Usage(format!("--tol {tol}: must be positive")));
            }
            let params = n.map(|n| Params::new(k, t, n)).transpose()?;
            let records = parse_corpus_spec(&corpus)?.records(params)?;
            let cfg = CheckConfig { k, t, budget, tol, seed };
            let fmt = match format {
                OutFormat::Json => ReportFormat::Json,
                OutFormat::Csv => ReportFormat::Csv,
            };
            let mut writer = ReportWriter::new(io::BufWriter::new(io::stdout().lock()), fmt)?;
            let mut io_err = None;
            let summary = run_corpus_with(records, &[claim], &cfg, threads, |r| {
                if r.is_counterexample() {
                    eprintln!("COUNTEREXAMPLE {} on {}: replay with {}", r.claim_id, r.graph_id, r.replay.as_deref().unwrap_or(""));
                }
                if io_err.is_none() {
                    io_err = writer.write(&r).err();
                }
            })?;
            if let Some(e) = io_err {
                return Err(e.into());
            }
            writer.finish(Some(&summary))?;
            if matches!(fmt, ReportFormat::Csv) {
                eprintln!(
                    "summary: verified={} vacuous={} unknown={} counterexamples={}",
                    summary.verified, summary.vacuous, summary.unknown, summary.counterexamples
                );
            }
            return Ok(summary.counterexamples > 0);
        }
        Command::Enumerate { n, connected, format } => {
            if n > MAX_ENUMERATION_N {
                return Err(Failure::Usage(format!("--n {n}: at most {MAX_ENUMERATION_N}")));
            }
            let mut out = io::BufWriter::new(io::stdout().lock());
            for g in enumerate_graphs(n, |g| !connected || is_connected(g))? {
                out.write_all(render(&g, format).as_bytes())?;
            }
            out.flush()?;
        }
    }
    Ok(false)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(2),
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
