//! Command-line front end for trusslab.
//!
//! Everything goes through [`run`], which parses arguments, executes one
//! subcommand and returns the process exit code: 0 on success, 1 on I/O or
//! parse failures, 2 on usage errors.

mod bench;
mod corpus;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use trusslab::graph::io::{read_edge_list, write_edge_list, EdgeListFile};
use trusslab::sampler::DEFAULT_ZETA;
use trusslab::{
    add_spurious_cliques, approx_truss_order, bipartite_apex, blowup, compute_supports,
    degeneracy_order, estimate_trussness, gen_random, ladder_gadget, list_triangles,
    sample_hypergraph, threshold_estimate, truss_decomposition, EstimateConfig, GraphView,
    GrowthRule, SamplerConfig, TrussError,
};

pub use bench::BenchArgs;

#[derive(Parser, Debug)]
#[command(
    name = "trusslab",
    version,
    about = "Truss decomposition, triangle sampling and trussness estimation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the report to PATH instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Graph file format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
    /// Print a run summary with wall time to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    /// One `u v` pair per line; `#` starts a comment.
    Edgelist,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact and approximate trussness.
    #[command(subcommand)]
    Truss(TrussCmd),
    /// Triangle counting and listing.
    #[command(subcommand)]
    Triangles(TrianglesCmd),
    /// Print a vertex or edge order.
    Order(OrderArgs),
    /// Sample the triangle hypergraph.
    Sample(SampleArgs),
    /// Emit a gadget graph as an edge list.
    #[command(subcommand)]
    Gadget(GadgetCmd),
    /// Generate graphs.
    #[command(subcommand)]
    Gen(GenCmd),
    /// Accuracy and runtime table over a corpus of graphs.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct Input {
    /// Edge list file; stdin when omitted or `-`.
    input: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Copy)]
struct SamplingArgs {
    /// Target accuracy, in (0, 1).
    #[arg(long, default_value_t = 0.5)]
    epsilon: f64,
    /// Sample-size constant; values above 108 carry the accuracy guarantee.
    #[arg(long, default_value_t = DEFAULT_ZETA)]
    zeta: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum TrussCmd {
    /// Print the trussness of the graph.
    Exact(Input),
    /// Print `u v t` for every edge, in edge-id order.
    Decompose(Input),
    /// Randomized (1 +- epsilon) estimate.
    Approx {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        sampling: SamplingArgs,
        /// Grow the clique parameter by (1 + epsilon) instead of (1 + epsilon / 6).
        #[arg(long)]
        pseudocode_growth: bool,
    },
    /// Deterministic (3 + epsilon) estimate by support thresholding.
    Threshold {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 0.1)]
        epsilon: f64,
    },
}

#[derive(Subcommand, Debug)]
enum TrianglesCmd {
    /// Print the number of triangles.
    Count(Input),
    /// Print every triangle as `u v w`.
    List(Input),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum OrderKind {
    /// Exact truss order: `e u v forward_support`.
    Truss,
    /// Degeneracy order: `u forward_degree`.
    Degeneracy,
    /// Approximate truss order: `e u v sampled_degree`.
    Approx,
}

#[derive(Args, Debug)]
struct OrderArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum, default_value_t = OrderKind::Truss)]
    kind: OrderKind,
    #[command(flatten)]
    sampling: SamplingArgs,
}

#[derive(Args, Debug)]
struct SampleArgs {
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    sampling: SamplingArgs,
}

#[derive(Subcommand, Debug)]
enum GadgetCmd {
    /// q-fold blow-up of the input graph.
    Blowup {
        #[arg(short)]
        q: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Input graph plus disjoint spurious (x + 2)-cliques.
    Spurious {
        #[arg(short)]
        x: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Clique K_x with x pendants of increasing attachment.
    Ladder {
        #[arg(short)]
        x: usize,
    },
    /// Complete bipartite graph K_{s,s} plus an apex.
    BipartiteApex {
        #[arg(short)]
        s: usize,
    },
}

#[derive(Subcommand, Debug)]
enum GenCmd {
    /// Erdos-Renyi G(n, p).
    Random {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Failure of a subcommand, split by exit code.
#[derive(Debug)]
pub(crate) enum CliError {
    Usage(String),
    Failure(String),
}

impl From<TrussError> for CliError {
    fn from(e: TrussError) -> Self {
        match e {
            TrussError::Parse { .. } | TrussError::Io(_) => CliError::Failure(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Failure(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `args` (program name first), runs the subcommand and returns the
/// exit code. Reports go to `out` (or `--out`), diagnostics to `err`.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    2
                }
            };
        }
    };

    let started = Instant::now();
    let mut report = Vec::new();
    let mut summary = String::new();
    let result = execute(&cli, stdin, &mut report, &mut summary).and_then(|()| match &cli.out {
        Some(path) => File::create(path)
            .and_then(|mut f| f.write_all(&report))
            .map_err(|e| CliError::Failure(format!("{}: {e}", path.display()))),
        None => out.write_all(&report).map_err(CliError::from),
    });
    match result {
        Ok(()) => {
            if cli.verbose {
                let _ = writeln!(
                    err,
                    "# {summary} wall_ms={:.3}",
                    started.elapsed().as_secs_f64() * 1e3
                );
            }
            0
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(CliError::Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn load(input: &Input, stdin: &mut dyn BufRead) -> CliResult<EdgeListFile> {
    match input.input.as_deref() {
        None => Ok(read_edge_list(stdin)?),
        Some(p) if p.as_os_str() == "-" => Ok(read_edge_list(stdin)?),
        Some(p) => {
            let file =
                File::open(p).map_err(|e| CliError::Failure(format!("{}: {e}", p.display())))?;
            read_edge_list(BufReader::new(file)).map_err(|e| match e {
                TrussError::Parse { .. } => CliError::Failure(format!("{}: {e}", p.display())),
                e => e.into(),
            })
        }
    }
}

fn sampler_config(s: &SamplingArgs) -> CliResult<SamplerConfig> {
    Ok(SamplerConfig::new(s.epsilon, s.zeta, s.seed)?)
}

fn describe<G: GraphView>(summary: &mut String, command: &str, g: &G) {
    let _ = write!(
        summary,
        "command={command:?} n={} m={}",
        g.node_count(),
        g.edge_count()
    );
}

fn echo_sampling(summary: &mut String, s: &SamplingArgs) {
    let _ = write!(
        summary,
        " epsilon={} zeta={} seed={}",
        s.epsilon, s.zeta, s.seed
    );
}

fn execute(
    cli: &Cli,
    stdin: &mut dyn BufRead,
    out: &mut Vec<u8>,
    summary: &mut String,
) -> CliResult<()> {
    match &cli.command {
        Command::Truss(cmd) => truss(cmd, stdin, out, summary),
        Command::Triangles(cmd) => {
            let (input, name) = match cmd {
                TrianglesCmd::Count(i) => (i, "triangles count"),
                TrianglesCmd::List(i) => (i, "triangles list"),
            };
            let g = load(input, stdin)?.graph;
            describe(summary, name, &g);
            match cmd {
                TrianglesCmd::Count(_) => {
                    writeln!(out, "{}", compute_supports(&g).triangle_count)?;
                }
                TrianglesCmd::List(_) => {
                    let mut lines = String::new();
                    list_triangles(&g, |t| {
                        let [a, b, c] = t.nodes;
                        let _ = writeln!(lines, "{a} {b} {c}");
                    });
                    out.write_all(lines.as_bytes())?;
                }
            }
            Ok(())
        }
        Command::Order(args) => order(args, stdin, out, summary),
        Command::Sample(args) => {
            let cfg = sampler_config(&args.sampling)?;
            let g = load(&args.input, stdin)?.graph;
            describe(summary, "sample", &g);
            echo_sampling(summary, &args.sampling);
            let s = sample_hypergraph(&g, &degeneracy_order(&g), &cfg);
            writeln!(
                out,
                "# p={} fallback={} hyperedges={} passes={}",
                s.realized_p,
                s.fell_back_to_exact,
                s.hyperedges.len(),
                s.passes
            )?;
            for [a, b, c] in &s.hyperedges {
                writeln!(out, "{a} {b} {c}")?;
            }
            Ok(())
        }
        Command::Gadget(cmd) => gadget(cmd, stdin, out, summary),
        Command::Gen(GenCmd::Random { n, p, seed }) => {
            if !(0.0..=1.0).contains(p) {
                return Err(CliError::Usage(format!(
                    "probability {p} is outside [0, 1]"
                )));
            }
            let g = gen_random(*n, *p, *seed);
            describe(summary, "gen random", &g);
            let _ = write!(summary, " seed={seed}");
            write_edge_list(out, &g, None)?;
            Ok(())
        }
        Command::Bench(args) => bench::run(args, out, summary),
    }
}

fn truss(
    cmd: &TrussCmd,
    stdin: &mut dyn BufRead,
    out: &mut Vec<u8>,
    summary: &mut String,
) -> CliResult<()> {
    match cmd {
        TrussCmd::Exact(input) => {
            let g = load(input, stdin)?.graph;
            describe(summary, "truss exact", &g);
            writeln!(out, "{}", truss_decomposition(&g).0.trussness)?;
        }
        TrussCmd::Decompose(input) => {
            let g = load(input, stdin)?.graph;
            describe(summary, "truss decompose", &g);
            let (dec, _) = truss_decomposition(&g);
            for (&(u, v), t) in g.edge_list().iter().zip(&dec.edge_trussness) {
                writeln!(out, "{u} {v} {t}")?;
            }
        }
        TrussCmd::Approx {
            input,
            sampling,
            pseudocode_growth,
        } => {
            let g = load(input, stdin)?.graph;
            describe(summary, "truss approx", &g);
            echo_sampling(summary, sampling);
            let cfg = EstimateConfig {
                zeta: sampling.zeta,
                seed: sampling.seed,
                growth: if *pseudocode_growth {
                    GrowthRule::Pseudocode
                } else {
                    GrowthRule::Proof
                },
            };
            let r = estimate_trussness(&g, sampling.epsilon, &cfg)?;
            writeln!(out, "{}", r.estimate)?;
            writeln!(out, "exact_flag {}", r.exact_flag)?;
            writeln!(out, "amplified_estimate {}", r.amplified_estimate)?;
            writeln!(out, "iterations {}", r.iterations)?;
            writeln!(out, "round x marker fell_back realized_p hyperedges")?;
            for (i, t) in r.trace.iter().enumerate() {
                writeln!(
                    out,
                    "{i} {} {} {} {} {}",
                    t.x, t.marker, t.fell_back, t.realized_p, t.hyperedges
                )?;
            }
        }
        TrussCmd::Threshold { input, epsilon } => {
            let g = load(input, stdin)?.graph;
            describe(summary, "truss threshold", &g);
            let _ = write!(summary, " epsilon={epsilon}");
            let r = threshold_estimate(&g, *epsilon)?;
            writeln!(out, "{}", r.estimate)?;
            writeln!(out, "round edges triangles")?;
            for (i, round) in r.rounds.iter().enumerate() {
                writeln!(out, "{i} {} {}", round.edges, round.triangles)?;
            }
        }
    }
    Ok(())
}

fn order(
    args: &OrderArgs,
    stdin: &mut dyn BufRead,
    out: &mut Vec<u8>,
    summary: &mut String,
) -> CliResult<()> {
    let cfg = match args.kind {
        OrderKind::Approx => Some(sampler_config(&args.sampling)?),
        _ => None,
    };
    let g = load(&args.input, stdin)?.graph;
    describe(summary, "order", &g);
    match args.kind {
        OrderKind::Truss => {
            let (_, order) = truss_decomposition(&g);
            writeln!(out, "# e u v forward_support")?;
            for (&e, f) in order.order.iter().zip(&order.forward_support) {
                let (u, v) = g.endpoints(e);
                writeln!(out, "{e} {u} {v} {f}")?;
            }
        }
        OrderKind::Degeneracy => {
            let info = degeneracy_order(&g);
            writeln!(out, "# u forward_degree (degeneracy {})", info.degeneracy)?;
            for &u in &info.order {
                writeln!(out, "{u} {}", info.forward_degrees[u])?;
            }
        }
        OrderKind::Approx => {
            echo_sampling(summary, &args.sampling);
            let order = approx_truss_order(&g, &cfg.expect("validated above"));
            writeln!(
                out,
                "# e u v sampled_degree (p={} fallback={})",
                order.sample.realized_p, order.sample.fell_back_to_exact
            )?;
            for (&e, d) in order.order.iter().zip(&order.sampled_forward_degree) {
                let (u, v) = g.endpoints(e);
                writeln!(out, "{e} {u} {v} {d}")?;
            }
        }
    }
    Ok(())
}

fn gadget(
    cmd: &GadgetCmd,
    stdin: &mut dyn BufRead,
    out: &mut Vec<u8>,
    summary: &mut String,
) -> CliResult<()> {
    match cmd {
        GadgetCmd::Blowup { q, input } => {
            let base = load(input, stdin)?.graph;
            let g = blowup(&base, *q)?.materialize()?;
            describe(summary, "gadget blowup", &g);
            write_edge_list(out, &g, None)?;
        }
        GadgetCmd::Spurious { x, input } => {
            let base = load(input, stdin)?.graph;
            let aug = add_spurious_cliques(&base, *x)?;
            describe(summary, "gadget spurious", &aug.graph);
            write_edge_list(out, &aug.graph, Some(&aug.spurious))?;
        }
        GadgetCmd::Ladder { x } => {
            let ladder = ladder_gadget(*x);
            describe(summary, "gadget ladder", &ladder.graph);
            write_edge_list(out, &ladder.graph, None)?;
        }
        GadgetCmd::BipartiteApex { s } => {
            if *s == 0 {
                return Err(CliError::Usage("side must be at least 1".into()));
            }
            let g = bipartite_apex(*s);
            describe(summary, "gadget bipartite-apex", &g);
            write_edge_list(out, &g, None)?;
        }
    }
    Ok(())
}
