//! Accuracy and runtime table over a corpus.
//!
//! Rows are emitted in corpus order, then estimator, epsilon, zeta and seed
//! order, independent of how many threads ran the cells. Summary lines start
//! with `#`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::ops::Range;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, ValueEnum};
use rayon::prelude::*;
use trusslab::{
    compute_supports, estimate_trussness, threshold_estimate, truss_decomposition, EstimateConfig,
    GraphView, GrowthRule,
};

use crate::corpus::{self, CorpusEntry};
use crate::{CliError, CliResult};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Estimator {
    Exact,
    Threshold,
    Approx,
}

impl Estimator {
    fn name(self) -> &'static str {
        match self {
            Estimator::Exact => "exact",
            Estimator::Threshold => "threshold",
            Estimator::Approx => "approx",
        }
    }
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Corpus file listing graphs, one per line.
    #[arg(long)]
    corpus: PathBuf,
    #[arg(
        long,
        value_enum,
        value_delimiter = ',',
        default_value = "exact,threshold,approx"
    )]
    estimators: Vec<Estimator>,
    #[arg(long, value_delimiter = ',', default_value = "0.5")]
    epsilons: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "110")]
    zetas: Vec<f64>,
    /// Seeds as a list of values or half-open ranges, e.g. `0..100,250`.
    #[arg(long, value_delimiter = ',', default_value = "0", value_parser = parse_seeds)]
    seeds: Vec<Range<u64>>,
    /// Grow the clique parameter by (1 + epsilon) in the approx estimator.
    #[arg(long)]
    pseudocode_growth: bool,
    /// Leave out the runtime column so the table is reproducible byte for byte.
    #[arg(long)]
    no_timing: bool,
}

fn parse_seeds(s: &str) -> Result<Range<u64>, String> {
    let bad = |_| format!("invalid seed {s:?}");
    match s.split_once("..") {
        Some((a, b)) => Ok(a.trim().parse().map_err(bad)?..b.trim().parse().map_err(bad)?),
        None => {
            let v: u64 = s.trim().parse().map_err(bad)?;
            Ok(v..v + 1)
        }
    }
}

struct Truth {
    n: usize,
    m: usize,
    triangles: u64,
    trussness: usize,
}

#[derive(Clone, Copy)]
struct Cell {
    graph: usize,
    estimator: Estimator,
    epsilon: Option<f64>,
    zeta: Option<f64>,
    seed: Option<u64>,
}

struct Outcome {
    estimate: f64,
    exact_flag: bool,
    fallback: Option<bool>,
    millis: f64,
}

fn as_f64(r: num_rational::Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn evaluate(cell: &Cell, corpus: &[CorpusEntry], growth: GrowthRule) -> CliResult<Outcome> {
    let g = &corpus[cell.graph].graph;
    let started = Instant::now();
    let mut outcome = match cell.estimator {
        Estimator::Exact => Outcome {
            estimate: truss_decomposition(g).0.trussness as f64,
            exact_flag: true,
            fallback: None,
            millis: 0.0,
        },
        Estimator::Threshold => Outcome {
            estimate: as_f64(threshold_estimate(g, cell.epsilon.unwrap())?.estimate),
            exact_flag: false,
            fallback: None,
            millis: 0.0,
        },
        Estimator::Approx => {
            let cfg = EstimateConfig {
                zeta: cell.zeta.unwrap(),
                seed: cell.seed.unwrap(),
                growth,
            };
            let r = estimate_trussness(g, cell.epsilon.unwrap(), &cfg)?;
            Outcome {
                estimate: as_f64(r.estimate),
                exact_flag: r.exact_flag,
                fallback: Some(r.trace.iter().all(|t| t.fell_back)),
                millis: 0.0,
            }
        }
    };
    outcome.millis = started.elapsed().as_secs_f64() * 1e3;
    Ok(outcome)
}

/// Whether an estimate meets the estimator's own guarantee.
fn within(cell: &Cell, estimate: f64, t: usize) -> bool {
    let t = t as f64;
    let slack = 1e-9;
    match cell.estimator {
        Estimator::Exact => estimate == t,
        Estimator::Threshold => {
            let c = 3.0 + cell.epsilon.unwrap();
            estimate <= t + slack && t <= c * estimate + slack
        }
        Estimator::Approx => (estimate - t).abs() <= cell.epsilon.unwrap() * t + slack,
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

fn thread_cap() -> Option<usize> {
    std::env::var("TRUSSLAB_THREADS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&n| n > 0)
}

pub(crate) fn run(args: &BenchArgs, out: &mut Vec<u8>, summary: &mut String) -> CliResult<()> {
    for &eps in &args.epsilons {
        if !(eps > 0.0 && eps < 1.0) {
            return Err(CliError::Usage(format!("epsilon {eps} is outside (0, 1)")));
        }
    }
    for &zeta in &args.zetas {
        if !(zeta > 0.0 && zeta.is_finite()) {
            return Err(CliError::Usage(format!("zeta {zeta} must be positive")));
        }
    }
    let corpus = corpus::load(&args.corpus)?;
    let seeds: Vec<u64> = args.seeds.iter().flat_map(|r| r.clone()).collect();
    let mut estimators = args.estimators.clone();
    estimators.sort();
    estimators.dedup();

    let truths: Vec<Truth> = corpus
        .iter()
        .map(|c| Truth {
            n: c.graph.node_count(),
            m: c.graph.edge_count(),
            triangles: compute_supports(&c.graph).triangle_count,
            trussness: truss_decomposition(&c.graph).0.trussness,
        })
        .collect();

    let mut cells = Vec::new();
    for graph in 0..corpus.len() {
        for &estimator in &estimators {
            let base = Cell {
                graph,
                estimator,
                epsilon: None,
                zeta: None,
                seed: None,
            };
            match estimator {
                Estimator::Exact => cells.push(base),
                Estimator::Threshold => cells.extend(args.epsilons.iter().map(|&e| Cell {
                    epsilon: Some(e),
                    ..base
                })),
                Estimator::Approx => {
                    for &e in &args.epsilons {
                        for &z in &args.zetas {
                            cells.extend(seeds.iter().map(|&s| Cell {
                                epsilon: Some(e),
                                zeta: Some(z),
                                seed: Some(s),
                                ..base
                            }));
                        }
                    }
                }
            }
        }
    }

    let growth = if args.pseudocode_growth {
        GrowthRule::Pseudocode
    } else {
        GrowthRule::Proof
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = thread_cap() {
        pool = pool.num_threads(n);
    }
    let pool = pool
        .build()
        .map_err(|e| CliError::Failure(format!("thread pool: {e}")))?;
    let started = Instant::now();
    let outcomes: Vec<CliResult<Outcome>> = pool.install(|| {
        cells
            .par_iter()
            .map(|c| evaluate(c, &corpus, growth))
            .collect()
    });

    let mut header = "graph,n,m,triangles,exact,estimator,epsilon,zeta,seed,estimate,ratio,within,exact_flag,fallback".to_string();
    if !args.no_timing {
        header.push_str(",runtime_ms");
    }
    writeln!(out, "{header}")?;
    // (estimator, epsilon, zeta) -> (runs, within, fallbacks)
    let mut groups: BTreeMap<(Estimator, String, String), (usize, usize, usize)> = BTreeMap::new();
    for (cell, outcome) in cells.iter().zip(outcomes) {
        let o = outcome?;
        let truth = &truths[cell.graph];
        let ratio = match (truth.trussness, o.estimate) {
            (0, 0.0) => "1".to_string(),
            (0, _) => "inf".to_string(),
            (t, e) => format!("{:.6}", e / t as f64),
        };
        let ok = within(cell, o.estimate, truth.trussness);
        let mut row = String::new();
        let _ = write!(
            row,
            "{},{},{},{},{},{},{},{},{},{:.6},{},{},{},{}",
            csv_field(&corpus[cell.graph].name),
            truth.n,
            truth.m,
            truth.triangles,
            truth.trussness,
            cell.estimator.name(),
            opt(cell.epsilon),
            opt(cell.zeta),
            opt(cell.seed),
            o.estimate,
            ratio,
            ok,
            o.exact_flag,
            opt(o.fallback),
        );
        if !args.no_timing {
            let _ = write!(row, ",{:.3}", o.millis);
        }
        writeln!(out, "{row}")?;
        let group = groups
            .entry((cell.estimator, opt(cell.epsilon), opt(cell.zeta)))
            .or_default();
        group.0 += 1;
        group.1 += ok as usize;
        group.2 += o.fallback.unwrap_or(false) as usize;
    }
    for ((estimator, eps, zeta), (runs, ok, fallbacks)) in &groups {
        let mut line = format!("# summary estimator={}", estimator.name());
        if !eps.is_empty() {
            let _ = write!(line, " epsilon={eps}");
        }
        if !zeta.is_empty() {
            let _ = write!(line, " zeta={zeta}");
        }
        let _ = write!(
            line,
            " runs={runs} within={ok} within_rate={:.4}",
            *ok as f64 / *runs as f64
        );
        if *estimator == Estimator::Approx {
            let _ = write!(
                line,
                " fallback_rate={:.4}",
                *fallbacks as f64 / *runs as f64
            );
        }
        writeln!(out, "{line}")?;
    }
    if !args.no_timing {
        writeln!(
            out,
            "# wall_ms={:.3}",
            started.elapsed().as_secs_f64() * 1e3
        )?;
    }
    let _ = write!(
        summary,
        "command=\"bench\" graphs={} cells={}",
        corpus.len(),
        cells.len()
    );
    Ok(())
}
