//! Bench corpus files.
//!
//! One graph per line, `#` starts a comment. A line is either a generator
//!
//! ```text
//! gnp N P SEED
//! complete K
//! ladder X
//! bipartite-apex S
//! blowup Q <graph>
//! ```
//!
//! or a path to an edge list, relative to the corpus file.

use std::fs::{self, File};
use std::io::BufReader;
use std::path::Path;

use trusslab::graph::io::read_edge_list;
use trusslab::{bipartite_apex, blowup, gen_random, ladder_gadget, Graph, TrussError};

use crate::CliError;

pub(crate) struct CorpusEntry {
    pub name: String,
    pub graph: Graph,
}

pub(crate) fn load(path: &Path) -> Result<Vec<CorpusEntry>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Failure(format!("corpus {}: {e}", path.display())))?;
    let dir = path.parent().unwrap_or(Path::new("."));
    let mut entries = Vec::new();
    for (index, line) in text.lines().enumerate() {
        let entry = line.split('#').next().unwrap_or("").trim();
        if entry.is_empty() {
            continue;
        }
        let fail = |message: String| {
            CliError::Failure(format!(
                "corpus {}: {}",
                path.display(),
                TrussError::Parse {
                    line: index + 1,
                    message
                }
            ))
        };
        let tokens: Vec<&str> = entry.split_whitespace().collect();
        let graph = build(&tokens, dir).map_err(fail)?;
        entries.push(CorpusEntry {
            name: tokens.join(" "),
            graph,
        });
    }
    Ok(entries)
}

fn number<T: std::str::FromStr>(tokens: &[&str], i: usize) -> Result<T, String> {
    let token = tokens
        .get(i)
        .ok_or_else(|| format!("missing argument {i} of {:?}", tokens[0]))?;
    token
        .parse()
        .map_err(|_| format!("invalid number {token:?}"))
}

fn arity(tokens: &[&str], n: usize) -> Result<(), String> {
    if tokens.len() == n + 1 {
        Ok(())
    } else {
        Err(format!("{:?} takes {n} arguments", tokens[0]))
    }
}

fn build(tokens: &[&str], dir: &Path) -> Result<Graph, String> {
    match tokens[0] {
        "gnp" => {
            arity(tokens, 3)?;
            let p: f64 = number(tokens, 2)?;
            if !(0.0..=1.0).contains(&p) {
                return Err(format!("probability {p} is outside [0, 1]"));
            }
            Ok(gen_random(number(tokens, 1)?, p, number(tokens, 3)?))
        }
        "complete" => {
            arity(tokens, 1)?;
            Ok(Graph::complete(number(tokens, 1)?))
        }
        "ladder" => {
            arity(tokens, 1)?;
            Ok(ladder_gadget(number(tokens, 1)?).graph)
        }
        "bipartite-apex" => {
            arity(tokens, 1)?;
            match number(tokens, 1)? {
                0 => Err("side must be at least 1".into()),
                s => Ok(bipartite_apex(s)),
            }
        }
        "blowup" => {
            if tokens.len() < 3 {
                return Err("blowup needs a multiplicity and a graph".into());
            }
            let inner = build(&tokens[2..], dir)?;
            blowup(&inner, number(tokens, 1)?)
                .and_then(|v| v.materialize())
                .map_err(|e| e.to_string())
        }
        _ => {
            let path = dir.join(tokens.join(" "));
            let file = File::open(&path).map_err(|e| format!("{}: {e}", path.display()))?;
            read_edge_list(BufReader::new(file))
                .map(|f| f.graph)
                .map_err(|e| format!("{}: {e}", path.display()))
        }
    }
}
