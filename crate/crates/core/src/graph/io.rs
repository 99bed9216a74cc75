//! Plain-text edge lists: one `u v` pair per line, `#` starts a comment.
//! A trailing `# spurious` comment marks an edge as spurious.

use std::collections::HashMap;
use std::io::{self, BufRead, Write};

use super::{Graph, GraphView, NodeId};
use crate::error::{Result, TrussError};

const SPURIOUS_TAG: &str = "spurious";

/// A graph read from an edge list together with per-edge spurious marks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListFile {
    pub graph: Graph,
    /// Indexed by edge id; an edge repeated in the input keeps the mark of
    /// its first occurrence.
    pub spurious: Vec<bool>,
}

impl EdgeListFile {
    pub fn has_spurious(&self) -> bool {
        self.spurious.iter().any(|&s| s)
    }
}

pub fn parse_edge_list(text: &str) -> Result<EdgeListFile> {
    read_edge_list(text.as_bytes())
}

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<EdgeListFile> {
    let mut ids: HashMap<(NodeId, NodeId), usize> = HashMap::new();
    let mut endpoints = Vec::new();
    let mut spurious = Vec::new();
    let mut n = 0;
    for (index, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = index + 1;
        let (data, comment) = match line.split_once('#') {
            Some((data, comment)) => (data, Some(comment.trim())),
            None => (line.as_str(), None),
        };
        let mut fields = data.split_whitespace();
        let Some(first) = fields.next() else {
            if let Some(declared) = comment.and_then(declared_nodes) {
                n = n.max(declared);
            }
            continue;
        };
        let second = fields.next().ok_or_else(|| TrussError::Parse {
            line: lineno,
            message: "expected two node ids".into(),
        })?;
        if fields.next().is_some() {
            return Err(TrussError::Parse {
                line: lineno,
                message: "more than two fields".into(),
            });
        }
        let u = parse_node(first, lineno)?;
        let v = parse_node(second, lineno)?;
        if u == v {
            continue;
        }
        let pair = (u.min(v), u.max(v));
        if ids.contains_key(&pair) {
            continue;
        }
        ids.insert(pair, endpoints.len());
        endpoints.push(pair);
        spurious.push(comment == Some(SPURIOUS_TAG));
        n = n.max(pair.1 + 1);
    }
    Ok(EdgeListFile {
        graph: Graph::from_simple_edges(n, endpoints),
        spurious,
    })
}

/// Node count from a `nodes N ...` header comment, so isolated nodes survive
/// a round trip.
fn declared_nodes(comment: &str) -> Option<usize> {
    let mut words = comment.split_whitespace();
    (words.next() == Some("nodes")).then(|| words.next()?.parse().ok())?
}

fn parse_node(token: &str, line: usize) -> Result<NodeId> {
    token.parse().map_err(|_| TrussError::Parse {
        line,
        message: format!("invalid node id {token:?}"),
    })
}

/// Writes `g` in edge-id order. When `spurious` is given, marked edges get a
/// trailing `# spurious` comment.
pub fn write_edge_list<W: Write>(
    mut out: W,
    g: &Graph,
    spurious: Option<&[bool]>,
) -> io::Result<()> {
    writeln!(out, "# nodes {} edges {}", g.node_count(), g.edge_count())?;
    for (e, &(u, v)) in g.edge_list().iter().enumerate() {
        if spurious.is_some_and(|s| s[e]) {
            writeln!(out, "{u} {v} # {SPURIOUS_TAG}")?;
        } else {
            writeln!(out, "{u} {v}")?;
        }
    }
    Ok(())
}
