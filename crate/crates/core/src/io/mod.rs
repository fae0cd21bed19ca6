//! Graph input formats, run configuration and JSON output.

pub mod digraph6;

use std::path::{Path, PathBuf};
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::OrientedGraph;
use crate::search::Budget;

/// Parses an arc list: one `u v` pair per line, optionally preceded by `n N`.
///
/// Blank lines and `#` comments are skipped. Without a header the order is
/// one more than the largest vertex mentioned.
pub fn parse_edge_list(text: &str) -> Result<OrientedGraph> {
    let mut declared = None;
    let mut arcs = Vec::new();
    let mut offset = 0;
    for line in text.lines() {
        let start = offset;
        offset += line.len() + 1;
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        let number = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                offset: start,
                message: format!("expected a vertex index, found {s:?}"),
            })
        };
        match fields.as_slice() {
            ["n", count] if declared.is_none() && arcs.is_empty() => {
                declared = Some(number(count)?)
            }
            [u, v] => arcs.push((number(u)?, number(v)?)),
            _ => {
                return Err(Error::Parse {
                    offset: start,
                    message: format!("expected `u v`, found {body:?}"),
                })
            }
        }
    }
    let implied = arcs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = declared.unwrap_or(implied);
    if implied > n {
        return Err(Error::invalid(format!(
            "arc endpoint {} exceeds declared order {n}",
            implied - 1
        )));
    }
    let mut g = OrientedGraph::empty(n)?;
    for (u, v) in arcs {
        g.add_arc(u, v)?;
    }
    Ok(g)
}

pub fn write_edge_list(g: &OrientedGraph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.arcs() {
        out += &format!("{u} {v}\n");
    }
    out
}

/// Reads graphs from text: digraph6 lines if the first content line starts
/// with `&`, otherwise a single edge list.
pub fn parse_graphs(text: &str) -> Result<Vec<OrientedGraph>> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first {
        Some(l) if l.starts_with('&') => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(digraph6::decode)
            .collect(),
        Some(_) => Ok(vec![parse_edge_list(text)?]),
        None => Err(Error::invalid("no graph in input")),
    }
}

pub fn read_graphs(path: &Path) -> Result<Vec<OrientedGraph>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))?;
    parse_graphs(&text)
}

/// Accepts either a digraph6 string or a path to a graph file.
pub fn graph_argument(arg: &str) -> Result<OrientedGraph> {
    if arg.starts_with('&') {
        return digraph6::decode(arg);
    }
    let mut graphs = read_graphs(Path::new(arg))?;
    match graphs.len() {
        1 => Ok(graphs.remove(0)),
        k => Err(Error::invalid(format!(
            "expected one graph in {arg}, found {k}"
        ))),
    }
}

pub const SCHEMA_VERSION: u32 = 1;

/// Top-level JSON object carrying the schema version and a result kind.
#[derive(Serialize)]
pub struct Envelope<'a, T: Serialize> {
    pub schema: u32,
    pub kind: &'a str,
    #[serde(flatten)]
    pub body: &'a T,
}

pub fn to_json<T: Serialize>(kind: &str, body: &T) -> Value {
    serde_json::to_value(Envelope {
        schema: SCHEMA_VERSION,
        kind,
        body,
    })
    .expect("result types serialise")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Text,
}

/// Settings shared by every command.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub seed: u64,
    pub workers: usize,
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
    pub stats: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: crate::suite::DEFAULT_SEED,
            workers: 1,
            node_budget: None,
            time_budget: None,
            output: None,
            format: OutputFormat::Json,
            stats: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.workers == 0 {
            return Err(Error::invalid("workers must be at least 1"));
        }
        if self.node_budget == Some(0) {
            return Err(Error::invalid("node budget must be positive"));
        }
        if self.time_budget == Some(Duration::ZERO) {
            return Err(Error::invalid("time budget must be positive"));
        }
        Ok(())
    }

    pub fn budget(&self) -> Budget {
        Budget {
            max_nodes: self.node_budget,
            time_limit: self.time_budget,
            ..Budget::default()
        }
    }
}
