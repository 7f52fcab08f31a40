//! Line-oriented graph files with 1-based vertex ids.
//!
//! ```text
//! c free-form comment
//! p mwbis <n> <m>
//! w <v> <weight>      optional; all n vertices or none
//! e <u> <v>
//! ```
//!
//! Without `w` lines the instance is MIVC: each weight is the vertex degree.

use std::io::{self, Write};

use mwbis_core::{Graph, GraphError, WeightMode, WeightedInstance};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, PartialEq)]
pub enum ParseErrorKind {
    #[error("missing `p mwbis <n> <m>` header")]
    MissingHeader,
    #[error("second header line")]
    DuplicateHeader,
    #[error("malformed header, expected `p mwbis <n> <m>`")]
    BadHeader,
    #[error("`{0}` line before the header")]
    BeforeHeader(char),
    #[error("unknown line type `{0}`")]
    UnknownLine(String),
    #[error("expected {expected} fields after `{tag}`")]
    FieldCount { tag: char, expected: usize },
    #[error("`{0}` is not a valid number")]
    BadNumber(String),
    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("weight for vertex {0} given twice")]
    DuplicateWeight(usize),
    #[error("weight {weight} for vertex {vertex} must be positive and finite")]
    InvalidWeight { vertex: usize, weight: f64 },
    #[error("{missing} vertices have no `w` line; give all weights or none")]
    MissingWeights { missing: usize },
    #[error("header declares {declared} edges, file has {found} `e` lines")]
    EdgeCount { declared: usize, found: usize },
}

/// A parsed file: the graph, explicit weights if any, and comment text in order.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphFile {
    pub graph: Graph,
    pub weights: Option<Vec<f64>>,
    pub comments: Vec<String>,
}

impl GraphFile {
    pub fn into_instance(self, k: usize) -> Result<WeightedInstance, GraphError> {
        match self.weights {
            Some(w) => WeightedInstance::new(self.graph, w, k),
            None => Ok(WeightedInstance::mivc(self.graph, k)),
        }
    }
}

fn number<T: std::str::FromStr>(token: &str) -> Result<T, ParseErrorKind> {
    token
        .parse()
        .map_err(|_| ParseErrorKind::BadNumber(token.to_owned()))
}

fn vertex(token: &str, n: usize) -> Result<usize, ParseErrorKind> {
    let v: usize = number(token)?;
    if v == 0 || v > n {
        return Err(ParseErrorKind::VertexOutOfRange { vertex: v, n });
    }
    Ok(v - 1)
}

fn fields<'a>(
    tag: char,
    rest: impl Iterator<Item = &'a str>,
    expected: usize,
) -> Result<Vec<&'a str>, ParseErrorKind> {
    let f: Vec<&str> = rest.collect();
    if f.len() != expected {
        return Err(ParseErrorKind::FieldCount { tag, expected });
    }
    Ok(f)
}

pub fn parse_graph(text: &str) -> Result<GraphFile, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut weights: Vec<Option<f64>> = Vec::new();
    let mut any_weight = false;
    let mut comments = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let at = |kind| ParseError { line, kind };
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut tokens = trimmed.split_ascii_whitespace();
        let tag = tokens.next().unwrap_or_default();
        match tag {
            "c" => comments.push(trimmed[1..].trim().to_owned()),
            "p" => {
                if header.is_some() {
                    return Err(at(ParseErrorKind::DuplicateHeader));
                }
                let f: Vec<&str> = tokens.collect();
                if f.len() != 3 || f[0] != "mwbis" {
                    return Err(at(ParseErrorKind::BadHeader));
                }
                let n: usize = number(f[1]).map_err(at)?;
                let m: usize = number(f[2]).map_err(at)?;
                header = Some((n, m));
                weights = vec![None; n];
                edges.reserve(m);
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| at(ParseErrorKind::BeforeHeader('e')))?;
                let f = fields('e', tokens, 2).map_err(at)?;
                let u = vertex(f[0], n).map_err(at)?;
                let v = vertex(f[1], n).map_err(at)?;
                if u == v {
                    return Err(at(ParseErrorKind::SelfLoop(u + 1)));
                }
                edges.push((u, v));
            }
            "w" => {
                let (n, _) = header.ok_or_else(|| at(ParseErrorKind::BeforeHeader('w')))?;
                let f = fields('w', tokens, 2).map_err(at)?;
                let v = vertex(f[0], n).map_err(at)?;
                let w: f64 = number(f[1]).map_err(at)?;
                if !(w.is_finite() && w > 0.0) {
                    return Err(at(ParseErrorKind::InvalidWeight {
                        vertex: v + 1,
                        weight: w,
                    }));
                }
                if weights[v].replace(w).is_some() {
                    return Err(at(ParseErrorKind::DuplicateWeight(v + 1)));
                }
                any_weight = true;
            }
            other => return Err(at(ParseErrorKind::UnknownLine(other.to_owned()))),
        }
    }

    let end = |kind| ParseError {
        line: last_line.max(1),
        kind,
    };
    let (n, m) = header.ok_or_else(|| end(ParseErrorKind::MissingHeader))?;
    if edges.len() != m {
        return Err(end(ParseErrorKind::EdgeCount {
            declared: m,
            found: edges.len(),
        }));
    }
    let weights = if any_weight {
        let missing = weights.iter().filter(|w| w.is_none()).count();
        if missing > 0 {
            return Err(end(ParseErrorKind::MissingWeights { missing }));
        }
        Some(weights.into_iter().flatten().collect())
    } else {
        None
    };
    let graph = Graph::from_edges(n, &edges).expect("edges validated while parsing");
    Ok(GraphFile {
        graph,
        weights,
        comments,
    })
}

/// Writes `instance` with one `c` line per comment. Weight lines appear only for explicit
/// weights; the budget is not stored.
pub fn write_graph<W: Write + ?Sized>(
    out: &mut W,
    instance: &WeightedInstance,
    comments: &[String],
) -> io::Result<()> {
    let g = instance.graph();
    for c in comments {
        for line in c.lines() {
            writeln!(out, "c {line}")?;
        }
    }
    writeln!(out, "p mwbis {} {}", g.n(), g.m())?;
    if instance.mode() == WeightMode::Explicit {
        for (v, w) in instance.weights().iter().enumerate() {
            writeln!(out, "w {} {w}", v + 1)?;
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}
