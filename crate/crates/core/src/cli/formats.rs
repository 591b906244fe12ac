//! Plain-text digraph and partition files, and DOT export.
//!
//! A digraph file starts with `n <order>` and lists one arc `u v` per line.
//! A partition file lists one block per line as space-separated vertex ids.
//! In both, lines starting with `#` and blank lines are ignored. The writers
//! emit the canonical form: sorted arcs, sorted blocks, no comments, and a
//! trailing newline.

use std::fmt::Write as _;

use thiserror::Error;

use crate::digraph::{Arc, Digraph};
use crate::domination::{ArcPartition, VertexPartition};

/// A parse failure with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

/// Non-comment, non-blank lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_id(token: &str, line: usize) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| err(line, format!("expected a vertex id, found {token:?}")))
}

pub fn parse_digraph(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or_else(|| err(1, "missing header \"n <order>\""))?;
    let order = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| err(header_line, format!("invalid vertex count {count:?}")))?,
        _ => return Err(err(header_line, "expected header \"n <order>\"")),
    };
    let mut arcs: Vec<(Arc, usize)> = Vec::new();
    for (line, content) in lines {
        let tokens: Vec<_> = content.split_whitespace().collect();
        let [u, v] = tokens[..] else {
            return Err(err(line, "expected an arc \"u v\""));
        };
        arcs.push(((parse_id(u, line)?, parse_id(v, line)?), line));
    }
    // Validate arc by arc so errors point at the offending line.
    let mut seen = std::collections::BTreeSet::new();
    for &((u, v), line) in &arcs {
        if u >= order || v >= order {
            return Err(err(line, format!("arc ({u}, {v}) has an endpoint outside 0..{order}")));
        }
        if u == v {
            return Err(err(line, format!("arc ({u}, {v}) is a loop")));
        }
        if !seen.insert((u, v)) {
            return Err(err(line, format!("arc ({u}, {v}) is listed more than once")));
        }
    }
    Digraph::new(order, arcs.into_iter().map(|(a, _)| a)).map_err(|e| err(header_line, e.to_string()))
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut out = format!("n {}\n", d.order());
    for (u, v) in d.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parses a partition of `0..order`.
pub fn parse_partition(text: &str, order: usize) -> Result<VertexPartition, ParseError> {
    let mut blocks = Vec::new();
    let mut last_line = 1;
    for (line, content) in content_lines(text) {
        let block = content
            .split_whitespace()
            .map(|t| parse_id(t, line))
            .collect::<Result<Vec<_>, _>>()?;
        blocks.push(block);
        last_line = line;
    }
    VertexPartition::from_blocks(order, &blocks).map_err(|e| err(last_line, e.to_string()))
}

/// Blocks in canonical order, members ascending.
pub fn write_partition(p: &VertexPartition) -> String {
    let mut out = String::new();
    for block in p.canonical().blocks() {
        let ids: Vec<String> = block.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", ids.join(" ")).unwrap();
    }
    out
}

/// One block per line as `u,v` tokens.
pub fn write_arc_partition(q: &ArcPartition) -> String {
    let mut out = String::new();
    for block in q.canonical().blocks() {
        let arcs: Vec<String> = block.iter().map(|(u, v)| format!("{u},{v}")).collect();
        writeln!(out, "{}", arcs.join(" ")).unwrap();
    }
    out
}

/// Graphviz export; `labels[v]` (when given) names vertex `v`.
pub fn to_dot(d: &Digraph, labels: Option<&[String]>) -> String {
    let mut out = String::from("digraph D {\n");
    for v in 0..d.order() {
        let label = labels.map_or_else(|| v.to_string(), |l| l[v].clone());
        writeln!(out, "  {v} [label=\"{}\"];", label.replace('"', "\\\"")).unwrap();
    }
    for (u, v) in d.arcs() {
        writeln!(out, "  {u} -> {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
