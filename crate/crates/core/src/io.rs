//! Line-oriented text format for oriented graphs.
//!
//! ```text
//! # optional comments
//! n 4
//! 0 1
//! 2 1
//! ```
//!
//! The first non-comment line is `n <N>`; each further non-comment line is an
//! arc `<u> <v>` meaning `u -> v`. Blank lines are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{GraphBuilder, GraphError, OrientedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing `n <N>` header")]
    MissingHeader,
    #[error("line {line}: malformed header {text:?}")]
    MalformedHeader { line: usize, text: String },
    #[error("line {line}: malformed arc line {text:?}")]
    MalformedArc { line: usize, text: String },
    #[error("line {line}: {n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { line: usize, n: usize, max: usize },
    #[error("line {line}: vertex {v} out of range for n = {n}")]
    VertexOutOfRange { line: usize, v: usize, n: usize },
    #[error("line {line}: loop at vertex {v}")]
    Loop { line: usize, v: usize },
    #[error("line {line}: duplicate arc {u} -> {v}")]
    DuplicateArc { line: usize, u: usize, v: usize },
    #[error("line {line}: arc {u} -> {v} closes a 2-cycle")]
    TwoCycle { line: usize, u: usize, v: usize },
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn read_graph(text: &str) -> Result<OrientedGraph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let malformed = || ParseError::MalformedHeader { line: hline, text: header.to_string() };
    let mut parts = header.split_whitespace();
    if parts.next() != Some("n") {
        return Err(malformed());
    }
    let n: usize = parts.next().and_then(|t| t.parse().ok()).ok_or_else(malformed)?;
    if parts.next().is_some() {
        return Err(malformed());
    }
    let mut builder = GraphBuilder::new(n).map_err(|e| match e {
        GraphError::TooManyVertices { n, max } => ParseError::TooManyVertices { line: hline, n, max },
        _ => unreachable!("builder construction only fails on size"),
    })?;

    for (line, text) in lines {
        let mut it = text.split_whitespace().map(str::parse::<usize>);
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => (u, v),
            _ => return Err(ParseError::MalformedArc { line, text: text.to_string() }),
        };
        builder.add_arc(u, v).map_err(|e| match e {
            GraphError::VertexOutOfRange { v, n } => ParseError::VertexOutOfRange { line, v, n },
            GraphError::Loop { v } => ParseError::Loop { line, v },
            GraphError::DuplicateArc { u, v } => ParseError::DuplicateArc { line, u, v },
            GraphError::TwoCycle { u, v } => ParseError::TwoCycle { line, u, v },
            GraphError::TooManyVertices { n, max } => ParseError::TooManyVertices { line, n, max },
        })?;
    }
    Ok(builder.build())
}

/// Canonical text: header, then arcs sorted by tail and head.
pub fn write_graph(g: &OrientedGraph) -> String {
    write_graph_with_comments(g, &[])
}

/// Like [`write_graph`], with `# `-prefixed comment lines before the header.
pub fn write_graph_with_comments(g: &OrientedGraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    let _ = writeln!(out, "n {}", g.n());
    for (u, v) in g.arcs() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Values of `# key value` comment lines, in file order.
pub fn comment_values<'a>(text: &'a str, key: &str) -> Vec<&'a str> {
    text.lines()
        .filter_map(|l| l.trim().strip_prefix('#'))
        .filter_map(|l| {
            let l = l.trim();
            let rest = l.strip_prefix(key)?;
            rest.starts_with(char::is_whitespace).then(|| rest.trim())
        })
        .collect()
}
