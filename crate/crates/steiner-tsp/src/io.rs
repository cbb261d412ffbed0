//! Text formats: edge lists ("n m" header then one "u v" line per edge, with
//! '#' comments), tree files (same format flagged with a "# tree" comment),
//! and cycles as a single line of space-separated vertex indices.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spanning::SpanningTree;

fn parse_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let stripped = raw.split('#').next().unwrap_or("").trim();
        if stripped.is_empty() {
            None
        } else {
            Some((i + 1, stripped))
        }
    })
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it
        .next()
        .ok_or_else(|| parse_error(line_no, "expected two integers"))?;
    let b = it
        .next()
        .ok_or_else(|| parse_error(line_no, "expected two integers"))?;
    if it.next().is_some() {
        return Err(parse_error(line_no, "trailing tokens"));
    }
    let a = a
        .parse()
        .map_err(|_| parse_error(line_no, format!("bad integer {a:?}")))?;
    let b = b
        .parse()
        .map_err(|_| parse_error(line_no, format!("bad integer {b:?}")))?;
    Ok((a, b))
}

/// Parses "n m" followed by m "u v" lines into (n, edges).
pub fn parse_edge_list(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut lines = significant_lines(text);
    let (line_no, header) = lines.next().ok_or_else(|| parse_error(0, "empty input"))?;
    let (n, m) = parse_pair(line_no, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        edges.push(parse_pair(line_no, line)?);
    }
    if edges.len() != m {
        return Err(parse_error(
            0,
            format!("header declares {m} edges but {} found", edges.len()),
        ));
    }
    Ok((n, edges))
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let (n, edges) = parse_edge_list(text)?;
    Graph::from_edge_list(n, &edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Reads a tree file and validates it as a spanning tree of `g`.
pub fn read_tree(text: &str, g: &Graph) -> Result<SpanningTree> {
    let (n, edges) = parse_edge_list(text)?;
    if n != g.vertex_count() {
        return Err(parse_error(
            0,
            format!("tree has {n} vertices but graph has {}", g.vertex_count()),
        ));
    }
    SpanningTree::from_edges(g, edges)
}

pub fn write_tree(t: &SpanningTree) -> String {
    let mut out = String::from("# tree\n");
    out.push_str(&format!("{} {}\n", t.vertex_count(), t.edges().len()));
    for &(u, v) in t.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Single line of space-separated vertex indices in cyclic order.
pub fn write_cycle(seq: &[usize]) -> String {
    let mut out = seq
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    out.push('\n');
    out
}

pub fn parse_cycle(text: &str) -> Result<Vec<usize>> {
    let mut seq = Vec::new();
    for (line_no, line) in significant_lines(text) {
        for tok in line.split_whitespace() {
            seq.push(
                tok.parse()
                    .map_err(|_| parse_error(line_no, format!("bad integer {tok:?}")))?,
            );
        }
    }
    if seq.is_empty() {
        return Err(parse_error(0, "empty cycle"));
    }
    Ok(seq)
}
