//! Text formats for graphs, subdivision solutions, and witness sets.
//!
//! Graph format: header `p sub <n> <m>`, then `m` lines `e <u> <v>` with
//! 0-based ids. Writers emit `u < v` sorted lexicographically; lines starting
//! with `#` are ignored on read. Solution format: header `s <t>`, then `t`
//! lines `d <u> <v>` in application order. Vertex sets use `v <id>` lines and
//! edge sets `x <u> <v>` lines under the same `s <t>` header.

use crate::graph::{Graph, SubdivisionStep, VertexId};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, msg: msg.into() })
}

/// Significant (non-comment, non-blank) lines with their 1-based numbers.
fn significant_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

fn parse_usize(line: usize, tok: Option<&str>, what: &str) -> Result<usize, ParseError> {
    match tok {
        Some(t) => t
            .parse::<usize>()
            .map_err(|_| ParseError { line, msg: format!("invalid {what}: {t:?}") }),
        None => err(line, format!("missing {what}")),
    }
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p sub {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

pub fn read_graph(text: &str) -> Result<Graph, ParseError> {
    let lines = significant_lines(text);
    let mut it = lines.iter();
    let &(hline, header) = match it.next() {
        Some(l) => l,
        None => return err(0, "empty graph file"),
    };
    let mut toks = header.split_ascii_whitespace();
    if toks.next() != Some("p") || toks.next() != Some("sub") {
        return err(hline, "expected header `p sub <n> <m>`");
    }
    let n = parse_usize(hline, toks.next(), "vertex count")?;
    let m = parse_usize(hline, toks.next(), "edge count")?;
    if toks.next().is_some() {
        return err(hline, "trailing tokens in header");
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let &(eline, line) = match it.next() {
            Some(l) => l,
            None => return err(hline, format!("expected {m} edge lines")),
        };
        let mut toks = line.split_ascii_whitespace();
        if toks.next() != Some("e") {
            return err(eline, "expected edge line `e <u> <v>`");
        }
        let u = parse_usize(eline, toks.next(), "endpoint")?;
        let v = parse_usize(eline, toks.next(), "endpoint")?;
        if toks.next().is_some() {
            return err(eline, "trailing tokens in edge line");
        }
        edges.push((u, v));
    }
    if let Some(&(l, _)) = it.next() {
        return err(l, "unexpected content after edge list");
    }
    Graph::from_edges(n, &edges).map_err(|e| ParseError { line: hline, msg: e.to_string() })
}

pub fn write_solution(sol: &[SubdivisionStep]) -> String {
    let mut out = String::new();
    writeln!(out, "s {}", sol.len()).unwrap();
    for step in sol {
        writeln!(out, "d {} {}", step.u, step.v).unwrap();
    }
    out
}

pub fn read_solution(text: &str) -> Result<Vec<SubdivisionStep>, ParseError> {
    read_tagged_pairs(text, "d").map(|pairs| {
        pairs.into_iter().map(|(u, v)| SubdivisionStep::new(u, v)).collect()
    })
}

pub fn write_edge_set(edges: &[(VertexId, VertexId)]) -> String {
    let mut out = String::new();
    writeln!(out, "s {}", edges.len()).unwrap();
    for (u, v) in edges {
        writeln!(out, "x {} {}", u.min(v), u.max(v)).unwrap();
    }
    out
}

pub fn read_edge_set(text: &str) -> Result<Vec<(VertexId, VertexId)>, ParseError> {
    read_tagged_pairs(text, "x")
}

pub fn write_vertex_set(verts: &[VertexId]) -> String {
    let mut out = String::new();
    writeln!(out, "s {}", verts.len()).unwrap();
    for v in verts {
        writeln!(out, "v {v}").unwrap();
    }
    out
}

pub fn read_vertex_set(text: &str) -> Result<Vec<VertexId>, ParseError> {
    let lines = significant_lines(text);
    let mut it = lines.iter();
    let &(hline, header) = match it.next() {
        Some(l) => l,
        None => return err(0, "empty witness file"),
    };
    let mut toks = header.split_ascii_whitespace();
    if toks.next() != Some("s") {
        return err(hline, "expected header `s <t>`");
    }
    let t = parse_usize(hline, toks.next(), "entry count")?;
    let mut out = Vec::with_capacity(t);
    for _ in 0..t {
        let &(vline, line) = match it.next() {
            Some(l) => l,
            None => return err(hline, format!("expected {t} entries")),
        };
        let mut toks = line.split_ascii_whitespace();
        if toks.next() != Some("v") {
            return err(vline, "expected `v <id>`");
        }
        out.push(parse_usize(vline, toks.next(), "vertex id")?);
        if toks.next().is_some() {
            return err(vline, "trailing tokens");
        }
    }
    if let Some(&(l, _)) = it.next() {
        return err(l, "unexpected content after entries");
    }
    Ok(out)
}

fn read_tagged_pairs(text: &str, tag: &str) -> Result<Vec<(usize, usize)>, ParseError> {
    let lines = significant_lines(text);
    let mut it = lines.iter();
    let &(hline, header) = match it.next() {
        Some(l) => l,
        None => return err(0, "empty file"),
    };
    let mut toks = header.split_ascii_whitespace();
    if toks.next() != Some("s") {
        return err(hline, "expected header `s <t>`");
    }
    let t = parse_usize(hline, toks.next(), "entry count")?;
    let mut out = Vec::with_capacity(t);
    for _ in 0..t {
        let &(pline, line) = match it.next() {
            Some(l) => l,
            None => return err(hline, format!("expected {t} entries")),
        };
        let mut toks = line.split_ascii_whitespace();
        let found = toks.next();
        if found != Some(tag) {
            return err(pline, format!("expected `{tag} <u> <v>`"));
        }
        let u = parse_usize(pline, toks.next(), "endpoint")?;
        let v = parse_usize(pline, toks.next(), "endpoint")?;
        if toks.next().is_some() {
            return err(pline, "trailing tokens");
        }
        out.push((u, v));
    }
    if let Some(&(l, _)) = it.next() {
        return err(l, "unexpected content after entries");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip_is_id_identical() {
        let g = Graph::from_edges(5, &[(1, 0), (2, 4), (0, 3)]).unwrap();
        let text = write_graph(&g);
        assert_eq!(text, "p sub 5 3\ne 0 1\ne 0 3\ne 2 4\n");
        assert_eq!(read_graph(&text).unwrap(), g);
    }

    #[test]
    fn comments_ignored_on_read() {
        let text = "# corpus entry\np sub 3 2\n# middle comment\ne 0 1\ne 1 2\n";
        assert_eq!(read_graph(text).unwrap(), Graph::path(3));
    }

    #[test]
    fn malformed_inputs_report_line() {
        assert_eq!(read_graph("p sub 2 1\n").unwrap_err().line, 1);
        assert_eq!(read_graph("p sub 2 1\nq 0 1\n").unwrap_err().line, 2);
        assert_eq!(read_graph("p sub 2 1\ne 0 5\n").unwrap_err().line, 1);
        assert!(read_graph("").is_err());
    }

    #[test]
    fn solution_round_trip() {
        let sol = vec![SubdivisionStep::new(0, 1), SubdivisionStep::new(3, 1)];
        let text = write_solution(&sol);
        assert_eq!(text, "s 2\nd 0 1\nd 3 1\n");
        assert_eq!(read_solution(&text).unwrap(), sol);
    }

    #[test]
    fn witness_set_round_trips() {
        let vs = vec![4, 0, 2];
        assert_eq!(read_vertex_set(&write_vertex_set(&vs)).unwrap(), vs);
        let es = vec![(0, 1), (2, 3)];
        assert_eq!(read_edge_set(&write_edge_set(&es)).unwrap(), es);
    }
}
