use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses `n m` followed by `m` lines of `u v` (0-based). Blank lines are
/// ignored; line numbers in errors are 1-based.
pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, message: String| Error::Parse { line, message };

    let (header_line, header) = lines.next().ok_or_else(|| err(1, "missing header".into()))?;
    let [n, m] = parse_pair(header).map_err(|m| err(header_line, m))?;

    let mut edges = Vec::with_capacity(m.min(1 << 20));
    let mut last_line = header_line;
    for (line, text) in lines {
        last_line = line;
        if edges.len() == m {
            return Err(err(line, format!("more than the declared {m} edges")));
        }
        let [u, v] = parse_pair(text).map_err(|msg| err(line, msg))?;
        if u >= n || v >= n {
            return Err(err(line, format!("vertex {} out of range 0..{n}", u.max(v))));
        }
        if u == v {
            return Err(err(line, format!("self-loop at {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(err(
            last_line,
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

fn parse_pair(text: &str) -> std::result::Result<[usize; 2], String> {
    let mut fields = text.split_whitespace();
    let mut next = || -> std::result::Result<usize, String> {
        let field = fields.next().ok_or("expected two integers")?;
        field
            .parse()
            .map_err(|_| format!("not a non-negative integer: {field:?}"))
    };
    let pair = [next()?, next()?];
    if fields.next().is_some() {
        return Err("expected exactly two integers".into());
    }
    Ok(pair)
}

/// `n m` then one `u v` line per edge, `u < v`, lexicographic.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
