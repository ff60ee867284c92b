use std::fmt::Write;

use crate::graph::Graph;

/// Undirected DOT: every vertex declared in index order, then the edges in
/// lexicographic order.
pub fn write_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        writeln!(out, "  {v};").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
