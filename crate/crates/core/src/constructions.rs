//! The graph families used throughout: complete and complete multipartite
//! graphs, stars, paths, cycles, crowns, line graphs, direct products and
//! bipartite double covers.
//!
//! Every constructor fixes its index layout so witnesses are reproducible.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// K_n on `0..n`.
pub fn complete_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidSize("complete graph needs n >= 1".into()));
    }
    complete_multipartite(&vec![1; n])
}

/// Complete multipartite graph; part `i` occupies the next `sizes[i]`
/// consecutive indices.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::InvalidSize(
            "part sizes must be nonempty and positive".into(),
        ));
    }
    let n: usize = sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<_> = edges.filter(|&(u, v)| part[u] != part[v]).collect();
    Graph::new(n, edges)
}

/// K_{1,leaves} with the centre at index 0.
pub fn star(leaves: usize) -> Result<Graph> {
    if leaves == 0 {
        return Err(Error::InvalidSize("star needs at least one leaf".into()));
    }
    Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

/// P_n: 0 - 1 - ... - (n-1).
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidSize("path needs n >= 1".into()));
    }
    Graph::new(n, (1..n).map(|v| (v - 1, v)))
}

/// C_n: the path plus the edge (n-1, 0).
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidSize("cycle needs n >= 3".into()));
    }
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// K_{n,n} minus a perfect matching: a_i = i, b_i = n + i, a_i ~ b_j iff
/// i != j.
pub fn crown(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidSize("crown needs n >= 2".into()));
    }
    let edges = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, n + j)));
    Graph::new(2 * n, edges.collect::<Vec<_>>())
}

/// L(G). Vertex `i` of the line graph is `labels[i]`, the i-th edge of `g`
/// in lexicographic order; two vertices are adjacent iff the edges share an
/// endpoint.
pub fn line_graph(g: &Graph) -> Result<(Graph, Vec<(usize, usize)>)> {
    let labels: Vec<(usize, usize)> = g.edges().collect();
    if labels.is_empty() {
        return Err(Error::NoEdges);
    }
    let m = labels.len();
    let mut edges = Vec::new();
    for i in 0..m {
        let (a, b) = labels[i];
        for (j, &(c, d)) in labels.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                edges.push((i, j));
            }
        }
    }
    Ok((Graph::new(m, edges)?, labels))
}

/// L(K_n) together with its edge labels.
pub fn line_graph_of_complete(n: usize) -> Result<(Graph, Vec<(usize, usize)>)> {
    line_graph(&complete_graph(n)?)
}

/// G × H. Vertex `(g, h)` has index `g * |V(H)| + h`.
pub fn direct_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.n();
    let n = g.n() * nh;
    let mut adj = vec![VertexSet::new(n); n];
    for (g1, g2) in g.edges() {
        for (h1, h2) in h.edges() {
            for (a, b) in [((g1, h1), (g2, h2)), ((g1, h2), (g2, h1))] {
                let x = a.0 * nh + a.1;
                let y = b.0 * nh + b.1;
                adj[x].insert(y);
                adj[y].insert(x);
            }
        }
    }
    Graph::from_adjacency_unchecked(adj)
}

/// G × K_2 laid out as two parts: v_i' = i and v_i'' = n + i, with
/// v_i' ~ v_j'' iff v_i v_j is an edge of G.
pub fn bipartite_double_cover(g: &Graph) -> Graph {
    let n = g.n();
    let edges = g.edges().flat_map(|(u, v)| [(u, n + v), (v, n + u)]);
    Graph::new(2 * n, edges.collect::<Vec<_>>()).expect("indices are in range by construction")
}

/// G ⊔ H with H's vertices shifted by |V(G)|.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.n();
    let edges = g
        .edges()
        .chain(h.edges().map(|(u, v)| (u + shift, v + shift)));
    Graph::new(shift + h.n(), edges.collect::<Vec<_>>())
        .expect("indices are in range by construction")
}
