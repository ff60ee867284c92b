//! Immutable simple graphs over contiguous vertex indices `0..n`.
//!
//! Adjacency is stored as one [`VertexSet`] per vertex, so `adj[v]` is the
//! open neighborhood N(v). Structural predicates live in the submodules.

mod chordal;
mod cycles;
mod iso;
mod structure;

pub use structure::TwinPartition;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// An induced subgraph together with the index maps back to its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    /// `old_to_new[v]` is the new index of parent vertex `v`, if it survived.
    pub old_to_new: Vec<Option<usize>>,
    /// `new_to_old[i]` is the parent index of vertex `i`.
    pub new_to_old: Vec<usize>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::IndexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![VertexSet::new(n); n],
        }
    }

    /// Callers guarantee symmetry, irreflexivity and matching capacities.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<VertexSet>) -> Graph {
        debug_assert!(adj.iter().enumerate().all(|(v, nb)| {
            nb.capacity() == adj.len() && !nb.contains(v) && nb.iter().all(|u| adj[u].contains(v))
        }));
        Graph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(VertexSet::len).collect()
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// N(v).
    pub fn open_neighborhood(&self, v: usize) -> Result<&VertexSet> {
        self.check_vertex(v)?;
        Ok(&self.adj[v])
    }

    /// N[v] = N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let mut nb = self.adj[v].clone();
        nb.insert(v);
        Ok(nb)
    }

    /// Unchecked neighborhood access for hot loops.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// The subgraph induced by `keep`, re-indexed contiguously in increasing
    /// original order.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Induced {
        let n = self.n();
        let mut old_to_new = vec![None; n];
        let new_to_old: Vec<usize> = keep.iter().filter(|&v| v < n).collect();
        for (i, &v) in new_to_old.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let m = new_to_old.len();
        let adj = new_to_old
            .iter()
            .map(|&v| {
                VertexSet::from_vertices(m, self.adj[v].iter().filter_map(|u| old_to_new[u]))
            })
            .collect();
        Induced {
            graph: Graph::from_adjacency_unchecked(adj),
            old_to_new,
            new_to_old,
        }
    }

    /// G \ S: deletes the vertices of `removed` (members beyond `n` are ignored).
    pub fn remove_vertices(&self, removed: &VertexSet) -> Induced {
        let keep = (0..self.n()).filter(|&v| !removed.contains(v));
        self.induced_subgraph(&VertexSet::from_vertices(self.n(), keep))
    }

    /// Vertices with an empty open neighborhood.
    pub fn isolated_vertices(&self) -> VertexSet {
        VertexSet::from_vertices(self.n(), (0..self.n()).filter(|&v| self.adj[v].is_empty()))
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(VertexSet::is_empty)
    }

    /// The complement graph.
    pub fn complement(&self) -> Graph {
        let adj = (0..self.n())
            .map(|v| {
                let mut nb = self.adj[v].complement();
                nb.remove(v);
                nb
            })
            .collect();
        Graph::from_adjacency_unchecked(adj)
    }

    /// Re-labels vertices: vertex `v` of `self` becomes `perm[v]`.
    ///
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let n = self.n();
        assert_eq!(perm.len(), n);
        let mut adj = vec![VertexSet::new(n); n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph::from_adjacency_unchecked(adj)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
