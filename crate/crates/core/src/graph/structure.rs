use std::collections::{HashMap, VecDeque};

use super::Graph;
use crate::vertex_set::VertexSet;

/// Classes of mutually false-twin vertices (equal open neighborhoods),
/// ordered by their smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinPartition {
    pub classes: Vec<VertexSet>,
}

impl TwinPartition {
    pub fn is_discrete(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }

    /// Lowest-index member of each class, increasing.
    pub fn representatives(&self) -> Vec<usize> {
        self.classes.iter().filter_map(VertexSet::first).collect()
    }
}

impl Graph {
    /// Components ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = VertexSet::new(n);
        let mut components = Vec::new();
        for root in 0..n {
            if seen.contains(root) {
                continue;
            }
            let mut comp = VertexSet::new(n);
            let mut stack = vec![root];
            seen.insert(root);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for u in self.neighbors(v).iter() {
                    if !seen.contains(u) {
                        seen.insert(u);
                        stack.push(u);
                    }
                }
            }
            components.push(comp);
        }
        components
    }

    /// True iff the graph has at least one vertex and a single component.
    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.connected_components().len() == 1
    }

    /// BFS 2-colouring: `Ok(colour)` or `Err(odd closed walk)`.
    fn two_colour(&self) -> Result<Vec<u8>, Vec<usize>> {
        let n = self.n();
        let mut colour = vec![u8::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            if colour[root] != u8::MAX {
                continue;
            }
            colour[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v).iter() {
                    if colour[u] == u8::MAX {
                        colour[u] = 1 - colour[v];
                        parent[u] = v;
                        queue.push_back(u);
                    } else if colour[u] == colour[v] {
                        let path_to_root = |mut x: usize| {
                            let mut p = vec![x];
                            while x != root {
                                x = parent[x];
                                p.push(x);
                            }
                            p
                        };
                        // root .. v, u .. root closes an odd walk.
                        let mut walk: Vec<usize> = path_to_root(v).into_iter().rev().collect();
                        walk.extend(path_to_root(u));
                        return Err(walk);
                    }
                }
            }
        }
        Ok(colour)
    }

    /// A 2-colouring `(X, Y)` if the graph is bipartite. The smallest vertex
    /// of every component lands in `X`.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let colour = self.two_colour().ok()?;
        let n = self.n();
        let x = VertexSet::from_vertices(n, (0..n).filter(|&v| colour[v] == 0));
        let y = x.complement();
        Some((x, y))
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_colour().is_ok()
    }

    /// For a non-bipartite graph, a closed walk of odd length given as
    /// `w0, w1, ..., w0` (first and last entries equal).
    pub fn odd_closed_walk(&self) -> Option<Vec<usize>> {
        self.two_colour().err()
    }

    /// The common degree, if every vertex has the same degree. `None` for
    /// the 0-vertex graph.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut degrees = (0..self.n()).map(|v| self.degree(v));
        let d = degrees.next()?;
        degrees.all(|e| e == d).then_some(d)
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.fill(usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[v] >= b {
                        break;
                    }
                }
                for u in self.neighbors(v).iter() {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        parent[u] = v;
                        queue.push_back(u);
                    } else if parent[v] != u {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Partition into classes of vertices with equal open neighborhoods.
    pub fn false_twin_partition(&self) -> TwinPartition {
        let mut index: HashMap<&VertexSet, usize> = HashMap::new();
        let mut classes: Vec<VertexSet> = Vec::new();
        for v in 0..self.n() {
            let slot = *index.entry(self.neighbors(v)).or_insert_with(|| {
                classes.push(VertexSet::new(self.n()));
                classes.len() - 1
            });
            classes[slot].insert(v);
        }
        TwinPartition { classes }
    }

    pub fn is_false_twin_free(&self) -> bool {
        self.false_twin_partition().is_discrete()
    }

    /// Keeps the lowest-indexed vertex of each twin class. Returns the
    /// collapsed graph and, for each of its vertices, the original index.
    pub fn collapse_false_twins(&self) -> (Graph, Vec<usize>) {
        let reps = self.false_twin_partition().representatives();
        let induced = self.induced_subgraph(&VertexSet::from_vertices(self.n(), reps));
        (induced.graph, induced.new_to_old)
    }

    /// Parts of a complete multipartite structure (u ~ v iff different
    /// parts), ordered by smallest member; `None` if there is none.
    ///
    /// An edgeless graph on n ≥ 1 vertices is reported as a single part.
    pub fn complete_multipartite_parts(&self) -> Option<Vec<VertexSet>> {
        let n = self.n();
        let mut assigned = VertexSet::new(n);
        let mut parts = Vec::new();
        for v in 0..n {
            if assigned.contains(v) {
                continue;
            }
            // In a complete multipartite graph the part of v is V \ N(v).
            let part = self.neighbors(v).complement();
            for u in part.iter() {
                if assigned.contains(u) || self.neighbors(u) != self.neighbors(v) {
                    return None;
                }
            }
            assigned.union_with(&part);
            parts.push(part);
        }
        Some(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;

    #[test]
    fn components_examples() {
        let two_k2 = disjoint_union(&complete_graph(2).unwrap(), &complete_graph(2).unwrap());
        assert_eq!(two_k2.connected_components().len(), 2);
        assert!(!two_k2.is_connected());
        assert!(cycle(6).unwrap().is_connected());
        let k3k2 = direct_product(&complete_graph(3).unwrap(), &complete_graph(2).unwrap());
        assert!(k3k2.is_connected());
        assert!(!Graph::empty(0).is_connected());
    }

    #[test]
    fn bipartite_examples() {
        let (x, y) = cycle(6).unwrap().bipartition().unwrap();
        assert_eq!(x.to_vec(), vec![0, 2, 4]);
        assert_eq!(y.to_vec(), vec![1, 3, 5]);
        assert!(complete_graph(3).unwrap().bipartition().is_none());
        let (lk6, _) = line_graph(&complete_graph(6).unwrap()).unwrap();
        assert!(lk6.bipartition().is_none());
    }

    #[test]
    fn bipartition_puts_component_minimum_in_x() {
        let g = Graph::new(5, [(1, 0), (3, 2), (4, 3)]).unwrap();
        let (x, _) = g.bipartition().unwrap();
        assert_eq!(x.to_vec(), vec![0, 2, 4]);
    }

    #[test]
    fn regular_examples() {
        assert_eq!(cycle(5).unwrap().regular_degree(), Some(2));
        assert_eq!(star(3).unwrap().regular_degree(), None);
        let (lk6, _) = line_graph(&complete_graph(6).unwrap()).unwrap();
        assert_eq!(lk6.regular_degree(), Some(8));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(cycle(5).unwrap().girth(), Some(5));
        assert_eq!(path(7).unwrap().girth(), None);
        assert_eq!(star(4).unwrap().girth(), None);
        assert_eq!(crown(4).unwrap().girth(), Some(4));
        assert_eq!(complete_graph(4).unwrap().girth(), Some(3));
        assert_eq!(crown(3).unwrap().girth(), Some(6));
    }

    #[test]
    fn twin_examples() {
        let k23 = complete_multipartite(&[2, 3]).unwrap();
        let tp = k23.false_twin_partition();
        assert_eq!(tp.classes.len(), 2);
        assert_eq!(tp.classes[0].to_vec(), vec![0, 1]);
        assert_eq!(tp.classes[1].to_vec(), vec![2, 3, 4]);
        let (collapsed, map) = k23.collapse_false_twins();
        assert_eq!(collapsed, complete_graph(2).unwrap());
        assert_eq!(map, vec![0, 2]);

        assert!(cycle(6).unwrap().is_false_twin_free());
        assert!(crown(3).unwrap().is_false_twin_free());
    }

    #[test]
    fn multipartite_examples() {
        let parts = complete_graph(5).unwrap().complete_multipartite_parts().unwrap();
        assert_eq!(parts.len(), 5);
        assert!(parts.iter().all(|p| p.len() == 1));

        let parts = cycle(4).unwrap().complete_multipartite_parts().unwrap();
        let parts: Vec<_> = parts.iter().map(VertexSet::to_vec).collect();
        assert_eq!(parts, vec![vec![0, 2], vec![1, 3]]);

        assert!(path(4).unwrap().complete_multipartite_parts().is_none());
        assert!(disjoint_union(&complete_graph(2).unwrap(), &complete_graph(2).unwrap())
            .complete_multipartite_parts()
            .is_none());
    }
}
