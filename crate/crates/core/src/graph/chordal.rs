use super::Graph;
use crate::vertex_set::VertexSet;

impl Graph {
    /// Maximum-cardinality search order (first visited first), ties broken
    /// by lowest index.
    fn mcs_order(&self) -> Vec<usize> {
        let n = self.n();
        let mut weight = vec![0usize; n];
        let mut visited = VertexSet::new(n);
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !visited.contains(v))
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("an unvisited vertex remains");
            visited.insert(v);
            order.push(v);
            for u in self.neighbors(v).iter() {
                if !visited.contains(u) {
                    weight[u] += 1;
                }
            }
        }
        order
    }

    /// Checks that eliminating vertices in `order` always removes a
    /// simplicial vertex.
    pub fn is_perfect_elimination_ordering(&self, order: &[usize]) -> bool {
        let n = self.n();
        if order.len() != n {
            return false;
        }
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return false;
            }
            position[v] = i;
        }
        order.iter().enumerate().all(|(i, &v)| {
            let later = VertexSet::from_vertices(
                n,
                self.neighbors(v).iter().filter(|&u| position[u] > i),
            );
            match later.iter().min_by_key(|&u| position[u]) {
                None => true,
                Some(parent) => {
                    let mut rest = later.clone();
                    rest.remove(parent);
                    rest.is_subset(self.neighbors(parent))
                }
            }
        })
    }

    /// A perfect elimination ordering, present exactly when the graph is
    /// chordal. Found by maximum-cardinality search and then verified.
    pub fn perfect_elimination_ordering(&self) -> Option<Vec<usize>> {
        let mut order = self.mcs_order();
        order.reverse();
        self.is_perfect_elimination_ordering(&order).then_some(order)
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_ordering().is_some()
    }
}
