use super::Graph;

impl Graph {
    /// Some isomorphism `self -> other` as an index map, found by
    /// backtracking with degree and adjacency consistency checks.
    ///
    /// Exponential in the worst case; intended for the small and highly
    /// structured graphs used in verification.
    pub fn find_isomorphism(&self, other: &Graph) -> Option<Vec<usize>> {
        let n = self.n();
        if n != other.n() || self.edge_count() != other.edge_count() {
            return None;
        }
        let mut da = self.degrees();
        let mut db = other.degrees();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return None;
        }
        // Map vertices in BFS-ish order so each new vertex has mapped
        // neighbours to constrain it.
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        for root in 0..n {
            if placed[root] {
                continue;
            }
            placed[root] = true;
            order.push(root);
            let mut i = order.len() - 1;
            while i < order.len() {
                for u in self.neighbors(order[i]).iter() {
                    if !placed[u] {
                        placed[u] = true;
                        order.push(u);
                    }
                }
                i += 1;
            }
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.iso_extend(other, &order, 0, &mut map, &mut used)
            .then_some(map)
    }

    fn iso_extend(
        &self,
        other: &Graph,
        order: &[usize],
        depth: usize,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&v) = order.get(depth) else {
            return true;
        };
        for w in 0..other.n() {
            if used[w] || self.degree(v) != other.degree(w) {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&u| self.has_edge(u, v) == other.has_edge(map[u], w));
            if !consistent {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if self.iso_extend(other, order, depth + 1, map, used) {
                return true;
            }
            used[w] = false;
            map[v] = usize::MAX;
        }
        false
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.find_isomorphism(other).is_some()
    }
}

#[cfg(test)]
mod tests {
    use crate::constructions::*;

    #[test]
    fn isomorphism_examples() {
        let c4 = cycle(4).unwrap();
        let k22 = complete_multipartite(&[2, 2]).unwrap();
        let map = c4.find_isomorphism(&k22).unwrap();
        assert_eq!(c4.permute(&map), k22);
        assert!(!path(4).unwrap().is_isomorphic(&star(3).unwrap()));
        assert!(!cycle(6).unwrap().is_isomorphic(&disjoint_union(
            &cycle(3).unwrap(),
            &cycle(3).unwrap()
        )));
        assert!(crown(3).unwrap().is_isomorphic(&cycle(6).unwrap()));
    }
}
