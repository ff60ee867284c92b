use super::Graph;

impl Graph {
    /// The lexicographically first vertex tuple inducing a 5-cycle, or if
    /// none exists a 6-cycle. Tuples are normalised so the first vertex is
    /// the smallest and the second is smaller than the last.
    pub fn induced_c5_or_c6(&self) -> Option<Vec<usize>> {
        self.induced_cycle(5).or_else(|| self.induced_cycle(6))
    }

    /// First induced cycle of exactly `len` vertices (`len >= 4`).
    pub fn induced_cycle(&self, len: usize) -> Option<Vec<usize>> {
        assert!(len >= 4, "induced cycles shorter than 4 are triangles");
        let mut path = Vec::with_capacity(len);
        for start in 0..self.n() {
            path.clear();
            path.push(start);
            if self.extend_induced_path(&mut path, len) {
                return Some(path);
            }
        }
        None
    }

    fn extend_induced_path(&self, path: &mut Vec<usize>, len: usize) -> bool {
        let start = path[0];
        let last = *path.last().expect("path is never empty");
        let closing = path.len() + 1 == len;
        for next in self.neighbors(last).iter() {
            if next <= start || path.contains(&next) {
                continue;
            }
            if closing && next < path[1] {
                continue;
            }
            // Only consecutive vertices may be adjacent, plus next ~ start
            // when it closes the cycle.
            let chord = path[..path.len() - 1]
                .iter()
                .enumerate()
                .any(|(i, &w)| self.has_edge(w, next) != (closing && i == 0));
            if chord {
                continue;
            }
            path.push(next);
            if closing || self.extend_induced_path(path, len) {
                return true;
            }
            path.pop();
        }
        false
    }
}
