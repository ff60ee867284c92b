use super::mask::{dispatch, Kernel, KernelTask, Mask};
use super::{check_total_domination_defined, Budget, SolverConfig};
use crate::error::Result;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// γ_t(G) with the lexicographically least minimum total dominating set.
///
/// Tries sizes from a degree-sum lower bound up to a greedy upper bound.
/// Feasibility of a size is a branch-and-bound that picks, for the smallest
/// undominated vertex, which of its neighbours dominates it, cutting
/// branches whose remaining picks cannot cover the undominated vertices
/// even at maximum degree. The witness is then fixed one element at a
/// time, smallest feasible vertex first.
pub fn total_domination_number(g: &Graph, config: &SolverConfig) -> Result<(usize, VertexSet)> {
    check_total_domination_defined(g)?;
    dispatch(g, TotalDomination { config })
}

struct TotalDomination<'a> {
    config: &'a SolverConfig,
}

impl KernelTask for TotalDomination<'_> {
    type Output = Result<(usize, VertexSet)>;

    fn run<M: Mask>(self, kernel: &Kernel<M>) -> Self::Output {
        let n = kernel.n;
        let mut degrees: Vec<usize> = kernel.nbhd.iter().map(Mask::count).collect();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let mut lower = 0;
        let mut reach = 0;
        while reach < n {
            reach += degrees[lower];
            lower += 1;
        }
        let upper = greedy_cover_size(kernel);

        let mut search = CoverSearch {
            kernel,
            max_degree,
            neighbours: (0..n)
                .map(|v| (0..n).filter(|&w| kernel.nbhd[v].contains(w)).collect())
                .collect(),
            budget: Budget::new(self.config),
        };
        let nothing = M::empty(n);
        for size in lower.max(2)..=upper {
            if search.feasible(&nothing, size, &nothing, 0)? {
                return Ok((size, search.lex_least(size)?));
            }
        }
        unreachable!("the greedy cover of size {upper} is a total dominating set")
    }
}

fn greedy_cover_size<M: Mask>(kernel: &Kernel<M>) -> usize {
    let mut covered = M::empty(kernel.n);
    let mut size = 0;
    while covered != kernel.full {
        let best = (0..kernel.n)
            .max_by_key(|&v| {
                let gain = kernel.nbhd[v].or(&covered).count();
                (gain, std::cmp::Reverse(v))
            })
            .expect("graph is nonempty");
        covered = covered.or(&kernel.nbhd[best]);
        size += 1;
    }
    size
}

struct CoverSearch<'k, M> {
    kernel: &'k Kernel<M>,
    max_degree: usize,
    neighbours: Vec<Vec<usize>>,
    budget: Budget,
}

impl<M: Mask> CoverSearch<'_, M> {
    /// Can at most `remaining` more picks from `floor..`, avoiding `banned`,
    /// complete the footprint?
    fn feasible(&mut self, covered: &M, remaining: usize, banned: &M, floor: usize) -> Result<bool> {
        self.budget.tick()?;
        let k = self.kernel;
        let Some(lowest) = covered.first_missing(&k.full) else {
            return Ok(true);
        };
        if remaining == 0 || k.n - covered.count() > remaining * self.max_degree {
            return Ok(false);
        }
        // Some neighbour of `lowest` must be picked; once a branch fails
        // that neighbour is banned for its siblings.
        let mut banned = banned.clone();
        for i in 0..self.neighbours[lowest].len() {
            let w = self.neighbours[lowest][i];
            if w < floor || banned.contains(w) {
                continue;
            }
            if self.feasible(&covered.or(&k.nbhd[w]), remaining - 1, &banned, floor)? {
                return Ok(true);
            }
            banned = banned.with(w);
        }
        Ok(false)
    }

    /// The lexicographically least total dominating set of `size`, which
    /// must be the minimum size.
    fn lex_least(&mut self, size: usize) -> Result<VertexSet> {
        let k = self.kernel;
        let nothing = M::empty(k.n);
        let mut chosen: Vec<usize> = Vec::with_capacity(size);
        let mut covered = nothing.clone();
        for slot in 0..size {
            let from = chosen.last().map_or(0, |&v| v + 1);
            let mut picked = false;
            for v in from..k.n {
                let next = covered.or(&k.nbhd[v]);
                if self.feasible(&next, size - slot - 1, &nothing, v + 1)? {
                    chosen.push(v);
                    covered = next;
                    picked = true;
                    break;
                }
            }
            assert!(picked, "a feasible size always admits a next element");
        }
        Ok(VertexSet::from_vertices(k.n, chosen))
    }
}
