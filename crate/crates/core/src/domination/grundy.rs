use std::collections::HashMap;

use super::mask::{dispatch, Kernel, KernelTask, Mask};
use super::{check_total_domination_defined, Budget, SolverConfig, VertexSequence};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// γ_gr^t(G) with a longest total dominating sequence.
///
/// Depth-first search over playable vertices, memoising the best remaining
/// length per footprint. A played vertex has N(v) inside the footprint, so
/// the playable set (and the optimum continuation) depends on the footprint
/// alone. The witness takes the lowest playable vertex that attains the
/// optimum at every step.
pub fn grundy_total_domination_number(
    g: &Graph,
    config: &SolverConfig,
) -> Result<(usize, VertexSequence)> {
    check_total_domination_defined(g)?;
    dispatch(g, Grundy { config })
}

struct Grundy<'a> {
    config: &'a SolverConfig,
}

impl KernelTask for Grundy<'_> {
    type Output = Result<(usize, VertexSequence)>;

    fn run<M: Mask>(self, kernel: &Kernel<M>) -> Self::Output {
        let mut search = MemoSearch {
            kernel,
            memo: HashMap::new(),
            max_entries: self.config.memo_cap_bytes / M::entry_bytes(kernel.n),
            cap_bytes: self.config.memo_cap_bytes,
            budget: Budget::new(self.config),
        };
        let mut footprint = M::empty(kernel.n);
        let best = search.best(&footprint)?;

        let mut witness = Vec::with_capacity(best);
        let mut left = best;
        while left > 0 {
            let mut next = None;
            for v in 0..kernel.n {
                if !kernel.playable(v, &footprint) {
                    continue;
                }
                let child = footprint.or(&kernel.nbhd[v]);
                if 1 + search.best(&child)? == left {
                    next = Some((v, child));
                    break;
                }
            }
            let (v, child) = next.expect("some playable vertex attains the optimum");
            witness.push(v);
            footprint = child;
            left -= 1;
        }
        Ok((best, VertexSequence::from_vec_unchecked(witness)))
    }
}

struct MemoSearch<'k, M> {
    kernel: &'k Kernel<M>,
    memo: HashMap<M, u16>,
    max_entries: usize,
    cap_bytes: usize,
    budget: Budget,
}

impl<M: Mask> MemoSearch<'_, M> {
    /// Longest legal continuation from `footprint`.
    fn best(&mut self, footprint: &M) -> Result<usize> {
        if let Some(&d) = self.memo.get(footprint) {
            return Ok(d as usize);
        }
        self.budget.tick()?;
        let k = self.kernel;
        // Every move covers at least one new vertex.
        let ceiling = k.n - footprint.count();
        let mut best = 0;
        for v in 0..k.n {
            if best == ceiling {
                break;
            }
            if !k.playable(v, footprint) {
                continue;
            }
            let child = footprint.or(&k.nbhd[v]);
            best = best.max(1 + self.best(&child)?);
        }
        if self.memo.len() >= self.max_entries {
            return Err(Error::ResourceLimit {
                cap_bytes: self.cap_bytes,
            });
        }
        self.memo.insert(footprint.clone(), best as u16);
        Ok(best)
    }
}
