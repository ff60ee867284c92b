use std::collections::{BTreeSet, HashSet};

use super::mask::{dispatch, Kernel, KernelTask, Mask};
use super::{
    check_total_domination_defined, is_legal_sequence, total_domination_number, Budget,
    Footprint, SolverConfig, VertexSequence,
};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph [`open_uniformity_lengths`] will enumerate.
pub const OPEN_UNIFORMITY_MAX_N: usize = 12;

/// Completes a legal prefix to a total dominating sequence by repeatedly
/// playing the lowest playable vertex.
pub fn extend_to_total_dominating_sequence(g: &Graph, prefix: &[usize]) -> Result<VertexSequence> {
    check_total_domination_defined(g)?;
    if !is_legal_sequence(g, prefix)? {
        let mut fp = Footprint::new(g);
        let position = prefix
            .iter()
            .position(|&v| {
                let bad = !fp.admits(g, v);
                fp.push(g, v);
                bad
            })
            .expect("an illegal sequence has an inadmissible entry");
        return Err(Error::IllegalPrefix { position });
    }
    let mut fp = Footprint::new(g);
    let mut seq = prefix.to_vec();
    for &v in prefix {
        fp.push(g, v);
    }
    while let Some(v) = (0..g.n()).find(|&v| fp.admits(g, v)) {
        fp.push(g, v);
        seq.push(v);
    }
    Ok(VertexSequence::from_vec_unchecked(seq))
}

/// A total dominating sequence of exactly `len` vertices, if one exists.
///
/// Independent of the γ_t / γ_gr^t solvers: a depth-first search that
/// plays lowest-index vertices first and remembers failed
/// (footprint, remaining length) states.
pub fn exists_tds_of_length(
    g: &Graph,
    len: usize,
    config: &SolverConfig,
) -> Result<Option<VertexSequence>> {
    check_total_domination_defined(g)?;
    dispatch(g, ExactLength { len, config })
}

struct ExactLength<'a> {
    len: usize,
    config: &'a SolverConfig,
}

impl KernelTask for ExactLength<'_> {
    type Output = Result<Option<VertexSequence>>;

    fn run<M: Mask>(self, kernel: &Kernel<M>) -> Self::Output {
        let mut search = ExactSearch {
            kernel,
            failed: HashSet::new(),
            max_entries: self.config.memo_cap_bytes / (M::entry_bytes(kernel.n) + 8),
            cap_bytes: self.config.memo_cap_bytes,
            budget: Budget::new(self.config),
            seq: Vec::new(),
        };
        let found = search.find(&M::empty(kernel.n), self.len)?;
        Ok(found.then(|| VertexSequence::from_vec_unchecked(search.seq)))
    }
}

struct ExactSearch<'k, M> {
    kernel: &'k Kernel<M>,
    failed: HashSet<(M, usize)>,
    max_entries: usize,
    cap_bytes: usize,
    budget: Budget,
    seq: Vec<usize>,
}

impl<M: Mask> ExactSearch<'_, M> {
    fn find(&mut self, footprint: &M, remaining: usize) -> Result<bool> {
        let k = self.kernel;
        let uncovered = k.n - footprint.count();
        if remaining == 0 || uncovered == 0 {
            return Ok(remaining == 0 && uncovered == 0);
        }
        if remaining > uncovered {
            return Ok(false);
        }
        let key = (footprint.clone(), remaining);
        if self.failed.contains(&key) {
            return Ok(false);
        }
        self.budget.tick()?;
        for v in 0..k.n {
            if !k.playable(v, footprint) {
                continue;
            }
            self.seq.push(v);
            if self.find(&footprint.or(&k.nbhd[v]), remaining - 1)? {
                return Ok(true);
            }
            self.seq.pop();
        }
        if self.failed.len() >= self.max_entries {
            return Err(Error::ResourceLimit {
                cap_bytes: self.cap_bytes,
            });
        }
        self.failed.insert(key);
        Ok(false)
    }
}

/// A total dominating sequence of even length: the first success of
/// [`exists_tds_of_length`] over even lengths starting at γ_t.
pub fn even_length_tds(g: &Graph, config: &SolverConfig) -> Result<VertexSequence> {
    let (gamma_t, _) = total_domination_number(g, config)?;
    let start = gamma_t + gamma_t % 2;
    for len in (start..=g.n()).step_by(2) {
        if let Some(seq) = exists_tds_of_length(g, len, config)? {
            return Ok(seq);
        }
    }
    Err(Error::NotFound(
        "no total dominating sequence of even length".into(),
    ))
}

/// Lengths of all dominating open neighborhood sequences: legal sequences
/// whose vertex set is a dominating set.
///
/// Exhaustive over vertex sets that admit a legal ordering. Whether `v` can
/// follow a prefix depends only on the prefix's footprint, so each set is
/// explored once; domination itself depends on the set, not the footprint.
pub fn open_uniformity_lengths(g: &Graph) -> Result<BTreeSet<usize>> {
    check_total_domination_defined(g)?;
    if g.n() > OPEN_UNIFORMITY_MAX_N {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: OPEN_UNIFORMITY_MAX_N,
        });
    }
    let kernel = Kernel::<u64>::new(g);
    let closed: Vec<u64> = (0..g.n()).map(|v| kernel.nbhd[v] | 1 << v).collect();
    let mut seen = HashSet::new();
    let mut lengths = BTreeSet::new();
    // (chosen set, footprint, closed-neighborhood union)
    let mut stack: Vec<(u64, u64, u64)> = (0..g.n())
        .map(|v| (1u64 << v, kernel.nbhd[v], closed[v]))
        .collect();
    while let Some((set, footprint, dominated)) = stack.pop() {
        if !seen.insert(set) {
            continue;
        }
        if dominated == kernel.full {
            lengths.insert(set.count_ones() as usize);
        }
        for (v, &cl) in closed.iter().enumerate() {
            if set >> v & 1 == 0 && kernel.playable(v, &footprint) {
                stack.push((set | 1 << v, footprint | kernel.nbhd[v], dominated | cl));
            }
        }
    }
    Ok(lengths)
}
