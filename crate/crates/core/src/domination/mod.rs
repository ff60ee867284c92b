//! Total domination and Grundy total domination.
//!
//! A sequence `(v1, ..., vk)` of distinct vertices is *legal* when every
//! `vi` with `i >= 2` has a neighbour outside the *footprint*
//! `N(v1) ∪ ... ∪ N(v(i-1))`. A legal sequence whose footprint is all of
//! V(G) is a *total dominating sequence*. γ_t and γ_gr^t are the minimum
//! and maximum lengths of such sequences.

mod grundy;
pub(crate) mod mask;
mod sequences;
mod total;

use std::fmt;
use std::ops::Deref;
use std::time::{Duration, Instant};

pub use grundy::grundy_total_domination_number;
pub use sequences::{
    even_length_tds, exists_tds_of_length, extend_to_total_dominating_sequence,
    open_uniformity_lengths, OPEN_UNIFORMITY_MAX_N,
};
pub use total::total_domination_number;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Ordered list of distinct vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSequence(Vec<usize>);

impl VertexSequence {
    /// Fails with [`Error::DuplicateVertex`] if a vertex repeats.
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if let Some(v) = first_duplicate(&vertices) {
            return Err(Error::DuplicateVertex(v));
        }
        Ok(VertexSequence(vertices))
    }

    pub(crate) fn from_vec_unchecked(vertices: Vec<usize>) -> Self {
        debug_assert!(first_duplicate(&vertices).is_none());
        VertexSequence(vertices)
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// The vertices as an unordered set over `0..n`.
    pub fn to_set(&self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.0.iter().copied())
    }
}

impl Deref for VertexSequence {
    type Target = [usize];
    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for VertexSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn first_duplicate(vertices: &[usize]) -> Option<usize> {
    let mut seen = std::collections::HashSet::new();
    vertices.iter().copied().find(|&v| !seen.insert(v))
}

/// Union of open neighborhoods of a sequence prefix, maintained
/// incrementally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Footprint {
    covered: VertexSet,
}

impl Footprint {
    pub fn new(g: &Graph) -> Self {
        Footprint {
            covered: VertexSet::new(g.n()),
        }
    }

    pub fn covered(&self) -> &VertexSet {
        &self.covered
    }

    /// Whether `v` would add a new vertex to the footprint.
    pub fn admits(&self, g: &Graph, v: usize) -> bool {
        !g.neighbors(v).is_subset(&self.covered)
    }

    pub fn push(&mut self, g: &Graph, v: usize) {
        self.covered.union_with(g.neighbors(v));
    }

    pub fn is_complete(&self) -> bool {
        self.covered.len() == self.covered.capacity()
    }
}

/// Limits for the exponential solvers.
#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Give up with [`Error::TimedOut`] once this instant has passed.
    pub deadline: Option<Instant>,
    /// Give up with [`Error::ResourceLimit`] once a memo table is
    /// estimated to exceed this many bytes.
    pub memo_cap_bytes: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            deadline: None,
            memo_cap_bytes: 2 << 30,
        }
    }
}

impl SolverConfig {
    pub fn with_time_limit(limit: Duration) -> Self {
        SolverConfig {
            deadline: Some(Instant::now() + limit),
            ..Default::default()
        }
    }
}

/// Checks the deadline on the first search node and every 1024 after.
pub(crate) struct Budget {
    deadline: Option<Instant>,
    ticks: u32,
}

impl Budget {
    pub fn new(config: &SolverConfig) -> Self {
        Budget {
            deadline: config.deadline,
            ticks: 0,
        }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks & 1023 == 1 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(Error::TimedOut);
                }
            }
        }
        Ok(())
    }
}

/// Total domination is defined only for nonempty graphs without isolated
/// vertices.
pub fn check_total_domination_defined(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    match g.isolated_vertices().first() {
        Some(v) => Err(Error::IsolatedVertexPresent(v)),
        None => Ok(()),
    }
}

fn check_members(g: &Graph, vertices: impl IntoIterator<Item = usize>) -> Result<()> {
    for v in vertices {
        if v >= g.n() {
            return Err(Error::IndexOutOfRange { vertex: v, n: g.n() });
        }
    }
    Ok(())
}

/// Every vertex has a neighbour in `set`.
pub fn is_total_dominating_set(g: &Graph, set: &VertexSet) -> Result<bool> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    check_members(g, set.iter())?;
    let mut covered = VertexSet::new(g.n());
    for v in set.iter() {
        covered.union_with(g.neighbors(v));
    }
    Ok(covered.len() == g.n())
}

/// Every vertex outside `set` has a neighbour in `set`.
pub fn is_dominating_set(g: &Graph, set: &VertexSet) -> Result<bool> {
    check_members(g, set.iter())?;
    Ok((0..g.n()).all(|v| set.contains(v) || !g.neighbors(v).is_disjoint(set)))
}

/// Footprint of a legal sequence, or `None` if it is not legal.
fn legal_footprint(g: &Graph, seq: &[usize]) -> Result<Option<Footprint>> {
    check_members(g, seq.iter().copied())?;
    if let Some(v) = first_duplicate(seq) {
        return Err(Error::DuplicateVertex(v));
    }
    let mut fp = Footprint::new(g);
    for (i, &v) in seq.iter().enumerate() {
        // The first entry is always admissible, even when N(v) is empty.
        if i > 0 && !fp.admits(g, v) {
            return Ok(None);
        }
        fp.push(g, v);
    }
    Ok(Some(fp))
}

pub fn is_legal_sequence(g: &Graph, seq: &[usize]) -> Result<bool> {
    Ok(legal_footprint(g, seq)?.is_some())
}

/// Legal and with footprint V(G).
pub fn is_total_dominating_sequence(g: &Graph, seq: &[usize]) -> Result<bool> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(legal_footprint(g, seq)?.is_some_and(|fp| fp.is_complete()))
}

/// γ_t and γ_gr^t with their witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationReport {
    pub gamma_t: usize,
    pub gamma_t_witness: VertexSet,
    pub grundy: usize,
    pub grundy_witness: VertexSequence,
}

pub fn domination_report(g: &Graph, config: &SolverConfig) -> Result<DominationReport> {
    let (gamma_t, gamma_t_witness) = total_domination_number(g, config)?;
    let (grundy, grundy_witness) = grundy_total_domination_number(g, config)?;
    Ok(DominationReport {
        gamma_t,
        gamma_t_witness,
        grundy,
        grundy_witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;

    #[test]
    fn tds_set_examples() {
        let k2 = complete_graph(2).unwrap();
        assert!(is_total_dominating_set(&k2, &VertexSet::from_vertices(2, [0, 1])).unwrap());
        assert!(!is_total_dominating_set(&k2, &VertexSet::from_vertices(2, [0])).unwrap());

        // crown(3): a_i = i, b_i = 3 + i.
        let c = crown(3).unwrap();
        let check = |s: &[usize]| {
            is_total_dominating_set(&c, &VertexSet::from_vertices(6, s.iter().copied())).unwrap()
        };
        // b_0 is dominated only by a_1, a_2; a_0 only by b_1, b_2.
        assert!(check(&[0, 1, 3, 4]));
        assert!(!check(&[0, 3, 1, 2]));
        assert!(!check(&[0, 1, 2]));
        assert!(matches!(
            is_total_dominating_set(&Graph::empty(0), &VertexSet::new(0)),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn legal_sequence_examples() {
        let p3 = path(3).unwrap();
        assert!(is_legal_sequence(&p3, &[0, 1]).unwrap());
        assert!(is_total_dominating_sequence(&p3, &[0, 1]).unwrap());
        assert!(!is_total_dominating_sequence(&p3, &[0]).unwrap());

        let s = star(3).unwrap();
        assert!(is_legal_sequence(&s, &[0, 1]).unwrap());
        assert!(!is_legal_sequence(&s, &[0, 1, 2]).unwrap());

        assert_eq!(is_legal_sequence(&p3, &[0, 0]), Err(Error::DuplicateVertex(0)));
        assert_eq!(
            is_legal_sequence(&p3, &[3]),
            Err(Error::IndexOutOfRange { vertex: 3, n: 3 })
        );
        assert!(VertexSequence::new(vec![1, 2, 1]).is_err());
    }

    #[test]
    fn isolated_first_vertex_is_legal_but_not_dominating() {
        let g = disjoint_union(&Graph::empty(1), &complete_graph(2).unwrap());
        assert!(is_legal_sequence(&g, &[0]).unwrap());
        assert!(is_legal_sequence(&g, &[0, 1, 2]).unwrap());
        assert!(!is_total_dominating_sequence(&g, &[0, 1, 2]).unwrap());
    }

    #[test]
    fn dominating_set_examples() {
        let s = star(3).unwrap();
        assert!(is_dominating_set(&s, &VertexSet::from_vertices(4, [0])).unwrap());
        assert!(!is_dominating_set(&s, &VertexSet::from_vertices(4, [1])).unwrap());
    }

    #[test]
    fn footprint_tracks_union() {
        let p4 = path(4).unwrap();
        let mut fp = Footprint::new(&p4);
        assert!(fp.admits(&p4, 0));
        fp.push(&p4, 0);
        fp.push(&p4, 3);
        assert_eq!(fp.covered().to_vec(), vec![1, 2]);
        assert!(!fp.is_complete());
        assert!(fp.admits(&p4, 1));
        fp.push(&p4, 1);
        fp.push(&p4, 2);
        assert!(fp.is_complete());
    }

    #[test]
    fn check_defined() {
        assert_eq!(check_total_domination_defined(&Graph::empty(0)), Err(Error::EmptyGraph));
        assert_eq!(
            check_total_domination_defined(&Graph::new(3, [(1, 2)]).unwrap()),
            Err(Error::IsolatedVertexPresent(0))
        );
        assert!(check_total_domination_defined(&path(2).unwrap()).is_ok());
    }
}
