//! Total k-uniformity and the structure results built on it.
//!
//! A graph is total k-uniform when γ_t = γ_gr^t = k, i.e. every total
//! dominating sequence has length k.

use crate::constructions::bipartite_double_cover;
use crate::domination::{
    check_total_domination_defined, grundy_total_domination_number, total_domination_number,
    SolverConfig,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, Induced};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UniformityVerdict {
    Uniform(usize),
    /// Sequences of lengths `min_len` (γ_t) through `max_len` (γ_gr^t).
    NotUniform { min_len: usize, max_len: usize },
    /// The graph is empty or has an isolated vertex.
    Undefined,
}

impl UniformityVerdict {
    fn from_bounds(min_len: usize, max_len: usize) -> Self {
        if min_len == max_len {
            UniformityVerdict::Uniform(min_len)
        } else {
            UniformityVerdict::NotUniform { min_len, max_len }
        }
    }

    pub fn uniform_k(&self) -> Option<usize> {
        match *self {
            UniformityVerdict::Uniform(k) => Some(k),
            _ => None,
        }
    }
}

/// Decides total uniformity. Disconnected graphs are solved per component
/// (both parameters add over components).
pub fn total_uniformity(g: &Graph, config: &SolverConfig) -> Result<UniformityVerdict> {
    if check_total_domination_defined(g).is_err() {
        return Ok(UniformityVerdict::Undefined);
    }
    let components = g.connected_components();
    if components.len() == 1 {
        return total_uniformity_unsplit(g, config);
    }
    let (mut min_len, mut max_len) = (0, 0);
    for comp in &components {
        let part = g.induced_subgraph(comp).graph;
        min_len += total_domination_number(&part, config)?.0;
        max_len += grundy_total_domination_number(&part, config)?.0;
    }
    Ok(UniformityVerdict::from_bounds(min_len, max_len))
}

/// [`total_uniformity`] without the component split.
pub fn total_uniformity_unsplit(g: &Graph, config: &SolverConfig) -> Result<UniformityVerdict> {
    if check_total_domination_defined(g).is_err() {
        return Ok(UniformityVerdict::Undefined);
    }
    let (min_len, _) = total_domination_number(g, config)?;
    let (max_len, _) = grundy_total_domination_number(g, config)?;
    Ok(UniformityVerdict::from_bounds(min_len, max_len))
}

/// G \ (N[u] ∪ N[v]) for an edge uv.
pub fn reduction(g: &Graph, u: usize, v: usize) -> Result<Induced> {
    let nu = g.closed_neighborhood(u)?;
    let nv = g.closed_neighborhood(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(u, v));
    }
    Ok(g.remove_vertices(&nu.union(&nv)))
}

/// `Some(k)` iff the graph is false twin-free and total k-uniform.
pub fn g_k_membership(g: &Graph, config: &SolverConfig) -> Result<Option<usize>> {
    if !g.is_false_twin_free() {
        return Ok(None);
    }
    Ok(total_uniformity(g, config)?.uniform_k())
}

/// Every component is complete multipartite with at most one part of size
/// greater than one. For graphs without isolated vertices this holds
/// exactly for the chordal total k-uniform graphs, with k twice the number
/// of components.
pub fn chordal_uniform_classification(g: &Graph) -> bool {
    g.connected_components().iter().all(|comp| {
        let part = g.induced_subgraph(comp).graph;
        part.complete_multipartite_parts()
            .is_some_and(|parts| parts.iter().filter(|p| p.len() > 1).count() <= 1)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GirthBranch {
    /// A disjoint union of k/2 stars.
    StarsUnion,
    /// Girth at most 6.
    GirthAtMost6,
}

fn is_star(g: &Graph) -> bool {
    let n = g.n();
    n >= 2 && g.edge_count() == n - 1 && (0..n).any(|v| g.degree(v) == n - 1)
}

/// Which branch of the girth dichotomy a total k-uniform graph falls in,
/// checking the star branch first. `None` means neither holds.
///
/// The caller is responsible for `g` being total k-uniform.
pub fn girth_dichotomy(g: &Graph, k: usize) -> Option<GirthBranch> {
    let components = g.connected_components();
    let stars = k.is_multiple_of(2)
        && components.len() == k / 2
        && components
            .iter()
            .all(|c| is_star(&g.induced_subgraph(c).graph));
    if stars {
        Some(GirthBranch::StarsUnion)
    } else if g.girth().is_some_and(|len| len <= 6) {
        Some(GirthBranch::GirthAtMost6)
    } else {
        None
    }
}

/// Connected, false twin-free and total k-uniform implies regular. Returns
/// whether that implication holds for `g`.
pub fn regularity_theorem_check(g: &Graph, config: &SolverConfig) -> Result<bool> {
    if !g.is_connected() || !g.is_false_twin_free() {
        return Ok(true);
    }
    if total_uniformity(g, config)?.uniform_k().is_none() {
        return Ok(true);
    }
    Ok(g.regular_degree().is_some())
}

/// For connected, non-bipartite, total k-uniform `g`, the uniformity of
/// G × K_2: `Some(k')` if it is total k'-uniform (expected k' = 2k).
pub fn double_cover_uniformity(g: &Graph, config: &SolverConfig) -> Result<Option<usize>> {
    if !g.is_connected() {
        return Err(Error::HypothesisViolated("graph is not connected".into()));
    }
    if g.is_bipartite() {
        return Err(Error::HypothesisViolated("graph is bipartite".into()));
    }
    if total_uniformity(g, config)?.uniform_k().is_none() {
        return Err(Error::HypothesisViolated(
            "graph is not total k-uniform".into(),
        ));
    }
    Ok(total_uniformity(&bipartite_double_cover(g), config)?.uniform_k())
}
