//! Slow, obviously-correct baselines.
//!
//! Nothing here shares code with the fast solvers: legality and domination
//! are re-implemented over a plain boolean adjacency matrix so a bug in one
//! side cannot hide in the other.

mod corpus;

pub use corpus::{
    enumerate_labeled_graphs, filter_graphs, labeled_graph_from_mask, named_corpus,
    random_graph, seeded_random_graphs, GraphFilter, ENUMERATION_MAX_N,
};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const BRUTE_GRUNDY_MAX_N: usize = 10;
pub const BRUTE_GAMMA_T_MAX_N: usize = 20;

fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n())
        .map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

fn require_no_isolated(adj: &[Vec<bool>]) -> Result<()> {
    if adj.is_empty() {
        return Err(Error::EmptyGraph);
    }
    match adj.iter().position(|row| !row.contains(&true)) {
        Some(v) => Err(Error::IsolatedVertexPresent(v)),
        None => Ok(()),
    }
}

/// Maximum length of a total dominating sequence, by enumerating every
/// legal sequence with no memoisation.
pub fn brute_grundy(g: &Graph) -> Result<usize> {
    if g.n() > BRUTE_GRUNDY_MAX_N {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: BRUTE_GRUNDY_MAX_N,
        });
    }
    let adj = matrix(g);
    require_no_isolated(&adj)?;
    let n = adj.len();
    let mut used = vec![false; n];
    // cover[w] = how many chosen vertices are adjacent to w
    let mut cover = vec![0usize; n];
    Ok(longest(&adj, &mut used, &mut cover, 0))
}

fn longest(adj: &[Vec<bool>], used: &mut [bool], cover: &mut [usize], depth: usize) -> usize {
    let n = adj.len();
    let mut best = if cover.iter().all(|&c| c > 0) { depth } else { 0 };
    for v in 0..n {
        if used[v] {
            continue;
        }
        let adds_new = (0..n).any(|w| adj[v][w] && cover[w] == 0);
        if !adds_new {
            continue;
        }
        used[v] = true;
        for w in 0..n {
            if adj[v][w] {
                cover[w] += 1;
            }
        }
        best = best.max(longest(adj, used, cover, depth + 1));
        for w in 0..n {
            if adj[v][w] {
                cover[w] -= 1;
            }
        }
        used[v] = false;
    }
    best
}

/// Minimum size of a total dominating set, trying subsets in order of
/// increasing size.
pub fn brute_gamma_t(g: &Graph) -> Result<usize> {
    if g.n() > BRUTE_GAMMA_T_MAX_N {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: BRUTE_GAMMA_T_MAX_N,
        });
    }
    let adj = matrix(g);
    require_no_isolated(&adj)?;
    let n = adj.len();
    let dominates = |subset: &[usize]| (0..n).all(|w| subset.iter().any(|&v| adj[v][w]));
    for size in 1..=n {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            if dominates(&subset) {
                return Ok(size);
            }
            // next combination in lexicographic order
            let Some(i) = (0..size).rev().find(|&i| subset[i] < n - size + i) else {
                break;
            };
            subset[i] += 1;
            for j in i + 1..size {
                subset[j] = subset[j - 1] + 1;
            }
        }
    }
    unreachable!("V(G) itself is a total dominating set")
}
