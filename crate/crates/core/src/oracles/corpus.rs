//! Graph streams for theorem sweeps: all labeled graphs on a few vertices,
//! seeded random graphs, and the named families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::*;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ENUMERATION_MAX_N: usize = 7;

/// The labeled graph on `n` vertices whose edges are selected by `mask`:
/// bit `i` is the i-th pair of `(0,1), (0,2), ..., (n-2,n-1)`.
pub fn labeled_graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<_> = pairs
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::new(n, edges).expect("pairs are in range")
}

/// All 2^C(n,2) labeled graphs on `n` vertices in increasing mask order.
pub fn enumerate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > ENUMERATION_MAX_N {
        return Err(Error::TooLarge {
            n,
            limit: ENUMERATION_MAX_N,
        });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    Ok((0..1u64 << pairs).map(move |mask| labeled_graph_from_mask(n, mask)))
}

/// Conjunction of structural predicates; the default accepts everything.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GraphFilter {
    pub no_isolated: bool,
    pub connected: bool,
    pub false_twin_free: bool,
    pub chordal: bool,
}

impl GraphFilter {
    pub fn no_isolated() -> Self {
        GraphFilter {
            no_isolated: true,
            ..Default::default()
        }
    }

    pub fn matches(&self, g: &Graph) -> bool {
        (!self.no_isolated || !g.has_isolated_vertex())
            && (!self.connected || g.is_connected())
            && (!self.false_twin_free || g.is_false_twin_free())
            && (!self.chordal || g.is_chordal())
    }
}

pub fn filter_graphs<I>(graphs: I, filter: GraphFilter) -> impl Iterator<Item = Graph>
where
    I: IntoIterator<Item = Graph>,
{
    graphs.into_iter().filter(move |g| filter.matches(g))
}

/// G(n, p) on a caller-supplied RNG.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("pairs are in range")
}

/// `count` random graphs from a fixed seed with `n` uniform in `sizes` and
/// edge probability uniform in [0.2, 0.8]. Graphs with isolated vertices are
/// redrawn.
pub fn seeded_random_graphs(
    seed: u64,
    count: usize,
    sizes: std::ops::RangeInclusive<usize>,
) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.random_range(sizes.clone());
        let p = rng.random_range(0.2..0.8);
        let g = random_graph(n, p, &mut rng);
        if !g.has_isolated_vertex() {
            out.push(g);
        }
    }
    out
}

/// The named families at desk scale, labelled for reporting.
pub fn named_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 2..=8 {
        out.push((format!("K{n}"), complete_graph(n).unwrap()));
        out.push((format!("crown({n})"), crown(n).unwrap()));
    }
    for n in 3..=10 {
        out.push((format!("C{n}"), cycle(n).unwrap()));
    }
    for n in 2..=8 {
        out.push((format!("P{n}"), path(n).unwrap()));
        out.push((format!("star({n})"), star(n).unwrap()));
    }
    for parts in [&[2, 2][..], &[1, 2, 3], &[3, 3], &[1, 1, 4], &[2, 2, 2]] {
        out.push((
            format!("K{parts:?}"),
            complete_multipartite(parts).unwrap(),
        ));
    }
    let k3 = complete_graph(3).unwrap();
    out.push(("K3+K3".into(), disjoint_union(&k3, &k3)));
    out.push(("K3+C6".into(), disjoint_union(&k3, &cycle(6).unwrap())));
    out.push(("L(K4)".into(), line_graph_of_complete(4).unwrap().0));
    out.push(("L(K5)".into(), line_graph_of_complete(5).unwrap().0));
    out.push(("L(K6)".into(), line_graph_of_complete(6).unwrap().0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stream_counts() {
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(4).unwrap().count(), 64);
        assert_eq!(enumerate_labeled_graphs(5).unwrap().count(), 1024);
        assert_eq!(enumerate_labeled_graphs(0).unwrap().count(), 1);
        assert!(enumerate_labeled_graphs(8).is_err());
    }

    #[test]
    fn mask_order() {
        let g = labeled_graph_from_mask(4, 0b100001);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn filters() {
        let connected = GraphFilter {
            connected: true,
            ..Default::default()
        };
        assert_eq!(filter_graphs(enumerate_labeled_graphs(3).unwrap(), connected).count(), 4);
        assert_eq!(
            filter_graphs(enumerate_labeled_graphs(2).unwrap(), GraphFilter::no_isolated()).count(),
            1
        );
        assert_eq!(
            filter_graphs(enumerate_labeled_graphs(4).unwrap(), GraphFilter::default()).count(),
            64
        );
    }

    #[test]
    fn random_streams_are_reproducible() {
        let a = seeded_random_graphs(7, 20, 5..=9);
        let b = seeded_random_graphs(7, 20, 5..=9);
        assert_eq!(a, b);
        assert!(a.iter().all(|g| (5..=9).contains(&g.n()) && !g.has_isolated_vertex()));
    }
}
