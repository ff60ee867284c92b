use totdom::oracles::{labeled_graph_from_mask, seeded_random_graphs};
use totdom::Graph;

/// Seed of the n = 7 sample.
pub const SAMPLE_SEED: u64 = 0x7E57_0007;

/// Every labeled graph on 2..=6 vertices without isolated vertices, then a
/// fixed-seed sample of 7-vertex graphs.
pub fn corpus(sample: usize) -> Vec<Graph> {
    let mut out: Vec<Graph> = (2..=6usize)
        .flat_map(|n| (0..1u64 << (n * (n - 1) / 2)).map(move |m| labeled_graph_from_mask(n, m)))
        .filter(|g| !g.has_isolated_vertex())
        .collect();
    out.extend(seeded_random_graphs(SAMPLE_SEED, sample, 7..=7));
    out
}
