mod common;

use rayon::prelude::*;
use totdom::constructions::{line_graph_of_complete, disjoint_union};
use totdom::domination::*;
use totdom::oracles::seeded_random_graphs;
use totdom::uniformity::*;
use totdom::{Graph, UniformityVerdict};

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

fn verdict(g: &Graph) -> UniformityVerdict {
    total_uniformity(g, &cfg()).unwrap()
}

#[test]
fn collapsing_false_twins_keeps_both_parameters() {
    common::corpus(300).par_iter().for_each(|g| {
        let (h, _) = g.collapse_false_twins();
        assert!(h.is_false_twin_free());
        let a = domination_report(g, &cfg()).unwrap();
        let b = domination_report(&h, &cfg()).unwrap();
        assert_eq!((a.gamma_t, a.grundy), (b.gamma_t, b.grundy), "{g:?}");
    });
}

#[test]
fn connected_twin_free_uniform_graphs_have_induced_c5_or_c6() {
    let mut seen = 0;
    for g in common::corpus(300) {
        if g.is_connected() && g_k_membership(&g, &cfg()).unwrap().is_some_and(|k| k >= 4) {
            seen += 1;
            let cycle = g.induced_c5_or_c6().unwrap_or_else(|| panic!("{g:?}"));
            assert!(cycle.len() == 5 || cycle.len() == 6);
        }
    }
    let lk6 = line_graph_of_complete(6).unwrap().0;
    assert!(lk6.induced_c5_or_c6().is_some());
    assert!(seen > 0);
}

#[test]
fn no_connected_chordal_graph_is_uniform_beyond_two() {
    for g in common::corpus(300) {
        if g.is_connected() && g.is_chordal() {
            assert!(verdict(&g).uniform_k().is_none_or(|k| k < 4), "{g:?}");
        }
    }
}

#[test]
fn two_uniform_means_complete_multipartite() {
    common::corpus(300).par_iter().for_each(|g| {
        let multipartite = g.n() >= 2 && g.edge_count() > 0 && g.complete_multipartite_parts().is_some();
        assert_eq!(verdict(g) == UniformityVerdict::Uniform(2), multipartite, "{g:?}");
    });
}

#[test]
fn open_uniform_implies_total_uniform() {
    let mut seen = 0;
    for g in common::corpus(50) {
        let lengths = open_uniformity_lengths(&g).unwrap();
        if lengths.len() == 1 {
            seen += 1;
            let k = *lengths.first().unwrap();
            assert_eq!(verdict(&g), UniformityVerdict::Uniform(k), "{g:?}");
        }
    }
    assert!(seen > 0);
}

#[test]
fn split_and_unsplit_verdicts_agree() {
    let parts = seeded_random_graphs(0x0005_7117, 60, 2..=5);
    for pair in parts.chunks(2) {
        let g = disjoint_union(&pair[0], &pair[1]);
        assert_eq!(verdict(&g), total_uniformity_unsplit(&g, &cfg()).unwrap(), "{g:?}");
    }
}

#[test]
fn lk9_reductions_are_lk6_but_lk9_is_not_uniform() {
    let (lk9, _) = line_graph_of_complete(9).unwrap();
    let (lk6, _) = line_graph_of_complete(6).unwrap();
    assert_eq!(g_k_membership(&lk6, &cfg()).unwrap(), Some(4));
    for (u, v) in lk9.edges() {
        let r = reduction(&lk9, u, v).unwrap().graph;
        assert!(r.is_isomorphic(&lk6), "edge {u}-{v}");
    }
    assert!(matches!(verdict(&lk9), UniformityVerdict::NotUniform { min_len: 6, max_len: 8 }));
}
