mod common;

use rayon::prelude::*;
use totdom::domination::*;
use totdom::oracles::{brute_grundy, seeded_random_graphs};
use totdom::{Graph, VertexSet};

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

/// Every legal sequence that no vertex can extend, checked for domination.
fn maximal_sequences_dominate(g: &Graph, seq: &mut Vec<usize>, covered: &VertexSet) -> bool {
    let mut extended = false;
    for v in 0..g.n() {
        if seq.contains(&v) || g.neighbors(v).is_subset(covered) {
            continue;
        }
        extended = true;
        seq.push(v);
        let ok = maximal_sequences_dominate(g, seq, &covered.union(g.neighbors(v)));
        seq.pop();
        if !ok {
            return false;
        }
    }
    extended || covered.len() == g.n()
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

#[test]
fn witnesses_validate_and_bounds_order() {
    common::corpus(300).par_iter().for_each(|g| {
        let r = domination_report(g, &cfg()).unwrap();
        assert!(r.gamma_t <= r.grundy, "{g:?}");
        assert_eq!(r.gamma_t_witness.len(), r.gamma_t);
        assert!(is_total_dominating_set(g, &r.gamma_t_witness).unwrap(), "{g:?}");
        assert_eq!(r.grundy_witness.len(), r.grundy);
        assert!(is_total_dominating_sequence(g, &r.grundy_witness).unwrap(), "{g:?}");
    });
}

#[test]
fn maximal_legal_sequences_dominate() {
    common::corpus(100).par_iter().for_each(|g| {
        assert!(maximal_sequences_dominate(g, &mut Vec::new(), &VertexSet::new(g.n())), "{g:?}");
    });
}

#[test]
fn every_length_between_the_bounds_is_attained() {
    common::corpus(300).par_iter().for_each(|g| {
        let (lo, _) = total_domination_number(g, &cfg()).unwrap();
        let (hi, _) = grundy_total_domination_number(g, &cfg()).unwrap();
        for len in 0..=g.n() + 1 {
            let found = exists_tds_of_length(g, len, &cfg()).unwrap();
            assert_eq!(found.is_some(), (lo..=hi).contains(&len), "{g:?} length {len}");
            if let Some(seq) = found {
                assert_eq!(seq.len(), len);
                assert!(is_total_dominating_sequence(g, &seq).unwrap());
            }
        }
    });
}

#[test]
fn even_length_sequence_exists() {
    common::corpus(300).par_iter().for_each(|g| {
        let seq = even_length_tds(g, &cfg()).unwrap();
        assert_eq!(seq.len() % 2, 0, "{g:?}");
        assert!(is_total_dominating_sequence(g, &seq).unwrap(), "{g:?}");
    });
}

#[test]
fn memoized_grundy_matches_memo_free_search() {
    for g in seeded_random_graphs(0x6D65_6D6F, 200, 2..=10) {
        let (fast, _) = grundy_total_domination_number(&g, &cfg()).unwrap();
        assert_eq!(fast, brute_grundy(&g).unwrap(), "{g:?}");
    }
}

#[test]
fn minimum_sets_in_any_order_are_sequences() {
    common::corpus(100).par_iter().for_each(|g| {
        let (_, set) = total_domination_number(g, &cfg()).unwrap();
        for order in permutations(&set.to_vec()) {
            assert!(is_total_dominating_sequence(g, &order).unwrap(), "{g:?} {order:?}");
        }
    });
}

#[test]
fn prefixes_of_legal_sequences_extend() {
    common::corpus(100).par_iter().for_each(|g| {
        let (_, seq) = grundy_total_domination_number(g, &cfg()).unwrap();
        for cut in 0..=seq.len() {
            let full = extend_to_total_dominating_sequence(g, &seq[..cut]).unwrap();
            assert_eq!(&full[..cut], &seq[..cut]);
            assert!(is_total_dominating_sequence(g, &full).unwrap());
        }
    });
}
