use proptest::prelude::*;
use totdom::io::*;
use totdom::oracles::{enumerate_labeled_graphs, filter_graphs, GraphFilter};
use totdom::{Error, Graph};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(bits).filter(|p| p.1).map(|p| p.0)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph(70)) {
        let s = encode_graph6(&g).unwrap();
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        let back = decode_graph6(&s).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(encode_graph6(&back).unwrap(), s);
    }

    #[test]
    fn edge_list_round_trip(g in graph(30)) {
        prop_assert_eq!(read_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn decoder_never_panics(s in "\\PC{0,40}") {
        let _ = decode_graph6(&s);
    }

    #[test]
    fn edge_list_reader_never_panics(s in "[0-9 \\n-]{0,60}") {
        let _ = read_edge_list(&s);
    }
}

#[test]
fn stream_counts() {
    for n in 0..=6usize {
        let count = enumerate_labeled_graphs(n).unwrap().count();
        assert_eq!(count, 1 << (n * n.saturating_sub(1) / 2));
    }
    assert!(matches!(enumerate_labeled_graphs(8), Err(Error::TooLarge { .. })));
}

#[test]
fn stream_filters() {
    let connected = GraphFilter {
        connected: true,
        ..GraphFilter::default()
    };
    assert_eq!(filter_graphs(enumerate_labeled_graphs(3).unwrap(), connected).count(), 4);
    assert_eq!(filter_graphs(enumerate_labeled_graphs(2).unwrap(), GraphFilter::no_isolated()).count(), 1);
    assert_eq!(filter_graphs(enumerate_labeled_graphs(3).unwrap(), GraphFilter::default()).count(), 8);
}
