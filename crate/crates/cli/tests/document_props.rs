//! Round-trip identity for every document the tools can emit.

use antimagic::catalog::random_distinct_labels;
use antimagic::{
    check_lemma_bound, check_local_antimagic, component_label_maxima, construct_local_antimagic,
    lemma_orient_label, Graph, LabelSet, Polarity,
};
use antimagic_cli::document::{build_document, extract, parse, render};
use proptest::prelude::*;

fn graph_without_isolated(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |mask| {
                let mut edges = Vec::new();
                let mut k = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if mask[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::new(n, &edges).expect("mask graphs are simple")
            })
        })
        .prop_filter("no isolated vertices", |g| {
            g.degrees().iter().all(|&d| d > 0)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn local_documents_round_trip(
        g in graph_without_isolated(8),
        random_labels in any::<bool>(),
        seed in any::<u64>(),
    ) {
        let labels = if random_labels {
            random_distinct_labels(g.edge_count(), seed)
        } else {
            LabelSet::consecutive(g.edge_count())
        };
        let a = construct_local_antimagic(&g, &labels, None).unwrap();
        let report = check_local_antimagic(&g, &a);
        let levels = g.is_connected().then(|| g.bfs_levels(0).unwrap().levels);
        let doc = build_document(&g, &a, levels, "local", None, &report);
        let text = render(&doc);
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(render(&back), text);
        let (g2, a2) = extract(&back).unwrap();
        prop_assert_eq!(g2, g);
        prop_assert_eq!(a2, a);
    }

    #[test]
    fn lemma_documents_round_trip(
        g in graph_without_isolated(8),
        reversed in any::<bool>(),
        seed in any::<u64>(),
    ) {
        let labels = random_distinct_labels(g.edge_count(), seed);
        let polarity = if reversed { Polarity::Reversed } else { Polarity::Normal };
        let a = lemma_orient_label(&g, &labels, polarity).unwrap();
        let maxima = component_label_maxima(&g, &a);
        let report = check_lemma_bound(&g, &a, &maxima, polarity);
        let doc = build_document(&g, &a, None, "lemma", Some(polarity), &report);
        let back = parse(&render(&doc)).unwrap();
        prop_assert_eq!(back, doc);
    }
}
