//! Property tests for the local antimagic construction: adjacent sums
//! distinct, signs split by level parity, within-level sums injective, and
//! correctness for every root choice.

use std::collections::HashSet;

use antimagic::catalog::random_distinct_labels;
use antimagic::{
    check_local_antimagic, construct_local_antimagic, vertex_sums, Graph, LabelSet,
};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
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
            g.vertex_count() > 0 && g.degrees().iter().all(|&d| d > 0)
        })
}

fn labels_for(m: usize, random: bool, seed: u64) -> LabelSet {
    if random {
        random_distinct_labels(m, seed)
    } else {
        LabelSet::consecutive(m)
    }
}

/// Level parity of every vertex under the construction's canonical roots.
fn level_parities(g: &Graph, root_choice: Option<usize>) -> Vec<usize> {
    let mut parity = vec![0usize; g.vertex_count()];
    for component in g.connected_components() {
        let sub = g.induced(&component.vertices);
        let root = root_choice
            .filter(|r| component.vertices.binary_search(r).is_ok())
            .unwrap_or(component.vertices[0]);
        let root_sub = component.vertices.binary_search(&root).unwrap();
        let ls = sub.graph.bfs_levels(root_sub).unwrap();
        for (v_sub, &v) in sub.vertex_map.iter().enumerate() {
            parity[v] = ls.level_of[v_sub];
        }
    }
    parity
}

proptest! {
    #[test]
    fn adjacent_sums_differ(
        g in graph_without_isolated(9),
        random_labels in any::<bool>(),
        seed in any::<u64>(),
    ) {
        let labels = labels_for(g.edge_count(), random_labels, seed);
        let a = construct_local_antimagic(&g, &labels, None).unwrap();
        let report = check_local_antimagic(&g, &a);
        prop_assert!(report.passed(), "violations: {:?}", report.violations);
    }

    #[test]
    fn sums_are_negative_iff_level_is_odd(
        g in graph_without_isolated(9),
        seed in any::<u64>(),
    ) {
        let labels = labels_for(g.edge_count(), true, seed);
        let a = construct_local_antimagic(&g, &labels, None).unwrap();
        let sums = vertex_sums(&g, &a).unwrap();
        let levels = level_parities(&g, None);
        for (v, level) in levels.iter().enumerate() {
            let s = sums.sum(v);
            prop_assert!(!s.is_zero(), "vertex {v} has sum zero");
            if level % 2 == 1 {
                prop_assert!(s.is_negative(), "odd-level vertex {v} has sum {s}");
            } else {
                prop_assert!(s.is_positive(), "even-level vertex {v} has sum {s}");
            }
        }
    }

    #[test]
    fn same_level_sums_are_injective(
        g in graph_without_isolated(9),
        seed in any::<u64>(),
    ) {
        let labels = labels_for(g.edge_count(), true, seed);
        let a = construct_local_antimagic(&g, &labels, None).unwrap();
        let sums = vertex_sums(&g, &a).unwrap();
        for component in g.connected_components() {
            let sub = g.induced(&component.vertices);
            let ls = sub.graph.bfs_levels(0).unwrap();
            for level in &ls.levels {
                let mut seen: HashSet<BigRational> = HashSet::new();
                for &v_sub in level {
                    let v = sub.vertex_map[v_sub];
                    prop_assert!(
                        seen.insert(sums.sum(v).clone()),
                        "duplicate sum inside a level"
                    );
                }
            }
        }
    }

    #[test]
    fn every_root_choice_is_correct(
        g in graph_without_isolated(7),
        seed in any::<u64>(),
    ) {
        let labels = labels_for(g.edge_count(), true, seed);
        for root in 0..g.vertex_count() {
            let a = construct_local_antimagic(&g, &labels, Some(root)).unwrap();
            prop_assert!(check_local_antimagic(&g, &a).passed());
        }
    }

    #[test]
    fn output_is_a_bijection_on_the_label_set(
        g in graph_without_isolated(9),
        seed in any::<u64>(),
    ) {
        let labels = labels_for(g.edge_count(), true, seed);
        let a = construct_local_antimagic(&g, &labels, None).unwrap();
        let used: Vec<_> = a.labels_sorted().into_iter().cloned().collect();
        prop_assert_eq!(used, labels.as_slice().to_vec());
        for (e, arc) in a.arcs().iter().enumerate() {
            let (u, v) = g.edge(e);
            prop_assert!((arc.tail, arc.head) == (u, v) || (arc.tail, arc.head) == (v, u));
        }
    }

    #[test]
    fn construction_is_deterministic(
        g in graph_without_isolated(8),
        seed in any::<u64>(),
    ) {
        let labels = labels_for(g.edge_count(), true, seed);
        let a = construct_local_antimagic(&g, &labels, None).unwrap();
        let b = construct_local_antimagic(&g, &labels, None).unwrap();
        prop_assert_eq!(a, b);
    }
}
