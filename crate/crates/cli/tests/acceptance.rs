//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Run with `cargo test -p antimagic-cli --test acceptance --
//! --nocapture` to see the lines and timings.

use std::time::Instant;

use antimagic::catalog::{
    connected_iso_classes_by_edges, connected_labeled_graphs_up_to, random_connected_graph,
    random_diameter_le2_graph, random_distinct_labels,
};
use antimagic::{
    check_antimagic, check_lemma_bound, check_local_antimagic, component_label_maxima,
    construct_antimagic_integer, construct_antimagic_radius2, construct_local_antimagic,
    degree_imbalance, diameter2_trials, exhaustive_oracle, expected_no_common_neighbor,
    lemma_orient_label, parse_rational, vertex_sums, CheckMode, Graph, LabelSet, Polarity,
};
use antimagic_cli::{csv, document};
use num_traits::{Signed, Zero};
use rayon::prelude::*;

fn half() -> num_rational::BigRational {
    parse_rational("1/2").unwrap()
}

/// The fixed random corpus of connected graphs on up to 30 vertices.
fn random_connected_corpus() -> Vec<Graph> {
    let quarter = parse_rational("1/4").unwrap();
    (0..500u64)
        .map(|i| random_connected_graph(2 + (i as usize % 29), &quarter, 0xC0FFEE ^ i))
        .collect()
}

fn both_label_sets(m: usize, seed: u64) -> [LabelSet; 2] {
    [LabelSet::consecutive(m), random_distinct_labels(m, seed)]
}

/// Level of every vertex under the construction's canonical roots.
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

fn assert_lemma_contract(g: &Graph, labels: &LabelSet) {
    for polarity in [Polarity::Normal, Polarity::Reversed] {
        let a = lemma_orient_label(g, labels, polarity).unwrap();
        let maxima = component_label_maxima(g, &a);
        let report = check_lemma_bound(g, &a, &maxima, polarity);
        assert!(
            report.passed(),
            "lemma bound violated ({polarity:?}) on {g:?}: {:?}",
            report.violations
        );
        assert!(
            degree_imbalance(g, &a) <= 1,
            "orientation unbalanced on {g:?}"
        );
        let used: Vec<_> = a.labels_sorted().into_iter().cloned().collect();
        assert_eq!(used, labels.as_slice().to_vec(), "labels not a bijection");
    }
}

#[test]
fn criterion_1_euler_lemma_bound() {
    let start = Instant::now();
    let catalog = connected_labeled_graphs_up_to(6);
    catalog.par_iter().for_each(|g| {
        for labels in both_label_sets(g.edge_count(), 0xA11CE) {
            assert_lemma_contract(g, &labels);
        }
    });
    let randoms = random_connected_corpus();
    randoms.par_iter().enumerate().for_each(|(i, g)| {
        for labels in both_label_sets(g.edge_count(), 0xBEEF ^ i as u64) {
            assert_lemma_contract(g, &labels);
        }
    });
    println!(
        "criterion 1 (Euler lemma bound, balance, duals): PASS ({} catalog + {} random graphs, {:.1?})",
        catalog.len(),
        randoms.len(),
        start.elapsed()
    );
}

fn assert_local_contract(g: &Graph, labels: &LabelSet, root: Option<usize>) {
    let a = construct_local_antimagic(g, labels, root).unwrap();
    let report = check_local_antimagic(g, &a);
    assert!(
        report.passed(),
        "adjacent sums collide on {g:?}: {:?}",
        report.violations
    );
    let sums = vertex_sums(g, &a).unwrap();
    let levels = level_parities(g, root);
    for (v, level) in levels.iter().enumerate() {
        let s = sums.sum(v);
        assert!(!s.is_zero(), "zero sum at {v} on {g:?}");
        if level % 2 == 1 {
            assert!(s.is_negative(), "odd-level vertex {v} not negative on {g:?}");
        } else {
            assert!(s.is_positive(), "even-level vertex {v} not positive on {g:?}");
        }
    }
}

#[test]
fn criterion_2_local_antimagic() {
    let start = Instant::now();
    let catalog: Vec<Graph> = connected_labeled_graphs_up_to(6)
        .into_iter()
        .filter(|g| g.edge_count() > 0)
        .collect();
    catalog.par_iter().for_each(|g| {
        for labels in both_label_sets(g.edge_count(), 0x10CA1) {
            assert_local_contract(g, &labels, None);
        }
        // every root choice stays correct
        for root in 0..g.vertex_count() {
            assert_local_contract(g, &LabelSet::consecutive(g.edge_count()), Some(root));
        }
    });
    let randoms = random_connected_corpus();
    randoms.par_iter().enumerate().for_each(|(i, g)| {
        for labels in both_label_sets(g.edge_count(), 0xD00D ^ i as u64) {
            assert_local_contract(g, &labels, None);
        }
    });
    println!(
        "criterion 2 (local antimagic + signs + all roots): PASS ({} catalog + {} random graphs, {:.1?})",
        catalog.len(),
        randoms.len(),
        start.elapsed()
    );
}

#[test]
fn criterion_3_radius2_full_antimagic() {
    let start = Instant::now();
    let catalog: Vec<Graph> = connected_labeled_graphs_up_to(6)
        .into_iter()
        .filter(|g| g.radius().map(|(r, _)| r <= 2).unwrap_or(false))
        .collect();
    catalog.par_iter().for_each(|g| {
        for labels in both_label_sets(g.edge_count(), 0x2AD1) {
            let a = construct_antimagic_radius2(g, &labels).unwrap();
            let report = check_antimagic(g, &a);
            assert!(report.passed(), "sums collide on {g:?}: {:?}", report.violations);
        }
    });
    let samples: Vec<Graph> = (0..500u64)
        .map(|i| random_diameter_le2_graph(2 + (i as usize % 39), 0xFEED ^ i))
        .collect();
    samples.par_iter().enumerate().for_each(|(i, g)| {
        for labels in both_label_sets(g.edge_count(), 0xF00D ^ i as u64) {
            let a = construct_antimagic_radius2(g, &labels).unwrap();
            assert!(check_antimagic(g, &a).passed());
        }
    });
    println!(
        "criterion 3 (radius-2 full antimagic): PASS ({} catalog + {} random graphs, {:.1?})",
        catalog.len(),
        samples.len(),
        start.elapsed()
    );
}

#[test]
fn criterion_4_oracle_cross_check() {
    let start = Instant::now();
    let classes = connected_iso_classes_by_edges(7);
    assert_eq!(classes.len(), 131, "1+1+3+5+12+30+79 classes with m <= 7");
    classes.par_iter().for_each(|g| {
        let labels = LabelSet::consecutive(g.edge_count());

        let local = construct_local_antimagic(g, &labels, None).unwrap();
        assert!(
            check_local_antimagic(g, &local).passed(),
            "construction rejected on {g:?}"
        );
        let outcome = exhaustive_oracle(g, &labels, CheckMode::Local).unwrap();
        assert!(outcome.count >= 1, "oracle found nothing on {g:?}");

        if g.radius().unwrap().0 <= 2 {
            let full = construct_antimagic_integer(g).unwrap();
            assert!(check_antimagic(g, &full).passed());
            let outcome = exhaustive_oracle(g, &labels, CheckMode::Full).unwrap();
            assert!(outcome.count >= 1);
        }
    });
    // frozen brute-force fact: P3 has exactly 4 full-antimagic assignments
    let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
    let outcome = exhaustive_oracle(&p3, &LabelSet::consecutive(2), CheckMode::Full).unwrap();
    assert_eq!(outcome.count, 4);
    println!(
        "criterion 4 (oracle cross-check on {} classes, P3 count = 4): PASS ({:.1?})",
        classes.len(),
        start.elapsed()
    );
}

#[test]
fn criterion_5_diameter_two_monte_carlo() {
    let start = Instant::now();
    let record = diameter2_trials(50, &half(), 2000, 7).unwrap();
    let threshold = parse_rational("995/1000").unwrap();
    assert!(
        record.frac_diam_le2 >= threshold,
        "frac_diam_le2 = {}",
        antimagic::format_rational(&record.frac_diam_le2)
    );
    assert_eq!(
        expected_no_common_neighbor(10, &half()).unwrap(),
        parse_rational("295245/65536").unwrap()
    );
    for n in [10, 15, 20] {
        let record = diameter2_trials(n, &half(), 5000, 11).unwrap();
        assert!(record.markov_ok, "Markov comparison failed at n = {n}");
    }
    println!(
        "criterion 5 (diameter-two Monte Carlo): PASS (frac_diam_le2 = {}, {:.1?})",
        antimagic::format_rational(&record.frac_diam_le2),
        start.elapsed()
    );
}

#[test]
fn criterion_6_antimagic_pipeline() {
    let start = Instant::now();
    let record = antimagic::antimagic_pipeline_trials(50, 500, 17).unwrap();
    let threshold = parse_rational("995/1000").unwrap();
    assert!(
        record.frac_radius_le2 >= threshold,
        "frac_radius_le2 = {}",
        antimagic::format_rational(&record.frac_radius_le2)
    );
    // zero verification failures among radius-<=2 trials
    assert_eq!(
        record.frac_antimagic_verified.as_ref(),
        Some(&record.frac_radius_le2)
    );
    println!(
        "criterion 6 (antimagic pipeline): PASS (frac_radius_le2 = {}, {:.1?})",
        antimagic::format_rational(&record.frac_radius_le2),
        start.elapsed()
    );
}

#[test]
fn criterion_7_determinism() {
    let start = Instant::now();

    // constructions render to byte-identical documents
    let g = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
    let labels = random_distinct_labels(6, 99);
    let render = || {
        let a = construct_local_antimagic(&g, &labels, None).unwrap();
        let report = check_local_antimagic(&g, &a);
        document::render(&document::build_document(
            &g,
            &a,
            Some(g.bfs_levels(0).unwrap().levels),
            "local",
            None,
            &report,
        ))
    };
    assert_eq!(render(), render());

    // batches are identical across runs and under different parallelism
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let wide = rayon::ThreadPoolBuilder::new()
        .num_threads(std::thread::available_parallelism().map_or(4, |p| p.get().max(4)))
        .build()
        .unwrap();
    let serial = single.install(|| diameter2_trials(25, &half(), 200, 21).unwrap());
    let parallel = wide.install(|| diameter2_trials(25, &half(), 200, 21).unwrap());
    assert_eq!(serial, parallel);
    assert_eq!(csv::row(&serial), csv::row(&parallel));

    let serial = single.install(|| antimagic::antimagic_pipeline_trials(20, 100, 23).unwrap());
    let parallel = wide.install(|| antimagic::antimagic_pipeline_trials(20, 100, 23).unwrap());
    assert_eq!(serial, parallel);
    assert_eq!(csv::row(&serial), csv::row(&parallel));

    println!("criterion 7 (determinism): PASS ({:.1?})", start.elapsed());
}
