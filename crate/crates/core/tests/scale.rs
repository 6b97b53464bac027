//! Larger-instance smoke checks, ignored by default:
//! `cargo test -p antimagic --test scale -- --ignored`

use antimagic::catalog::random_distinct_labels;
use antimagic::{
    check_antimagic, check_local_antimagic, construct_antimagic_integer,
    construct_local_antimagic, gen_gnp, parse_rational,
};

#[test]
#[ignore = "slow; run explicitly"]
fn constructions_verify_at_n100() {
    let p = parse_rational("1/2").unwrap();
    let g = gen_gnp(100, &p, 424242).unwrap();
    assert!(g.edge_count() > 2000);

    let labels = random_distinct_labels(g.edge_count(), 1);
    let a = construct_local_antimagic(&g, &labels, None).unwrap();
    assert!(check_local_antimagic(&g, &a).passed());

    assert!(g.radius().unwrap().0 <= 2);
    let b = construct_antimagic_integer(&g).unwrap();
    assert!(check_antimagic(&g, &b).passed());
}

#[test]
#[ignore = "slow; run explicitly"]
fn sparse_deep_graphs_verify_at_n200() {
    let p = parse_rational("1/100").unwrap();
    for seed in 0..5 {
        let g = antimagic::catalog::random_connected_graph(200, &p, seed);
        let a = construct_local_antimagic(&g, &antimagic::LabelSet::consecutive(g.edge_count()), None)
            .unwrap();
        assert!(check_local_antimagic(&g, &a).passed());
    }
}
