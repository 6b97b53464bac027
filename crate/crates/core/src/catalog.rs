//! Small-graph corpora for the verification suites: exhaustive labeled
//! enumeration, one representative per isomorphism class for sparse graphs,
//! and seeded random samples of connected and small-diameter graphs.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand_chacha::ChaCha12Rng;
use rand_core::{RngCore, SeedableRng};

use crate::graph::{Graph, VertexId};
use crate::labels::{Label, LabelSet};
use crate::random::gen_gnp;

/// All unordered pairs over `0..n` in lexicographic order.
fn pair_list(n: usize) -> Vec<(VertexId, VertexId)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    pairs
}

/// Every connected labeled graph on exactly `n` vertices, by enumerating all
/// edge subsets. Practical for n <= 6 (32768 subsets at n = 6).
pub fn connected_labeled_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=6).contains(&n), "labeled enumeration is for n <= 6");
    let pairs = pair_list(n);
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if connected_by_union(n, &edges) {
            out.push(Graph::new(n, &edges).expect("pairs are simple"));
        }
    }
    out
}

/// Union of [`connected_labeled_graphs`] for `1..=n_max`.
pub fn connected_labeled_graphs_up_to(n_max: usize) -> Vec<Graph> {
    (1..=n_max).flat_map(connected_labeled_graphs).collect()
}

fn connected_by_union(n: usize, edges: &[(VertexId, VertexId)]) -> bool {
    if n == 0 {
        return false;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = n;
    for &(u, v) in edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
            components -= 1;
        }
    }
    components == 1
}

/// One representative of every isomorphism class of connected graphs with
/// `1..=max_edges` edges (any vertex count; a connected graph on m edges has
/// at most m + 1 vertices). Practical for `max_edges <= 7`.
pub fn connected_iso_classes_by_edges(max_edges: usize) -> Vec<Graph> {
    assert!(max_edges <= 7, "iso-class enumeration is for m <= 7");
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for n in 2..=max_edges + 1 {
        let pairs = pair_list(n);
        let min_m = n - 1; // fewer edges cannot connect n vertices
        for m in min_m..=max_edges.min(pairs.len()) {
            let mut chosen = Vec::new();
            subsets_of_size(&pairs, m, &mut chosen, 0, &mut |edges| {
                if !connected_by_union(n, edges) {
                    return;
                }
                let canon = canonical_form(n, edges);
                if seen.insert((n, canon)) {
                    out.push(Graph::new(n, edges).expect("pairs are simple"));
                }
            });
        }
    }
    out
}

fn subsets_of_size(
    pairs: &[(VertexId, VertexId)],
    k: usize,
    chosen: &mut Vec<(VertexId, VertexId)>,
    from: usize,
    visit: &mut impl FnMut(&[(VertexId, VertexId)]),
) {
    if chosen.len() == k {
        visit(chosen);
        return;
    }
    let needed = k - chosen.len();
    for i in from..=pairs.len().saturating_sub(needed) {
        chosen.push(pairs[i]);
        subsets_of_size(pairs, k, chosen, i + 1, visit);
        chosen.pop();
    }
}

/// Canonical adjacency bitmask: the minimum over all relabelings that map
/// vertices only onto slots reserved for their invariant class, where the
/// invariant is (degree, sorted neighbor degrees). Isomorphic graphs share
/// the invariant multiset and hence the same candidate set, so equal
/// canonical forms characterize isomorphism.
fn canonical_form(n: usize, edges: &[(VertexId, VertexId)]) -> u64 {
    debug_assert!(n * (n - 1) / 2 <= 64);
    let mut degree = vec![0usize; n];
    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        degree[u] += 1;
        degree[v] += 1;
        neighbors[u].push(v);
        neighbors[v].push(u);
    }
    let invariant: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = neighbors[v].iter().map(|&w| degree[w]).collect();
            nd.sort_unstable();
            (degree[v], nd)
        })
        .collect();

    // group vertices by invariant; classes sorted by invariant value fix the
    // slot ranges
    let mut order: Vec<VertexId> = (0..n).collect();
    order.sort_by(|&a, &b| invariant[a].cmp(&invariant[b]));
    let mut classes: Vec<Vec<VertexId>> = Vec::new();
    for &v in &order {
        match classes.last() {
            Some(last) if invariant[last[0]] == invariant[v] => {
                classes.last_mut().unwrap().push(v)
            }
            _ => classes.push(vec![v]),
        }
    }

    let pair_index = |a: usize, b: usize| -> usize {
        let (i, j) = (a.min(b), a.max(b));
        i * n - i * (i + 1) / 2 + (j - i - 1)
    };

    let mut slot_of = vec![0usize; n];
    let mut best = u64::MAX;
    permute_classes(&classes, 0, 0, &mut slot_of, &mut |slot_of| {
        let mut mask = 0u64;
        for &(u, v) in edges {
            mask |= 1 << pair_index(slot_of[u], slot_of[v]);
        }
        best = best.min(mask);
    });
    best
}

fn permute_classes(
    classes: &[Vec<VertexId>],
    class_idx: usize,
    slot_base: usize,
    slot_of: &mut Vec<usize>,
    visit: &mut impl FnMut(&Vec<usize>),
) {
    if class_idx == classes.len() {
        visit(slot_of);
        return;
    }
    let class = &classes[class_idx];
    let mut members = class.clone();
    permute_in_place(&mut members, 0, &mut |perm| {
        for (offset, &v) in perm.iter().enumerate() {
            slot_of[v] = slot_base + offset;
        }
        permute_classes(classes, class_idx + 1, slot_base + perm.len(), slot_of, visit);
    });
}

fn permute_in_place(
    items: &mut Vec<VertexId>,
    at: usize,
    visit: &mut impl FnMut(&Vec<VertexId>),
) {
    if at == items.len() {
        visit(items);
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permute_in_place(items, at + 1, visit);
        items.swap(at, i);
    }
}

fn below<R: RngCore>(rng: &mut R, bound: u64) -> u64 {
    // unbiased bounded sampling by rejection
    let cap = u64::MAX - u64::MAX % bound;
    loop {
        let r = rng.next_u64();
        if r < cap {
            return r % bound;
        }
    }
}

/// A seeded random connected graph: a uniform random labeled tree (decoded
/// from a random Prüfer sequence) plus each remaining pair independently
/// with probability `extra_p`.
pub fn random_connected_graph(n: usize, extra_p: &BigRational, seed: u64) -> Graph {
    assert!(n >= 1);
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    if n >= 2 {
        let sequence: Vec<usize> = (0..n.saturating_sub(2))
            .map(|_| below(&mut rng, n as u64) as usize)
            .collect();
        edges = prufer_decode(n, &sequence);
    }
    let mut present: HashSet<(usize, usize)> = edges.iter().copied().collect();
    // reuse the exact Bernoulli via a one-shot graph sample over the pairs
    let overlay = gen_gnp(n, extra_p, rng.next_u64()).expect("probability validated by caller");
    for &(u, v) in overlay.edges() {
        if present.insert((u, v)) {
            edges.push((u, v));
        }
    }
    edges.sort_unstable();
    Graph::new(n, &edges).expect("tree plus extras is simple")
}

fn prufer_decode(n: usize, sequence: &[usize]) -> Vec<(VertexId, VertexId)> {
    let mut degree = vec![1usize; n];
    for &s in sequence {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in sequence {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf.min(s), leaf.max(s)));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((last[0], last[1]));
    edges
}

/// A seeded G(n, 1/2) sample conditioned on diameter <= 2 (hence radius
/// <= 2 and connected), found by rejection over derived seeds.
pub fn random_diameter_le2_graph(n: usize, seed: u64) -> Graph {
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    for attempt in 0..10_000u64 {
        let g = gen_gnp(n, &half, crate::random::trial_seed(seed, attempt)).expect("p valid");
        if let Ok(ecc) = g.eccentricities() {
            if ecc.iter().copied().max().unwrap_or(0) <= 2 {
                return g;
            }
        }
    }
    unreachable!("diameter-2 samples are abundant at p = 1/2")
}

/// `m` pairwise distinct positive rationals with small numerators and
/// denominators, seeded.
pub fn random_distinct_labels(m: usize, seed: u64) -> LabelSet {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut labels = Vec::with_capacity(m);
    while labels.len() < m {
        let numer = below(&mut rng, 10_000) + 1;
        let denom = below(&mut rng, 100) + 1;
        let value = BigRational::new(BigInt::from(numer), BigInt::from(denom));
        if seen.insert(value.clone()) {
            labels.push(Label::new(value).expect("positive by construction"));
        }
    }
    LabelSet::new(labels).expect("deduplicated")
}
