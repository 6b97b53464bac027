//! Eulerization, canonical Euler circuits, and the circuit-order labeling
//! that bounds every vertex sum by `s(v) < 0` or `s(v) <= max L` (or the
//! reversed dual).

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, MultiEdge, Multigraph, VertexId};
use crate::labels::LabelSet;
use crate::orientation::{LabeledOrientation, OrientationBuilder};

/// Which side of the bound the labeling targets. `Normal` yields
/// `s(v) < 0 or s(v) <= max L`; `Reversed` flips every arc and yields
/// `s(v) > 0 or s(v) >= -max L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarity {
    Normal,
    Reversed,
}

/// A closed walk traversing every multigraph edge exactly once. Step `i`
/// leaves `steps[i].0` along edge `steps[i].1`; the final edge returns to
/// `start`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerCircuit {
    pub start: VertexId,
    pub steps: Vec<(VertexId, EdgeId)>,
}

impl EulerCircuit {
    /// Checks consecutive incidence, closure, and that every edge appears
    /// exactly once.
    pub fn is_valid_for(&self, mg: &Multigraph) -> bool {
        if self.steps.len() != mg.edge_count() {
            return false;
        }
        if self.steps.is_empty() {
            return true;
        }
        let mut used = vec![false; mg.edge_count()];
        let mut at = self.start;
        for &(from, e) in &self.steps {
            if from != at || used[e] {
                return false;
            }
            used[e] = true;
            let edge = mg.edge(e);
            if edge.u == at {
                at = edge.v;
            } else if edge.v == at {
                at = edge.u;
            } else {
                return false;
            }
        }
        at == self.start
    }
}

/// Adds one augmented edge per consecutive pair of odd-degree vertices
/// (listed ascending), so every degree becomes even. Augmented edges are
/// appended after the real edges.
pub fn eulerize(g: &Graph) -> Multigraph {
    let degrees = g.degrees();
    let odd: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| degrees[v] % 2 == 1).collect();
    let mut edges: Vec<MultiEdge> = g
        .edges()
        .iter()
        .map(|&(u, v)| MultiEdge {
            u,
            v,
            augmented: false,
        })
        .collect();
    for pair in odd.chunks(2) {
        edges.push(MultiEdge {
            u: pair[0],
            v: pair[1],
            augmented: true,
        });
    }
    Multigraph::new(g.vertex_count(), edges).expect("eulerization yields a valid multigraph")
}

/// Canonical Hierholzer circuit. If augmented edges exist, the start vertex
/// is the smallest-id endpoint of an augmented edge (the smallest odd-degree
/// vertex of the original graph) and its augmented edge is traversed first;
/// otherwise the walk starts at the smallest-id vertex. At every step the
/// smallest available (neighbor id, edge id) is taken; detours are spliced
/// in at the first position with unused edges.
pub fn euler_circuit(mg: &Multigraph) -> Result<EulerCircuit> {
    let degrees = mg.degrees();
    if let Some(v) = (0..mg.vertex_count()).find(|&v| degrees[v] % 2 == 1) {
        return Err(Error::OddDegree(v));
    }
    if !mg.is_connected() {
        return Err(Error::Disconnected);
    }
    if mg.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }

    let augmented_start = mg
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.augmented)
        .map(|(id, e)| (e.u.min(e.v), id))
        .min();

    let (start, forced_first) = match augmented_start {
        Some((v, edge)) => (v, Some(edge)),
        None => (0, None),
    };

    let adj = mg.adjacency();
    let mut used = vec![false; mg.edge_count()];
    let mut cursor = vec![0usize; mg.vertex_count()];

    // Walks greedily from `at` until stuck (which, with all degrees even,
    // happens exactly back at `at`).
    let walk = |from: VertexId,
                    first: Option<EdgeId>,
                    used: &mut Vec<bool>,
                    cursor: &mut Vec<usize>| {
        let mut steps = Vec::new();
        let mut at = from;
        if let Some(e) = first {
            let edge = mg.edge(e);
            used[e] = true;
            steps.push((at, e));
            at = if edge.u == at { edge.v } else { edge.u };
        }
        loop {
            let list = &adj[at];
            while cursor[at] < list.len() && used[list[cursor[at]].1] {
                cursor[at] += 1;
            }
            if cursor[at] >= list.len() {
                break;
            }
            let (next, e) = list[cursor[at]];
            used[e] = true;
            steps.push((at, e));
            at = next;
        }
        debug_assert_eq!(at, from);
        steps
    };

    let mut tour = walk(start, forced_first, &mut used, &mut cursor);

    // First-gap splicing: scan for the earliest vertex with unused incident
    // edges and insert a detour there. Edges before the scan point stay
    // exhausted, so the cursor never moves backwards.
    let mut i = 0;
    while i < tour.len() {
        let at = tour[i].0;
        let list = &adj[at];
        while cursor[at] < list.len() && used[list[cursor[at]].1] {
            cursor[at] += 1;
        }
        if cursor[at] < list.len() {
            let detour = walk(at, None, &mut used, &mut cursor);
            let tail = tour.split_off(i);
            tour.extend(detour);
            tour.extend(tail);
        } else {
            i += 1;
        }
    }

    if used.iter().any(|&u| !u) {
        return Err(Error::Disconnected);
    }
    Ok(EulerCircuit { start, steps: tour })
}

/// The Euler-circuit labeling bound: orients every edge along a canonical
/// circuit and assigns the component's labels in circuit order, so each
/// vertex sum is negative or at most the component's largest label (dual
/// bounds under `Reversed`). Components are processed in canonical order,
/// each taking a contiguous ascending block of the sorted labels sized by
/// its edge count; isolated vertices are untouched and end with sum 0.
pub fn lemma_orient_label(
    g: &Graph,
    labels: &LabelSet,
    polarity: Polarity,
) -> Result<LabeledOrientation> {
    if labels.len() != g.edge_count() {
        return Err(Error::LabelCountMismatch {
            expected: g.edge_count(),
            got: labels.len(),
        });
    }
    let components = g.connected_components();
    let sizes: Vec<usize> = components.iter().map(|c| c.edges.len()).collect();
    let blocks = labels.split_blocks(&sizes);
    let mut builder = OrientationBuilder::new(g.edge_count());
    for (component, block) in components.iter().zip(&blocks) {
        if component.edges.is_empty() {
            continue;
        }
        let sub = g.induced(&component.vertices);
        let mg = eulerize(&sub.graph);
        let circuit = euler_circuit(&mg)?;
        let mut next_label = block.iter();
        for &(from, e) in &circuit.steps {
            let edge = mg.edge(e);
            if edge.augmented {
                continue;
            }
            let to = if edge.u == from { edge.v } else { edge.u };
            let original = sub.edge_map[e];
            let (tail, head) = match polarity {
                Polarity::Normal => (sub.vertex_map[from], sub.vertex_map[to]),
                Polarity::Reversed => (sub.vertex_map[to], sub.vertex_map[from]),
            };
            builder.orient(original, tail, head);
            builder.label(original, next_label.next().expect("block sized by edges").clone());
        }
    }
    Ok(builder.finish())
}
