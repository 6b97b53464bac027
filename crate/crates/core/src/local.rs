//! Local antimagic orientation for any graph without isolated vertices and
//! any set of distinct positive labels: adjacent vertices always receive
//! distinct sums, negative on odd BFS levels and positive on even ones.

use crate::error::{Error, Result};
use crate::graph::{Graph, LevelStructure, VertexId};
use crate::labels::LabelSet;
use crate::orientation::{LabeledOrientation, OrientationBuilder};
use crate::stages::StagedAssignment;

/// The label partition for one connected graph: `cross` holds the largest
/// labels, one per cross-level edge, and `within[i]` is the ascending block
/// for the edges inside level `i` (`within[0]` is always empty).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelPartition {
    pub cross: LabelSet,
    pub within: Vec<LabelSet>,
}

/// Splits a sorted label set against a level structure: the largest labels
/// (one per cross-level edge) become the cross block, and the remaining
/// values form contiguous ascending blocks sized by each level's internal
/// edge count, assigned to levels 1, 2, ... in order. This realizes the
/// ordering constraint `min cross > max within[i]` for every level.
pub fn partition_labels(
    labels: &LabelSet,
    ls: &LevelStructure,
    g: &Graph,
) -> Result<LabelPartition> {
    if labels.len() != g.edge_count() {
        return Err(Error::LabelCountMismatch {
            expected: g.edge_count(),
            got: labels.len(),
        });
    }
    let mut within_counts = vec![0usize; ls.levels.len()];
    let mut cross_count = 0usize;
    for &(u, v) in g.edges() {
        if ls.level_of[u] == ls.level_of[v] {
            within_counts[ls.level_of[u]] += 1;
        } else {
            cross_count += 1;
        }
    }
    let (lower, cross) = labels.split_top(cross_count);
    let mut within = lower.split_blocks(&within_counts[1..]);
    within.insert(0, LabelSet::new(Vec::new()).expect("empty set"));
    Ok(LabelPartition { cross, within })
}

/// Builds an orientation and bijective labeling under which any two adjacent
/// vertices have distinct vertex sums, for any distinct positive label set.
/// Components are processed in canonical order with contiguous ascending
/// label blocks; within each component the root is `root_choice` when it
/// lies inside, otherwise the smallest vertex id. Every vertex on an odd
/// level ends with a negative sum and every vertex on an even level
/// (including each root) with a positive one.
pub fn construct_local_antimagic(
    g: &Graph,
    labels: &LabelSet,
    root_choice: Option<VertexId>,
) -> Result<LabeledOrientation> {
    if let Some(r) = root_choice {
        if r >= g.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: r,
                n: g.vertex_count(),
            });
        }
    }
    if labels.len() != g.edge_count() {
        return Err(Error::LabelCountMismatch {
            expected: g.edge_count(),
            got: labels.len(),
        });
    }
    let degrees = g.degrees();
    if let Some(v) = degrees.iter().position(|&d| d == 0) {
        return Err(Error::IsolatedVertex(v));
    }

    let components = g.connected_components();
    let sizes: Vec<usize> = components.iter().map(|c| c.edges.len()).collect();
    let blocks = labels.split_blocks(&sizes);
    let mut builder = OrientationBuilder::new(g.edge_count());
    for (component, block) in components.iter().zip(&blocks) {
        let sub = g.induced(&component.vertices);
        let root = root_choice
            .filter(|r| component.vertices.binary_search(r).is_ok())
            .unwrap_or(component.vertices[0]);
        let root_sub = component
            .vertices
            .binary_search(&root)
            .expect("root lies in the component");
        let ls = sub.graph.bfs_levels(root_sub)?;
        let assignment = assign_connected(&sub.graph, &ls, block)?;
        for (e_sub, arc) in assignment.arcs().iter().enumerate() {
            let e = sub.edge_map[e_sub];
            builder.orient(e, sub.vertex_map[arc.tail], sub.vertex_map[arc.head]);
            builder.label(e, arc.label.clone());
        }
    }
    Ok(builder.finish())
}

/// The staged construction on one connected graph: within-level lemma
/// labelings, parity-directed cross edges, non-tree cross labels, then the
/// monotone tree-edge stages from the deepest level up to level 1.
fn assign_connected(g: &Graph, ls: &LevelStructure, labels: &LabelSet) -> Result<LabeledOrientation> {
    let partition = partition_labels(labels, ls, g)?;
    let mut stage = StagedAssignment::new(g, ls, &partition);
    stage.apply_within_levels(&partition)?;
    stage.orient_cross_edges();
    stage.label_non_tree_cross();
    for level in (1..=ls.depth()).rev() {
        stage.assign_level_tree_edges(level);
    }
    Ok(stage.finish())
}
