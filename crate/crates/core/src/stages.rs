//! Shared machinery for the level-staged constructions: within-level
//! labeling via the Euler lemma, cross-edge orientation by level parity,
//! and monotone label assignment against running partial sums.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Result;
use crate::euler::{lemma_orient_label, Polarity};
use crate::graph::{EdgeId, Graph, LevelStructure, VertexId};
use crate::labels::Label;
use crate::local::LabelPartition;
use crate::orientation::{LabeledOrientation, OrientationBuilder};

/// Odd levels get the normal bound (sums negative or small), even levels the
/// reversed one; cross edges leave odd levels and enter even levels.
pub(crate) fn level_polarity(level: usize) -> Polarity {
    if level % 2 == 1 {
        Polarity::Normal
    } else {
        Polarity::Reversed
    }
}

/// A partially built assignment over one connected graph, tracking running
/// partial vertex sums as labels land. The cross-label pool (the partition's
/// largest block) is consumed in ascending order.
pub(crate) struct StagedAssignment<'a> {
    g: &'a Graph,
    ls: &'a LevelStructure,
    builder: OrientationBuilder,
    sums: Vec<BigRational>,
    pool: Vec<Label>,
    next: usize,
    is_tree: Vec<bool>,
}

impl<'a> StagedAssignment<'a> {
    pub fn new(g: &'a Graph, ls: &'a LevelStructure, partition: &LabelPartition) -> Self {
        let mut is_tree = vec![false; g.edge_count()];
        for e in ls.tree_edge.iter().flatten() {
            is_tree[*e] = true;
        }
        StagedAssignment {
            g,
            ls,
            builder: OrientationBuilder::new(g.edge_count()),
            sums: vec![BigRational::zero(); g.vertex_count()],
            pool: partition.cross.as_slice().to_vec(),
            next: 0,
            is_tree,
        }
    }

    pub fn sums(&self) -> &[BigRational] {
        &self.sums
    }

    pub fn next_pool_label(&mut self) -> Label {
        let label = self.pool[self.next].clone();
        self.next += 1;
        label
    }

    pub fn label_of(&self, e: EdgeId) -> Option<&Label> {
        self.builder.label_of(e)
    }

    /// Labels an already-oriented edge and folds it into the partial sums.
    pub fn set_label(&mut self, e: EdgeId, label: Label) {
        let (tail, head) = self.builder.direction(e).expect("edge oriented before labeling");
        self.sums[head] += label.value();
        self.sums[tail] -= label.value();
        self.builder.label(e, label);
    }

    /// Swaps the label of an already-labeled edge, adjusting partial sums.
    pub fn relabel(&mut self, e: EdgeId, label: Label) {
        let (tail, head) = self.builder.direction(e).expect("edge oriented");
        let old = self.builder.replace_label(e, label.clone());
        self.sums[head] += label.value() - old.value();
        self.sums[tail] -= label.value() - old.value();
    }

    /// Labels every within-level subgraph `G[V_i]` with its block via the
    /// Euler lemma, normal polarity on odd levels and reversed on even.
    pub fn apply_within_levels(&mut self, partition: &LabelPartition) -> Result<()> {
        for (level, block) in partition.within.iter().enumerate().skip(1) {
            let vertices = &self.ls.levels[level];
            let sub = self.g.induced(vertices);
            if sub.graph.edge_count() == 0 {
                continue;
            }
            let assignment = lemma_orient_label(&sub.graph, block, level_polarity(level))?;
            for (e_sub, arc) in assignment.arcs().iter().enumerate() {
                let e = sub.edge_map[e_sub];
                let tail = sub.vertex_map[arc.tail];
                let head = sub.vertex_map[arc.head];
                self.builder.orient(e, tail, head);
                self.sums[head] += arc.label.value();
                self.sums[tail] -= arc.label.value();
                self.builder.label(e, arc.label.clone());
            }
        }
        Ok(())
    }

    /// Orients every cross edge by the parity of its deeper level: out of
    /// odd levels (toward the root side), into even levels.
    pub fn orient_cross_edges(&mut self) {
        for (e, &(u, v)) in self.g.edges().iter().enumerate() {
            let (lu, lv) = (self.ls.level_of[u], self.ls.level_of[v]);
            if lu == lv {
                continue;
            }
            debug_assert_eq!(lu.abs_diff(lv), 1);
            let (deep, shallow) = if lu > lv { (u, v) } else { (v, u) };
            let deep_level = self.ls.level_of[deep];
            if deep_level % 2 == 1 {
                self.builder.orient(e, deep, shallow);
            } else {
                self.builder.orient(e, shallow, deep);
            }
        }
    }

    /// Gives the non-tree cross edges the smallest pool labels in ascending
    /// edge-id order.
    pub fn label_non_tree_cross(&mut self) {
        for e in 0..self.g.edge_count() {
            let (u, v) = self.g.edge(e);
            if self.ls.level_of[u] != self.ls.level_of[v] && !self.is_tree[e] {
                let label = self.next_pool_label();
                self.set_label(e, label);
            }
        }
    }

    /// Monotone stage for one level's tree edges: takes the next `|V_i|`
    /// pool labels and matches them against partial sums so that on odd
    /// levels a smaller label lands on a larger partial sum (final sums
    /// distinct negative) and on even levels on a smaller partial sum
    /// (final sums distinct positive). Ties break by ascending vertex id.
    pub fn assign_level_tree_edges(&mut self, level: usize) {
        let mut targets: Vec<(VertexId, BigRational)> = self.ls.levels[level]
            .iter()
            .map(|&v| (v, self.sums[v].clone()))
            .collect();
        sort_for_monotone(&mut targets, level_polarity(level));
        for (v, _) in targets {
            let e = self.ls.tree_edge[v].expect("non-root vertex has a tree edge");
            let label = self.next_pool_label();
            self.set_label(e, label);
        }
    }

    pub fn finish(self) -> LabeledOrientation {
        debug_assert_eq!(self.next, self.pool.len());
        self.builder.finish()
    }
}

/// Orders targets so that zipping with ascending labels realizes the
/// monotone rule: under `Normal` (odd levels) larger partial sums come
/// first; under `Reversed` (even levels) smaller partial sums come first.
pub(crate) fn sort_for_monotone(targets: &mut [(VertexId, BigRational)], polarity: Polarity) {
    targets.sort_by(|a, b| {
        let by_sum = match polarity {
            Polarity::Normal => b.1.cmp(&a.1),
            Polarity::Reversed => a.1.cmp(&b.1),
        };
        match by_sum {
            Ordering::Equal => a.0.cmp(&b.0),
            other => other,
        }
    });
}
