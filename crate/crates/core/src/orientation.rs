//! The central output type: an orientation of every edge plus a bijective
//! labeling.

use crate::graph::{EdgeId, VertexId};
use crate::labels::Label;

/// One oriented, labeled edge: the arc runs `tail -> head`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub tail: VertexId,
    pub head: VertexId,
    pub label: Label,
}

/// An orientation plus labeling of a graph, indexed by edge id. The arc at
/// index `e` orients edge `e` of the underlying graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledOrientation {
    arcs: Vec<Arc>,
}

impl LabeledOrientation {
    pub fn from_arcs(arcs: Vec<Arc>) -> Self {
        LabeledOrientation { arcs }
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn arc(&self, e: EdgeId) -> &Arc {
        &self.arcs[e]
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// The same labeling with every arc flipped.
    pub fn reversed(&self) -> Self {
        LabeledOrientation {
            arcs: self
                .arcs
                .iter()
                .map(|a| Arc {
                    tail: a.head,
                    head: a.tail,
                    label: a.label.clone(),
                })
                .collect(),
        }
    }

    /// All labels in ascending order (for bijection checks).
    pub fn labels_sorted(&self) -> Vec<&Label> {
        let mut labels: Vec<&Label> = self.arcs.iter().map(|a| &a.label).collect();
        labels.sort();
        labels
    }
}

/// Incrementally fills orientation and label slots per edge; the
/// constructions orient and label edges in separate passes.
#[derive(Debug)]
pub(crate) struct OrientationBuilder {
    directions: Vec<Option<(VertexId, VertexId)>>,
    labels: Vec<Option<Label>>,
}

impl OrientationBuilder {
    pub fn new(edge_count: usize) -> Self {
        OrientationBuilder {
            directions: vec![None; edge_count],
            labels: vec![None; edge_count],
        }
    }

    pub fn orient(&mut self, e: EdgeId, tail: VertexId, head: VertexId) {
        debug_assert!(self.directions[e].is_none());
        self.directions[e] = Some((tail, head));
    }

    pub fn label(&mut self, e: EdgeId, label: Label) {
        debug_assert!(self.labels[e].is_none());
        self.labels[e] = Some(label);
    }

    /// Replaces an existing label, returning the old one.
    pub fn replace_label(&mut self, e: EdgeId, label: Label) -> Label {
        self.labels[e].replace(label).expect("edge already labeled")
    }

    pub fn direction(&self, e: EdgeId) -> Option<(VertexId, VertexId)> {
        self.directions[e]
    }

    pub fn label_of(&self, e: EdgeId) -> Option<&Label> {
        self.labels[e].as_ref()
    }

    pub fn finish(self) -> LabeledOrientation {
        let arcs = self
            .directions
            .into_iter()
            .zip(self.labels)
            .map(|(dir, label)| {
                let (tail, head) = dir.expect("edge left unoriented");
                Arc {
                    tail,
                    head,
                    label: label.expect("edge left unlabeled"),
                }
            })
            .collect();
        LabeledOrientation { arcs }
    }
}
