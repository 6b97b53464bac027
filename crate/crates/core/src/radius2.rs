//! Full antimagic orientation for connected graphs of radius at most two:
//! all vertex sums pairwise distinct, for any distinct positive label set.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::euler::Polarity;
use crate::graph::{Graph, VertexId};
use crate::labels::{Label, LabelSet};
use crate::local::partition_labels;
use crate::orientation::LabeledOrientation;
use crate::stages::{sort_for_monotone, StagedAssignment};

/// Builds an orientation and bijection with all vertex sums pairwise
/// distinct. The root is the smallest-id center vertex; level-1 sums come
/// out negative, the root and level-2 sums positive. Accepts radius 0
/// (a single vertex), 1 (the degenerate one-level case), and 2.
pub fn construct_antimagic_radius2(g: &Graph, labels: &LabelSet) -> Result<LabeledOrientation> {
    Ok(construct_traced(g, labels)?.1)
}

/// The integer specialization: labels `{1, ..., m}`, satisfying the
/// classical definition of an antimagic orientation.
pub fn construct_antimagic_integer(g: &Graph) -> Result<LabeledOrientation> {
    construct_antimagic_radius2(g, &LabelSet::consecutive(g.edge_count()))
}

/// Runs the construction and also returns the vertex sums as they stood
/// just before the level-1 rearrangement; that step must leave the root and
/// every level-2 sum unchanged.
fn construct_traced(
    g: &Graph,
    labels: &LabelSet,
) -> Result<(Vec<BigRational>, LabeledOrientation)> {
    let (radius, center) = g.radius()?;
    if radius > 2 {
        return Err(Error::RadiusExceeded(radius));
    }
    if labels.len() != g.edge_count() {
        return Err(Error::LabelCountMismatch {
            expected: g.edge_count(),
            got: labels.len(),
        });
    }
    let ls = g.bfs_levels(center)?;
    let partition = partition_labels(labels, &ls, g)?;
    let mut stage = StagedAssignment::new(g, &ls, &partition);
    if ls.depth() == 0 {
        return Ok((stage.sums().to_vec(), stage.finish()));
    }

    stage.apply_within_levels(&partition)?;
    stage.orient_cross_edges();
    stage.label_non_tree_cross();

    // All root-incident edges are tree edges e_v for v in level 1. Label all
    // but one with the next smallest cross labels in ascending endpoint
    // order; the skipped edge e_u goes to the smallest level-1 vertex.
    let level1 = ls.levels[1].clone();
    let root_edge = ls.tree_edge[level1[0]].expect("level-1 vertex has a tree edge");
    for &v in &level1[1..] {
        let e = ls.tree_edge[v].expect("level-1 vertex has a tree edge");
        let label = stage.next_pool_label();
        stage.set_label(e, label);
    }

    // Monotone stage over the root and level 2: each target's one unlabeled
    // edge enters it, so ascending labels against ascending partial sums
    // give distinct positive sums.
    let mut targets: Vec<(VertexId, BigRational)> = vec![(center, stage.sums()[center].clone())];
    if ls.depth() == 2 {
        targets.extend(
            ls.levels[2]
                .iter()
                .map(|&v| (v, stage.sums()[v].clone())),
        );
    }
    sort_for_monotone(&mut targets, Polarity::Reversed);
    for (v, _) in targets {
        let e = if v == center {
            root_edge
        } else {
            ls.tree_edge[v].expect("level-2 vertex has a tree edge")
        };
        let label = stage.next_pool_label();
        stage.set_label(e, label);
    }

    let pre_rearrangement = stage.sums().to_vec();

    // Rearrange the root-incident labels against each level-1 vertex's
    // partial sum (everything except its own tree edge, which leaves it).
    // The root keeps the same label multiset, so its sum is untouched.
    let mut pool: Vec<Label> = level1
        .iter()
        .map(|&v| {
            let e = ls.tree_edge[v].expect("level-1 vertex has a tree edge");
            stage.label_of(e).expect("labeled in earlier stages").clone()
        })
        .collect();
    pool.sort();
    let mut v1_targets: Vec<(VertexId, BigRational)> = level1
        .iter()
        .map(|&v| {
            let e = ls.tree_edge[v].expect("level-1 vertex has a tree edge");
            let own = stage.label_of(e).expect("labeled").value().clone();
            (v, stage.sums()[v].clone() + own)
        })
        .collect();
    sort_for_monotone(&mut v1_targets, Polarity::Normal);
    for ((v, _), label) in v1_targets.into_iter().zip(pool) {
        let e = ls.tree_edge[v].expect("level-1 vertex has a tree edge");
        stage.relabel(e, label);
    }

    Ok((pre_rearrangement, stage.finish()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{check_antimagic, vertex_sums};
    use num_bigint::BigInt;
    use num_traits::Signed;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn star_breaks_leaf_ties_by_id() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let a = construct_antimagic_radius2(&g, &LabelSet::consecutive(3)).unwrap();
        for e in 0..3 {
            assert_eq!(a.arc(e).head, 0);
            assert_eq!(a.arc(e).label.to_string(), (e + 1).to_string());
        }
        let sums = vertex_sums(&g, &a).unwrap();
        assert_eq!(sums.sums(), &[rat(6), rat(-1), rat(-2), rat(-3)]);
        assert!(check_antimagic(&g, &a).passed());
    }

    #[test]
    fn c4_matches_the_hand_execution() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let a = construct_antimagic_radius2(&g, &LabelSet::consecutive(4)).unwrap();
        // non-tree cross edge (2,3) takes label 1, root edge (3,0) label 2,
        // then the monotone stage gives (1,2) label 3 and (0,1) label 4
        assert_eq!(a.arc(2).label.to_string(), "1");
        assert_eq!(a.arc(3).label.to_string(), "2");
        assert_eq!(a.arc(1).label.to_string(), "3");
        assert_eq!(a.arc(0).label.to_string(), "4");
        let sums = vertex_sums(&g, &a).unwrap();
        assert_eq!(sums.sums(), &[rat(6), rat(-7), rat(4), rat(-3)]);
        assert!(check_antimagic(&g, &a).passed());
    }

    #[test]
    fn k2_is_the_radius_one_base_case() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let labels = LabelSet::new(vec!["7".parse().unwrap()]).unwrap();
        let a = construct_antimagic_radius2(&g, &labels).unwrap();
        assert_eq!((a.arc(0).tail, a.arc(0).head), (1, 0));
        let sums = vertex_sums(&g, &a).unwrap();
        assert_eq!(sums.sums(), &[rat(7), rat(-7)]);
    }

    #[test]
    fn single_vertex_yields_the_empty_assignment() {
        let g = Graph::new(1, &[]).unwrap();
        let a = construct_antimagic_radius2(&g, &LabelSet::consecutive(0)).unwrap();
        assert!(a.is_empty());
    }

    #[test]
    fn rearrangement_resolves_level_one_collisions() {
        // paw: star at 0 plus the edge (2,3); before rearranging, vertices
        // 1 and 3 would both sit at -4
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (2, 3)]).unwrap();
        let (pre, a) = construct_traced(&g, &LabelSet::consecutive(4)).unwrap();
        assert_eq!(pre, vec![rat(9), rat(-4), rat(-1), rat(-4)]);
        let sums = vertex_sums(&g, &a).unwrap();
        assert_eq!(sums.sums(), &[rat(9), rat(-3), rat(-1), rat(-5)]);
        assert!(check_antimagic(&g, &a).passed());
    }

    #[test]
    fn rearrangement_leaves_root_and_level2_sums_unchanged() {
        let g = Graph::new(
            6,
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 5), (4, 5), (1, 2)],
        )
        .unwrap();
        let (pre, a) = construct_traced(&g, &LabelSet::consecutive(8)).unwrap();
        let ls = g.bfs_levels(g.radius().unwrap().1).unwrap();
        let sums = vertex_sums(&g, &a).unwrap();
        for (v, pre_sum) in pre.iter().enumerate() {
            if ls.level_of[v] != 1 {
                assert_eq!(sums.sum(v), pre_sum, "vertex {v} sum must not move");
            }
        }
        assert!(check_antimagic(&g, &a).passed());
    }

    #[test]
    fn integer_corollary_on_c5_k4_p4() {
        for edges in [
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            vec![(0, 1), (1, 2), (2, 3)],
        ] {
            let n = edges.iter().flat_map(|&(u, v)| [u, v]).max().unwrap() + 1;
            let g = Graph::new(n, &edges).unwrap();
            let a = construct_antimagic_integer(&g).unwrap();
            assert!(check_antimagic(&g, &a).passed());
        }
    }

    #[test]
    fn level_sums_split_by_sign() {
        let g = Graph::new(5, &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        let (r, center) = g.radius().unwrap();
        assert_eq!(r, 2);
        let a = construct_antimagic_integer(&g).unwrap();
        let ls = g.bfs_levels(center).unwrap();
        let sums = vertex_sums(&g, &a).unwrap();
        for v in 0..g.vertex_count() {
            if ls.level_of[v] == 1 {
                assert!(sums.sum(v).is_negative());
            } else {
                assert!(sums.sum(v).is_positive());
            }
        }
    }

    #[test]
    fn rejects_radius_three_and_disconnected() {
        let p6 = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(
            construct_antimagic_integer(&p6),
            Err(Error::RadiusExceeded(3))
        );
        let split = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(
            construct_antimagic_radius2(&split, &LabelSet::consecutive(1)),
            Err(Error::Disconnected)
        );
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(
            construct_antimagic_radius2(&k2, &LabelSet::consecutive(2)),
            Err(Error::LabelCountMismatch {
                expected: 1,
                got: 2
            })
        );
    }
}
