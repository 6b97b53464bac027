//! Independent verification: recomputes vertex sums from raw
//! (tail, head, label) triples and checks the antimagic properties, plus an
//! exhaustive oracle over all orientations and bijections for tiny
//! instances. Nothing here calls construction code.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::labels::{Label, LabelSet};
use crate::orientation::{Arc, LabeledOrientation};

/// Exact vertex sums `s(v) = sum(in-labels) - sum(out-labels)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSumTable {
    sums: Vec<BigRational>,
}

impl VertexSumTable {
    pub fn sums(&self) -> &[BigRational] {
        &self.sums
    }

    pub fn sum(&self, v: VertexId) -> &BigRational {
        &self.sums[v]
    }

    pub fn min(&self) -> Option<&BigRational> {
        self.sums.iter().min()
    }

    pub fn max(&self) -> Option<&BigRational> {
        self.sums.iter().max()
    }

    pub fn zero_count(&self) -> usize {
        self.sums.iter().filter(|s| s.is_zero()).count()
    }

    /// Always zero on a valid assignment: every label appears once with
    /// each sign.
    pub fn total(&self) -> BigRational {
        self.sums.iter().sum()
    }
}

/// Recomputes all vertex sums. Errors if the assignment does not cover the
/// graph's edges exactly.
pub fn vertex_sums(g: &Graph, a: &LabeledOrientation) -> Result<VertexSumTable> {
    if a.len() != g.edge_count() {
        return Err(Error::ArcCountMismatch {
            expected: g.edge_count(),
            got: a.len(),
        });
    }
    let mut sums = vec![BigRational::zero(); g.vertex_count()];
    for (e, arc) in a.arcs().iter().enumerate() {
        let (u, v) = g.edge(e);
        if (arc.tail, arc.head) != (u, v) && (arc.tail, arc.head) != (v, u) {
            return Err(Error::ArcEndpointMismatch(e));
        }
        sums[arc.head] += arc.label.value();
        sums[arc.tail] -= arc.label.value();
    }
    Ok(VertexSumTable { sums })
}

/// Which distinctness property a check or oracle run targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    /// Adjacent vertices must have distinct sums.
    Local,
    /// All vertices must have distinct sums.
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportMode {
    Local,
    Full,
    LemmaBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// The assignment itself is malformed (non-bijection or arc/edge
    /// mismatch); distinct from a genuine antimagic violation.
    Invalid,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Two vertices that must differ share a sum.
    EqualSums {
        u: VertexId,
        v: VertexId,
        sum: BigRational,
    },
    /// A vertex escapes the Euler-lemma bound.
    BoundExceeded {
        vertex: VertexId,
        sum: BigRational,
        bound: BigRational,
    },
    /// Why the assignment is not even well-formed.
    InvalidAssignment(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub mode: ReportMode,
    pub verdict: Verdict,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

fn structural_defects(g: &Graph, a: &LabeledOrientation) -> Vec<Violation> {
    let mut defects = Vec::new();
    if a.len() != g.edge_count() {
        defects.push(Violation::InvalidAssignment(format!(
            "assignment covers {} edges but the graph has {}",
            a.len(),
            g.edge_count()
        )));
        return defects;
    }
    for (e, arc) in a.arcs().iter().enumerate() {
        let (u, v) = g.edge(e);
        if (arc.tail, arc.head) != (u, v) && (arc.tail, arc.head) != (v, u) {
            defects.push(Violation::InvalidAssignment(format!(
                "arc {} -> {} does not match edge {e} = {{{u}, {v}}}",
                arc.tail, arc.head
            )));
        }
    }
    if !defects.is_empty() {
        return defects;
    }
    let labels = a.labels_sorted();
    for pair in labels.windows(2) {
        if pair[0] == pair[1] {
            defects.push(Violation::InvalidAssignment(format!(
                "label {} used more than once",
                pair[0]
            )));
        }
    }
    defects
}

fn sum_check(g: &Graph, a: &LabeledOrientation, mode: CheckMode) -> VerificationReport {
    let report_mode = match mode {
        CheckMode::Local => ReportMode::Local,
        CheckMode::Full => ReportMode::Full,
    };
    let defects = structural_defects(g, a);
    if !defects.is_empty() {
        return VerificationReport {
            mode: report_mode,
            verdict: Verdict::Invalid,
            violations: defects,
        };
    }
    let sums = vertex_sums(g, a).expect("structure already validated").sums;
    let mut violations = Vec::new();
    match mode {
        CheckMode::Local => {
            for &(u, v) in g.edges() {
                if sums[u] == sums[v] {
                    let (u, v) = (u.min(v), u.max(v));
                    violations.push(Violation::EqualSums {
                        u,
                        v,
                        sum: sums[u].clone(),
                    });
                }
            }
        }
        CheckMode::Full => {
            let mut by_sum: HashMap<&BigRational, Vec<VertexId>> = HashMap::new();
            for (v, s) in sums.iter().enumerate() {
                by_sum.entry(s).or_default().push(v);
            }
            let mut groups: Vec<Vec<VertexId>> =
                by_sum.into_values().filter(|g| g.len() > 1).collect();
            groups.sort();
            for group in groups {
                for pair in group.windows(2) {
                    violations.push(Violation::EqualSums {
                        u: pair[0],
                        v: pair[1],
                        sum: sums[pair[0]].clone(),
                    });
                }
            }
        }
    }
    VerificationReport {
        mode: report_mode,
        verdict: if violations.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        violations,
    }
}

/// Flags adjacent vertex pairs with equal sums.
pub fn check_local_antimagic(g: &Graph, a: &LabeledOrientation) -> VerificationReport {
    sum_check(g, a, CheckMode::Local)
}

/// Flags any two vertices with equal sums.
pub fn check_antimagic(g: &Graph, a: &LabeledOrientation) -> VerificationReport {
    sum_check(g, a, CheckMode::Full)
}

/// Largest label on each component's edges, in canonical component order;
/// `None` for edgeless components. Under the contiguous-block contract this
/// is exactly the component's block maximum.
pub fn component_label_maxima(g: &Graph, a: &LabeledOrientation) -> Vec<Option<Label>> {
    g.connected_components()
        .iter()
        .map(|c| c.edges.iter().map(|&e| a.arc(e).label.clone()).max())
        .collect()
}

/// Checks the Euler-lemma bound per vertex: under `Normal`, flags any `v`
/// with `s(v) >= 0` and `s(v) > block max`; under `Reversed`, any `v` with
/// `s(v) <= 0` and `s(v) < -block max`. Vertices in edgeless components
/// (sum 0) pass vacuously.
pub fn check_lemma_bound(
    g: &Graph,
    a: &LabeledOrientation,
    block_max: &[Option<Label>],
    polarity: crate::euler::Polarity,
) -> VerificationReport {
    let defects = structural_defects(g, a);
    if !defects.is_empty() {
        return VerificationReport {
            mode: ReportMode::LemmaBound,
            verdict: Verdict::Invalid,
            violations: defects,
        };
    }
    let components = g.connected_components();
    if block_max.len() != components.len() {
        return VerificationReport {
            mode: ReportMode::LemmaBound,
            verdict: Verdict::Invalid,
            violations: vec![Violation::InvalidAssignment(format!(
                "{} block maxima supplied for {} components",
                block_max.len(),
                components.len()
            ))],
        };
    }
    let sums = vertex_sums(g, a).expect("structure already validated").sums;
    let mut violations = Vec::new();
    for (component, bound) in components.iter().zip(block_max) {
        let Some(bound) = bound else { continue };
        for &v in &component.vertices {
            let s = &sums[v];
            let violated = match polarity {
                crate::euler::Polarity::Normal => !s.is_negative() && s > bound.value(),
                crate::euler::Polarity::Reversed => {
                    !s.is_positive() && *s < -bound.value().clone()
                }
            };
            if violated {
                violations.push(Violation::BoundExceeded {
                    vertex: v,
                    sum: s.clone(),
                    bound: bound.value().clone(),
                });
            }
        }
    }
    VerificationReport {
        mode: ReportMode::LemmaBound,
        verdict: if violations.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        violations,
    }
}

/// Largest out-degree/in-degree imbalance over all vertices.
pub fn degree_imbalance(g: &Graph, a: &LabeledOrientation) -> usize {
    let mut out = vec![0i64; g.vertex_count()];
    for arc in a.arcs() {
        out[arc.tail] += 1;
        out[arc.head] -= 1;
    }
    out.iter().map(|d| d.unsigned_abs() as usize).max().unwrap_or(0)
}

/// Outcome of the exhaustive oracle over all `2^m * m!` assignments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleOutcome {
    pub exists: bool,
    /// The first valid assignment in canonical enumeration order:
    /// orientation bitmasks ascending (bit `e` set = edge `e` reversed),
    /// then label permutations in lexicographic order.
    pub witness: Option<LabeledOrientation>,
    pub count: u64,
}

pub const ORACLE_MAX_EDGES: usize = 8;

/// Enumerates every orientation and bijection of `labels` onto the edges and
/// counts the assignments satisfying `mode`. Ground truth for small
/// instances; rejects graphs with more than [`ORACLE_MAX_EDGES`] edges.
pub fn exhaustive_oracle(g: &Graph, labels: &LabelSet, mode: CheckMode) -> Result<OracleOutcome> {
    let m = g.edge_count();
    if m > ORACLE_MAX_EDGES {
        return Err(Error::OracleTooLarge {
            edges: m,
            max: ORACLE_MAX_EDGES,
        });
    }
    if labels.len() != m {
        return Err(Error::LabelCountMismatch {
            expected: m,
            got: labels.len(),
        });
    }

    // Work over integers when a common denominator fits comfortably in i64;
    // equality of sums is preserved under positive scaling.
    let scaled = scale_to_integers(labels);
    let outcome = (0u64..1 << m)
        .into_par_iter()
        .map(|mask| enumerate_mask(g, labels, &scaled, mode, mask))
        .reduce(
            || MaskOutcome {
                count: 0,
                first: None,
            },
            |a, b| MaskOutcome {
                count: a.count + b.count,
                first: match (a.first, b.first) {
                    (Some(x), Some(y)) => Some(if x.0 <= y.0 { x } else { y }),
                    (x, None) => x,
                    (None, y) => y,
                },
            },
        );

    Ok(OracleOutcome {
        exists: outcome.count > 0,
        witness: outcome.first.map(|(_, w)| w),
        count: outcome.count,
    })
}

struct MaskOutcome {
    count: u64,
    /// ((mask, permutation index), witness)
    first: Option<((u64, u64), LabeledOrientation)>,
}

fn scale_to_integers(labels: &LabelSet) -> Option<Vec<i64>> {
    let mut lcm = BigInt::from(1);
    for label in labels {
        lcm = num_integer::lcm(lcm, label.value().denom().clone());
    }
    let mut scaled = Vec::with_capacity(labels.len());
    let mut total = BigInt::zero();
    for label in labels {
        let v = label.value().numer() * (&lcm / label.value().denom());
        total += v.abs();
        scaled.push(v);
    }
    // Sums stay within |total|, so i64 is safe with ample headroom.
    if total > BigInt::from(i64::MAX / 4) {
        return None;
    }
    Some(scaled.into_iter().map(|v| i64::try_from(v).unwrap()).collect())
}

fn enumerate_mask(
    g: &Graph,
    labels: &LabelSet,
    scaled: &Option<Vec<i64>>,
    mode: CheckMode,
    mask: u64,
) -> MaskOutcome {
    let m = g.edge_count();
    let n = g.vertex_count();
    let arcs: Vec<(VertexId, VertexId)> = (0..m)
        .map(|e| {
            let (u, v) = g.edge(e);
            if mask >> e & 1 == 0 {
                (u, v)
            } else {
                (v, u)
            }
        })
        .collect();

    // permutation[i] = index into the sorted label list assigned to edge i
    let mut perm: Vec<usize> = (0..m).collect();
    let mut perm_index = 0u64;
    let mut count = 0u64;
    let mut first = None;

    loop {
        let ok = match scaled {
            Some(ints) => {
                let mut sums = vec![0i64; n];
                for (e, &(tail, head)) in arcs.iter().enumerate() {
                    sums[tail] -= ints[perm[e]];
                    sums[head] += ints[perm[e]];
                }
                distinct_ok_int(g, &sums, mode)
            }
            None => {
                let mut sums = vec![BigRational::zero(); n];
                for (e, &(tail, head)) in arcs.iter().enumerate() {
                    let value = labels.as_slice()[perm[e]].value();
                    sums[tail] -= value;
                    sums[head] += value;
                }
                distinct_ok_big(g, &sums, mode)
            }
        };
        if ok {
            count += 1;
            if first.is_none() {
                let witness = LabeledOrientation::from_arcs(
                    arcs.iter()
                        .enumerate()
                        .map(|(e, &(tail, head))| Arc {
                            tail,
                            head,
                            label: labels.as_slice()[perm[e]].clone(),
                        })
                        .collect(),
                );
                first = Some(((mask, perm_index), witness));
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
        perm_index += 1;
    }
    MaskOutcome { count, first }
}

fn distinct_ok_int(g: &Graph, sums: &[i64], mode: CheckMode) -> bool {
    match mode {
        CheckMode::Local => g.edges().iter().all(|&(u, v)| sums[u] != sums[v]),
        CheckMode::Full => {
            for i in 0..sums.len() {
                for j in i + 1..sums.len() {
                    if sums[i] == sums[j] {
                        return false;
                    }
                }
            }
            true
        }
    }
}

fn distinct_ok_big(g: &Graph, sums: &[BigRational], mode: CheckMode) -> bool {
    match mode {
        CheckMode::Local => g.edges().iter().all(|&(u, v)| sums[u] != sums[v]),
        CheckMode::Full => {
            for i in 0..sums.len() {
                for j in i + 1..sums.len() {
                    if sums[i] == sums[j] {
                        return false;
                    }
                }
            }
            true
        }
    }
}

/// Classic in-place lexicographic successor; returns false after the last
/// permutation.
fn next_permutation(perm: &mut [usize]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}
