//! Seeded G(n,p) sampling, the exact no-common-neighbor expectation, and the
//! Monte Carlo batches behind the diameter-two and antimagic-pipeline
//! experiments. Aggregation is order-insensitive, so parallel and serial
//! runs of a batch produce identical records.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand_chacha::ChaCha12Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::radius2::construct_antimagic_integer;
use crate::verify::check_antimagic;

/// Statistics of one trial batch. All fractions and means are exact
/// rationals; `frac_antimagic_verified` is only populated by the pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialBatchRecord {
    pub n: usize,
    pub p: BigRational,
    pub trials: u64,
    pub seed: u64,
    pub frac_diam_le2: BigRational,
    pub frac_radius_le2: BigRational,
    pub mean_x: BigRational,
    pub expected_x: BigRational,
    pub frac_x_ge_1: BigRational,
    pub markov_ok: bool,
    pub frac_antimagic_verified: Option<BigRational>,
}

/// Derives the per-trial seed from the batch seed by a fixed splitmix-style
/// mix, so trials are independent of scheduling order.
pub fn trial_seed(seed: u64, trial: u64) -> u64 {
    splitmix64(seed ^ splitmix64(trial))
}

fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Consumes one random bit at a time from a ChaCha word stream.
struct BitSource<R: RngCore> {
    rng: R,
    buf: u64,
    remaining: u32,
}

impl<R: RngCore> BitSource<R> {
    fn new(rng: R) -> Self {
        BitSource {
            rng,
            buf: 0,
            remaining: 0,
        }
    }

    fn next_bit(&mut self) -> bool {
        if self.remaining == 0 {
            self.buf = self.rng.next_u64();
            self.remaining = 64;
        }
        let bit = self.buf & 1 == 1;
        self.buf >>= 1;
        self.remaining -= 1;
        bit
    }
}

/// Exact Bernoulli(p) for rational p: compares a uniform bit stream against
/// the binary expansion of p, consuming ~2 bits on average and exactly one
/// when p = 1/2.
fn bernoulli_exact<R: RngCore>(bits: &mut BitSource<R>, numer: &BigInt, denom: &BigInt) -> bool {
    if numer.is_zero() {
        return false;
    }
    if numer == denom {
        return true;
    }
    // fast path: u64 arithmetic when the fraction is small enough to double
    if let (Ok(num), Ok(den)) = (u64::try_from(numer), u64::try_from(denom)) {
        if den <= u64::MAX / 2 {
            let mut a = num;
            loop {
                a *= 2;
                let digit = a >= den;
                if digit {
                    a -= den;
                }
                let r = bits.next_bit();
                if r != digit {
                    return digit;
                }
                if a == 0 {
                    return false;
                }
            }
        }
    }
    let mut a = numer.clone();
    loop {
        a *= 2;
        let digit = a >= *denom;
        if digit {
            a -= denom;
        }
        let r = bits.next_bit();
        if r != digit {
            return digit;
        }
        if a.is_zero() {
            return false;
        }
    }
}

/// Samples G(n, p): every unordered pair becomes an edge independently with
/// probability exactly `p`, driven by a ChaCha stream seeded from `seed`.
/// Identical `(n, p, seed)` always yields the identical graph.
pub fn gen_gnp(n: usize, p: &BigRational, seed: u64) -> Result<Graph> {
    if p.is_negative() || *p > BigRational::one() {
        return Err(Error::ProbabilityOutOfRange);
    }
    let mut bits = BitSource::new(ChaCha12Rng::seed_from_u64(seed));
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if bernoulli_exact(&mut bits, p.numer(), p.denom()) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges)
}

/// Exact expected number of vertex pairs with no common neighbor in G(n,p):
/// `C(n,2) * (1 - p^2)^(n-2)`.
pub fn expected_no_common_neighbor(n: usize, p: &BigRational) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::TooFewVertices(n));
    }
    if p.is_negative() || *p > BigRational::one() {
        return Err(Error::ProbabilityOutOfRange);
    }
    let pairs = BigRational::from_integer(BigInt::from(n) * BigInt::from(n - 1) / BigInt::from(2));
    let miss = BigRational::one() - p * p;
    let e = (n - 2) as u32;
    let power = BigRational::new(miss.numer().pow(e), miss.denom().pow(e));
    Ok(pairs * power)
}

/// Number of unordered vertex pairs (adjacent or not) with no common
/// neighbor.
pub fn no_common_neighbor_pairs(g: &Graph) -> u64 {
    let n = g.vertex_count();
    let words = n.div_ceil(64);
    let mut rows = vec![vec![0u64; words]; n];
    for &(u, v) in g.edges() {
        rows[u][v / 64] |= 1 << (v % 64);
        rows[v][u / 64] |= 1 << (u % 64);
    }
    let mut count = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            let common = (0..words).any(|w| rows[i][w] & rows[j][w] != 0);
            if !common {
                count += 1;
            }
        }
    }
    count
}

#[derive(Clone, Copy, Default)]
struct Aggregate {
    diam_le2: u64,
    radius_le2: u64,
    x_total: u64,
    x_ge_1: u64,
    verified: u64,
}

impl Aggregate {
    fn merge(self, other: Aggregate) -> Aggregate {
        Aggregate {
            diam_le2: self.diam_le2 + other.diam_le2,
            radius_le2: self.radius_le2 + other.radius_le2,
            x_total: self.x_total + other.x_total,
            x_ge_1: self.x_ge_1 + other.x_ge_1,
            verified: self.verified + other.verified,
        }
    }
}

fn run_trial(n: usize, p: &BigRational, seed: u64, construct: bool) -> Result<Aggregate> {
    let g = gen_gnp(n, p, seed)?;
    let x = no_common_neighbor_pairs(&g);
    // disconnected samples count as diameter and radius > 2
    let (diam_le2, radius_le2) = match g.eccentricities() {
        Ok(ecc) => (
            ecc.iter().copied().max().unwrap_or(0) <= 2,
            ecc.iter().copied().min().unwrap_or(0) <= 2,
        ),
        Err(_) => (false, false),
    };
    let verified = if construct && radius_le2 {
        let a = construct_antimagic_integer(&g)?;
        check_antimagic(&g, &a).passed()
    } else {
        false
    };
    Ok(Aggregate {
        diam_le2: diam_le2 as u64,
        radius_le2: radius_le2 as u64,
        x_total: x,
        x_ge_1: (x >= 1) as u64,
        verified: verified as u64,
    })
}

fn run_batch(
    n: usize,
    p: &BigRational,
    trials: u64,
    seed: u64,
    construct: bool,
) -> Result<TrialBatchRecord> {
    if p.is_negative() || *p > BigRational::one() {
        return Err(Error::ProbabilityOutOfRange);
    }
    let agg = (0..trials)
        .into_par_iter()
        .map(|t| run_trial(n, p, trial_seed(seed, t), construct))
        .try_reduce(Aggregate::default, |a, b| Ok(a.merge(b)))?;

    let frac = |count: u64| BigRational::new(BigInt::from(count), BigInt::from(trials));
    let expected_x = if n >= 2 {
        expected_no_common_neighbor(n, p)?
    } else {
        BigRational::zero()
    };
    let frac_x_ge_1 = frac(agg.x_ge_1);
    // Markov says P(X >= 1) <= E(X); allow 4 standard errors of sampling
    // slack, compared exactly by squaring.
    let gap = &frac_x_ge_1 - &expected_x;
    let markov_ok = !gap.is_positive()
        || &gap * &gap
            <= BigRational::from_integer(BigInt::from(16)) * &expected_x
                / BigRational::from_integer(BigInt::from(trials));
    Ok(TrialBatchRecord {
        n,
        p: p.clone(),
        trials,
        seed,
        frac_diam_le2: frac(agg.diam_le2),
        frac_radius_le2: frac(agg.radius_le2),
        mean_x: frac(agg.x_total),
        expected_x,
        frac_x_ge_1,
        markov_ok,
        frac_antimagic_verified: construct.then(|| frac(agg.verified)),
    })
}

/// Samples `trials` graphs from G(n,p) and aggregates the diameter-two
/// statistics: exact per-trial counts of common-neighborless pairs, flags
/// for diameter and radius at most two, and the Markov comparison of
/// `frac_X_ge_1` against the exact expectation.
pub fn diameter2_trials(
    n: usize,
    p: &BigRational,
    trials: u64,
    seed: u64,
) -> Result<TrialBatchRecord> {
    run_batch(n, p, trials, seed, false)
}

/// The end-to-end experiment at p = 1/2: for every sample with radius at
/// most two, builds the integer antimagic orientation and verifies it. A
/// verification failure on any radius-2 sample is a defect, not noise, so
/// the fractions must agree.
pub fn antimagic_pipeline_trials(n: usize, trials: u64, seed: u64) -> Result<TrialBatchRecord> {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    run_batch(n, &half, trials, seed, true)
}
