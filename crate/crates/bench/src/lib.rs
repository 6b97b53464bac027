//! Shared fixtures for the criterion benchmarks.

use antimagic::{gen_gnp, parse_rational, Graph};

/// A deterministic G(n, 1/2) sample for benchmarking.
pub fn gnp_half(n: usize, seed: u64) -> Graph {
    let p = parse_rational("1/2").unwrap();
    gen_gnp(n, &p, seed).expect("valid probability")
}

/// A deterministic G(n, 1/2) sample conditioned on radius <= 2.
pub fn gnp_half_radius2(n: usize, seed: u64) -> Graph {
    for attempt in 0..10_000 {
        let g = gnp_half(n, seed.wrapping_add(attempt));
        if g.radius().map(|(r, _)| r <= 2).unwrap_or(false) {
            return g;
        }
    }
    unreachable!("radius-2 samples are abundant at p = 1/2")
}
