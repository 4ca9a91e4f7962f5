//! Shared fixtures for the benchmarks.

use bkvpg::{generate, GenParams, Instance};

/// Generated instance on a grid sized so most paths cross several others.
pub fn fixture(n: usize, k: u32, c: u64, seed: u64) -> Instance {
    let side = ((n as f64).sqrt().ceil() as i64 * (c as i64 + 1) / 2).max(c as i64 * (k as i64 + 1));
    generate(&GenParams {
        n,
        k,
        c,
        grid_w: side,
        grid_h: side,
        weight_min: 1,
        weight_max: 100,
        seed,
    })
    .expect("fixture parameters are valid")
}
