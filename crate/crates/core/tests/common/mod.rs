#![allow(dead_code)]

use std::path::PathBuf;

use qmin::Distribution;
use rand::Rng;

/// Padded support hull `[lo, hi]` to draw probe points from.
pub fn window(d: &Distribution) -> (f64, f64) {
    let (lo, hi) = d.support();
    let pad = 0.5 * (hi - lo).max(1.0);
    (lo - pad, hi + pad)
}

pub fn breakpoint<R: Rng>(rng: &mut R, d: &Distribution) -> f64 {
    let xs = d.breakpoints();
    xs[rng.random_range(0..xs.len())]
}

/// A probe point, exactly at a breakpoint a third of the time.
pub fn point<R: Rng>(rng: &mut R, d: &Distribution) -> f64 {
    if rng.random_bool(1.0 / 3.0) {
        breakpoint(rng, d)
    } else {
        let (lo, hi) = window(d);
        rng.random_range(lo..=hi)
    }
}

/// `a < b` from three regimes: generic, both ends at breakpoints, and `b - a = 1e-9`.
pub fn interval<R: Rng>(rng: &mut R, d: &Distribution) -> (f64, f64) {
    let (u, v) = match rng.random_range(0..3) {
        0 => (point(rng, d), point(rng, d)),
        1 => (breakpoint(rng, d), breakpoint(rng, d)),
        _ => {
            let a = point(rng, d);
            return (a, a + 1e-9);
        }
    };
    if u == v {
        (u - 0.5, u)
    } else {
        (u.min(v), u.max(v))
    }
}

/// A point at least `clearance` away from every breakpoint.
pub fn off_breakpoint<R: Rng>(rng: &mut R, d: &Distribution, clearance: f64) -> Option<f64> {
    let xs = d.breakpoints();
    let (lo, hi) = window(d);
    for _ in 0..1000 {
        let q = rng.random_range(lo..=hi);
        let k = xs.partition_point(|&x| x < q);
        let left = k == 0 || q - xs[k - 1] >= clearance;
        let right = k == xs.len() || xs[k] - q >= clearance;
        if left && right {
            return Some(q);
        }
    }
    None
}

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples/data")
        .join(name)
}
