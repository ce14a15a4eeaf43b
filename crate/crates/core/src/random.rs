//! Seeded generators of random laws for property tests and benchmarks.
//!
//! Besides generic draws, the generators deliberately produce the cases
//! where quantile computations go wrong: repeated locations, masses whose
//! partial sums land exactly on common levels (flat quantile sets), and
//! flat pieces in piecewise-linear CDFs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::measure::Distribution;

/// Generator for a law of the requested family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Atoms,
    Empirical,
    PwlCdf,
    Mixture,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Atoms, Family::Empirical, Family::PwlCdf, Family::Mixture];
}

/// Size limits for the generators.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub atoms: usize,
    pub samples: usize,
    pub knots: usize,
    pub components: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            atoms: 1_000,
            samples: 10_000,
            knots: 100,
            components: 4,
        }
    }
}

impl Limits {
    /// Limits suited to property tests with many cases.
    pub fn small() -> Self {
        Limits {
            atoms: 40,
            samples: 200,
            knots: 20,
            components: 3,
        }
    }
}

fn location<R: Rng>(rng: &mut R, center: f64, scale: f64, lattice: bool) -> f64 {
    if lattice {
        center + scale * f64::from(rng.random_range(-8i32..=8)) / 4.0
    } else {
        center + scale * rng.random_range(-2.0..=2.0)
    }
}

fn center_scale<R: Rng>(rng: &mut R) -> (f64, f64) {
    let center = rng.random_range(-20.0..=20.0);
    let scale = match rng.random_range(0..4) {
        0 => 0.01,
        1 => 1.0,
        2 => 10.0,
        _ => rng.random_range(0.1..=5.0),
    };
    (center, scale)
}

/// Atoms: up to `max` points. A third of the time all masses are equal,
/// which makes partial sums hit `k / n` exactly on a lattice of levels.
pub fn atoms<R: Rng>(rng: &mut R, max: usize) -> Distribution {
    let n = rng.random_range(1..=max.max(1));
    let (center, scale) = center_scale(rng);
    let lattice = rng.random_bool(0.3);
    let mut xs: Vec<f64> = (0..n).map(|_| location(rng, center, scale, lattice)).collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    let m = xs.len();
    let masses: Vec<f64> = if rng.random_bool(1.0 / 3.0) {
        vec![1.0 / m as f64; m]
    } else {
        let raw: Vec<f64> = (0..m).map(|_| rng.random_range(0.01..=1.0)).collect();
        let total: f64 = raw.iter().sum();
        raw.iter().map(|w| w / total).collect()
    };
    let points: Vec<(f64, f64)> = xs.into_iter().zip(masses).collect();
    Distribution::atoms(&points).expect("generated atoms are valid")
}

/// Empirical sample of up to `max` draws, rounded to a lattice half of the
/// time so that duplicates occur.
pub fn empirical<R: Rng>(rng: &mut R, max: usize) -> Distribution {
    let n = rng.random_range(1..=max.max(1));
    let (center, scale) = center_scale(rng);
    let lattice = rng.random_bool(0.5);
    let samples: Vec<f64> = (0..n).map(|_| location(rng, center, scale, lattice)).collect();
    Distribution::empirical(&samples).expect("generated samples are valid")
}

/// Piecewise-linear CDF with up to `max` knots (at least two). Some
/// increments are zero (flat pieces) and some knot levels are rounded to
/// quarters so that flats sit exactly at common levels.
pub fn pwl_cdf<R: Rng>(rng: &mut R, max: usize) -> Distribution {
    let n = rng.random_range(2..=max.max(2));
    let (center, scale) = center_scale(rng);
    let mut xs: Vec<f64> = (0..n).map(|_| location(rng, center, scale, false)).collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    if xs.len() < 2 {
        xs = vec![center - scale, center + scale];
    }
    let m = xs.len();
    let quarters = rng.random_bool(0.3);
    let mut fs: Vec<f64> = if quarters {
        let mut fs: Vec<f64> = (0..m).map(|_| f64::from(rng.random_range(0..=4u8)) / 4.0).collect();
        fs.sort_by(f64::total_cmp);
        fs
    } else {
        let raw: Vec<f64> = (1..m)
            .map(|_| {
                if rng.random_bool(0.2) {
                    0.0
                } else {
                    rng.random_range(0.01..=1.0)
                }
            })
            .collect();
        let total: f64 = raw.iter().sum();
        let mut acc = 0.0;
        std::iter::once(0.0)
            .chain(raw.iter().map(|r| {
                acc += r;
                acc / total.max(f64::MIN_POSITIVE)
            }))
            .collect()
    };
    fs[0] = 0.0;
    fs[m - 1] = 1.0;
    for k in 1..m {
        fs[k] = fs[k].max(fs[k - 1]).min(1.0);
    }
    let knots: Vec<(f64, f64)> = xs.into_iter().zip(fs).collect();
    Distribution::pwl_cdf(&knots).expect("generated knots are valid")
}

fn basic<R: Rng>(rng: &mut R, limits: &Limits) -> Distribution {
    match rng.random_range(0..3) {
        0 => atoms(rng, limits.atoms),
        1 => empirical(rng, limits.samples),
        _ => pwl_cdf(rng, limits.knots),
    }
}

fn weights<R: Rng>(rng: &mut R, k: usize) -> Vec<f64> {
    if rng.random_bool(0.3) {
        return vec![1.0 / k as f64; k];
    }
    let raw: Vec<f64> = (0..k).map(|_| rng.random_range(0.05..=1.0)).collect();
    let total: f64 = raw.iter().sum();
    raw.iter().map(|w| w / total).collect()
}

/// A two-level mixture: some components are themselves mixtures of basic laws.
pub fn mixture<R: Rng>(rng: &mut R, limits: &Limits) -> Distribution {
    let inner = Limits {
        atoms: (limits.atoms / 4).max(1),
        samples: (limits.samples / 4).max(1),
        knots: (limits.knots / 2).max(2),
        components: limits.components,
    };
    let k = rng.random_range(1..=limits.components.max(1));
    let mut components: Vec<Distribution> = (0..k)
        .map(|_| {
            if rng.random_bool(0.4) {
                let j = rng.random_range(1..=limits.components.max(1));
                let parts = (0..j).map(|_| basic(rng, &inner)).collect();
                Distribution::mixture(parts, &weights(rng, j)).expect("generated mixture is valid")
            } else {
                basic(rng, &inner)
            }
        })
        .collect();
    components.shuffle(rng);
    Distribution::mixture(components, &weights(rng, k)).expect("generated mixture is valid")
}

/// A law of the given family.
pub fn distribution<R: Rng>(rng: &mut R, family: Family, limits: &Limits) -> Distribution {
    match family {
        Family::Atoms => atoms(rng, limits.atoms),
        Family::Empirical => empirical(rng, limits.samples),
        Family::PwlCdf => pwl_cdf(rng, limits.knots),
        Family::Mixture => mixture(rng, limits),
    }
}

/// `count` laws cycling through the four families, reproducible from `seed`.
pub fn corpus(count: usize, seed: u64, limits: &Limits) -> Vec<Distribution> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| distribution(&mut rng, Family::ALL[i % 4], limits))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::Kind;

    #[test]
    fn corpus_is_reproducible_and_mixed() {
        let a = corpus(8, 3, &Limits::small());
        let b = corpus(8, 3, &Limits::small());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.to_spec(), y.to_spec());
        }
        let kinds: Vec<Kind> = a.iter().map(Distribution::kind).collect();
        assert_eq!(kinds[..4], [Kind::Atoms, Kind::Empirical, Kind::PwlCdf, Kind::Mixture]);
        assert!(a.iter().filter(|d| d.kind() == Kind::Mixture).all(|d| d.depth() <= 2));
    }
}
