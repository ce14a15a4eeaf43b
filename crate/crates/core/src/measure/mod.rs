//! Probability laws on the real line in closed form.
//!
//! Four representations are supported: finitely many atoms, an empirical
//! sample, a piecewise-linear CDF, and finite mixtures of these. Every
//! quantity the rest of the crate needs (F, its left limit F⁻, the
//! antiderivative of F vanishing at 0, partial first moments) is evaluated
//! exactly from prefix tables, with no quadrature.

mod discrete;
mod pwl;
mod spec;

use rand::distr::Open01;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use discrete::Discrete;
use pwl::Pwl;
pub use spec::{validate, DistributionSpec};

/// Absolute tolerance on total mass, mixture weights and CDF endpoints.
pub const MASS_TOL: f64 = 1e-12;

/// Deepest allowed mixture nesting.
pub const MAX_DEPTH: usize = 8;

/// The vertical slice `[F⁻(x), F(x)]` of the filled-in graph at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CdfPair {
    pub left: f64,
    pub right: f64,
}

impl CdfPair {
    pub fn contains(&self, y: f64, tol: f64) -> bool {
        y >= self.left - tol && y <= self.right + tol
    }

    /// Size of the jump of F at this point.
    pub fn jump(&self) -> f64 {
        self.right - self.left
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Atoms,
    Empirical,
    PwlCdf,
    Mixture,
}

/// Sorted breakpoints of F with the left and right limits of F at each.
///
/// Between consecutive breakpoints F is affine, running from `right[k]` to
/// `left[k + 1]`; it is 0 before the first and 1 from the last on.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Breaks {
    pub(crate) x: Vec<f64>,
    pub(crate) left: Vec<f64>,
    pub(crate) right: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
enum Law {
    Atoms(Discrete),
    Empirical {
        samples: Vec<f64>,
        table: Discrete,
    },
    PwlCdf(Pwl),
    Mixture {
        weights: Vec<f64>,
        components: Vec<Distribution>,
        depth: usize,
        upper: f64,
    },
}

/// A validated, immutable probability law on ℝ.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    law: Law,
    breaks: Breaks,
}

fn ensure_finite(xs: impl IntoIterator<Item = f64>, what: &'static str) -> Result<()> {
    if xs.into_iter().all(f64::is_finite) {
        Ok(())
    } else {
        Err(Error::NonFinite(what))
    }
}

impl Distribution {
    /// Point masses `(location, mass)`. Locations must be nondecreasing;
    /// repeated locations are merged. Masses are renormalized to sum to 1
    /// once the total has been checked against [`MASS_TOL`].
    pub fn atoms(points: &[(f64, f64)]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptySupport);
        }
        ensure_finite(points.iter().flat_map(|&(x, p)| [x, p]), "atoms")?;
        let mut locs: Vec<f64> = Vec::with_capacity(points.len());
        let mut masses: Vec<f64> = Vec::with_capacity(points.len());
        for (index, &(x, p)) in points.iter().enumerate() {
            if p <= 0.0 {
                return Err(Error::NonPositiveMass {
                    what: "mass",
                    value: p,
                    index,
                });
            }
            match locs.last() {
                Some(&last) if x < last => {
                    return Err(Error::NonMonotone {
                        what: "atom locations",
                        index,
                    })
                }
                Some(&last) if x == last => *masses.last_mut().unwrap() += p,
                _ => {
                    locs.push(x);
                    masses.push(p);
                }
            }
        }
        let total = crate::numeric::accurate_sum(masses.iter().copied());
        spec::check_total(total)?;
        masses.iter_mut().for_each(|p| *p /= total);
        Ok(Self::from_law(Law::Atoms(Discrete::from_masses(locs, masses))))
    }

    /// Empirical law of a sample; the sample is sorted, duplicates kept.
    pub fn empirical(samples: &[f64]) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptySupport);
        }
        ensure_finite(samples.iter().copied(), "samples")?;
        let mut sorted = samples.to_vec();
        sorted.sort_by(f64::total_cmp);
        let n = sorted.len() as f64;
        let mut locs = Vec::new();
        let mut counts: Vec<usize> = Vec::new();
        for &x in &sorted {
            if locs.last() == Some(&x) {
                *counts.last_mut().unwrap() += 1;
            } else {
                locs.push(x);
                counts.push(1);
            }
        }
        let masses = counts.iter().map(|&c| c as f64 / n).collect();
        let cum = counts
            .iter()
            .scan(0usize, |acc, &c| {
                *acc += c;
                Some(*acc as f64 / n)
            })
            .collect();
        let table = Discrete::from_parts(locs, masses, cum);
        Ok(Self::from_law(Law::Empirical { samples: sorted, table }))
    }

    /// Piecewise-linear CDF through `(x, F)` knots.
    pub fn pwl_cdf(knots: &[(f64, f64)]) -> Result<Self> {
        if knots.is_empty() {
            return Err(Error::EmptySupport);
        }
        ensure_finite(knots.iter().flat_map(|&(x, f)| [x, f]), "knots")?;
        for (index, w) in knots.windows(2).enumerate() {
            if w[1].0 <= w[0].0 {
                return Err(Error::NonMonotone {
                    what: "knot locations",
                    index: index + 1,
                });
            }
            if w[1].1 < w[0].1 {
                return Err(Error::NonMonotone {
                    what: "cdf values",
                    index: index + 1,
                });
            }
        }
        let first = knots[0].1;
        let last = knots[knots.len() - 1].1;
        if knots.len() < 2 || first.abs() > MASS_TOL || (last - 1.0).abs() > MASS_TOL {
            return Err(Error::CdfEndpoints { first, last });
        }
        let xs = knots.iter().map(|k| k.0).collect();
        let mut fs: Vec<f64> = knots.iter().map(|k| k.1.clamp(0.0, 1.0)).collect();
        fs[0] = 0.0;
        *fs.last_mut().unwrap() = 1.0;
        Ok(Self::from_law(Law::PwlCdf(Pwl::new(xs, fs))))
    }

    /// Finite mixture; weights are checked against [`MASS_TOL`] and renormalized.
    pub fn mixture(components: Vec<Distribution>, weights: &[f64]) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptySupport);
        }
        if components.len() != weights.len() {
            return Err(Error::ComponentMismatch {
                weights: weights.len(),
                components: components.len(),
            });
        }
        ensure_finite(weights.iter().copied(), "weights")?;
        if let Some((index, &value)) = weights.iter().enumerate().find(|(_, &w)| w <= 0.0) {
            return Err(Error::NonPositiveMass {
                what: "weight",
                value,
                index,
            });
        }
        let depth = 1 + components.iter().map(Distribution::depth).max().unwrap_or(0);
        if depth > MAX_DEPTH {
            return Err(Error::DepthExceeded { max: MAX_DEPTH });
        }
        let total = crate::numeric::accurate_sum(weights.iter().copied());
        spec::check_total(total)?;
        let weights = weights.iter().map(|w| w / total).collect();
        let upper = components
            .iter()
            .map(|c| c.support().1)
            .fold(f64::NEG_INFINITY, f64::max);
        Ok(Self::from_law(Law::Mixture {
            weights,
            components,
            depth,
            upper,
        }))
    }

    pub fn from_spec(spec: &DistributionSpec) -> Result<Self> {
        validate(spec)
    }

    fn from_law(law: Law) -> Self {
        let x: Vec<f64> = match &law {
            Law::Atoms(t) | Law::Empirical { table: t, .. } => t.locs.clone(),
            Law::PwlCdf(p) => p.xs.clone(),
            Law::Mixture { components, .. } => {
                let mut all: Vec<f64> = components.iter().flat_map(|c| c.breaks.x.iter().copied()).collect();
                all.sort_by(f64::total_cmp);
                all.dedup();
                all
            }
        };
        let mut d = Distribution {
            law,
            breaks: Breaks {
                x: Vec::new(),
                left: Vec::new(),
                right: Vec::new(),
            },
        };
        let left = x.iter().map(|&b| d.left_cdf(b)).collect();
        let right = x.iter().map(|&b| d.cdf(b)).collect();
        d.breaks = Breaks { x, left, right };
        d
    }

    pub fn kind(&self) -> Kind {
        match self.law {
            Law::Atoms(_) => Kind::Atoms,
            Law::Empirical { .. } => Kind::Empirical,
            Law::PwlCdf(_) => Kind::PwlCdf,
            Law::Mixture { .. } => Kind::Mixture,
        }
    }

    /// Mixture nesting depth; 0 for the plain representations.
    pub fn depth(&self) -> usize {
        match self.law {
            Law::Mixture { depth, .. } => depth,
            _ => 0,
        }
    }

    /// Right-continuous distribution function F(x) = P(X <= x).
    pub fn cdf(&self, x: f64) -> f64 {
        match &self.law {
            Law::Atoms(t) | Law::Empirical { table: t, .. } => t.cdf(x),
            Law::PwlCdf(p) => p.cdf(x),
            Law::Mixture { upper, .. } if x >= *upper => 1.0,
            Law::Mixture {
                weights, components, ..
            } => weights
                .iter()
                .zip(components)
                .map(|(w, c)| w * c.cdf(x))
                .sum::<f64>()
                .min(1.0),
        }
    }

    /// Left-continuous version F⁻(x) = P(X < x).
    pub fn left_cdf(&self, x: f64) -> f64 {
        match &self.law {
            Law::Atoms(t) | Law::Empirical { table: t, .. } => t.left_cdf(x),
            Law::PwlCdf(p) => p.cdf(x),
            Law::Mixture { upper, .. } if x > *upper => 1.0,
            Law::Mixture {
                weights, components, ..
            } => weights
                .iter()
                .zip(components)
                .map(|(w, c)| w * c.left_cdf(x))
                .sum::<f64>()
                .min(1.0),
        }
    }

    pub fn cdf_pair(&self, x: f64) -> CdfPair {
        CdfPair {
            left: self.left_cdf(x),
            right: self.cdf(x),
        }
    }

    /// The convex primitive of F that vanishes at 0 (signed for x < 0).
    pub fn antiderivative(&self, x: f64) -> f64 {
        // adding 0 turns a -0 from `0 * x` into +0
        0.0 + match &self.law {
            Law::Atoms(t) | Law::Empirical { table: t, .. } => t.antiderivative(x),
            Law::PwlCdf(p) => p.antiderivative(x),
            Law::Mixture {
                weights, components, ..
            } => weights
                .iter()
                .zip(components)
                .map(|(w, c)| w * c.antiderivative(x))
                .sum(),
        }
    }

    /// P(]a, b]) = F(b) - F(a).
    pub fn interval_prob(&self, a: f64, b: f64) -> Result<f64> {
        if a.is_nan() || b.is_nan() || a > b {
            return Err(Error::BadInterval { a, b });
        }
        Ok((self.cdf(b) - self.cdf(a)).max(0.0))
    }

    /// The integral of y dP(y) over ]-inf, x], computed from masses or
    /// densities rather than from F.
    pub fn partial_moment(&self, x: f64) -> f64 {
        match &self.law {
            Law::Atoms(t) | Law::Empirical { table: t, .. } => t.partial_moment(x),
            Law::PwlCdf(p) => p.partial_moment(x),
            Law::Mixture {
                weights, components, ..
            } => weights
                .iter()
                .zip(components)
                .map(|(w, c)| w * c.partial_moment(x))
                .sum(),
        }
    }

    /// The integral of x dP(x) over the half-open interval ]a, b].
    pub fn first_moment(&self, a: f64, b: f64) -> Result<f64> {
        if a.is_nan() || b.is_nan() || a > b {
            return Err(Error::BadInterval { a, b });
        }
        Ok(self.partial_moment(b) - self.partial_moment(a))
    }

    /// E[X], finite for every representable law.
    pub fn mean(&self) -> f64 {
        self.partial_moment(self.support().1)
    }

    /// Exact value of the pinball moment, the integral of rho_tau(x) dP(x).
    pub fn pinball_moment(&self, tau: f64) -> Result<f64> {
        if !(tau > 0.0 && tau < 1.0) {
            return Err(Error::BadTau(tau));
        }
        let below = self.partial_moment(0.0);
        let above = (self.mean() - below).max(0.0);
        Ok(tau * above + (1.0 - tau) * (-below).max(0.0))
    }

    /// Smallest and largest breakpoint: F = 0 strictly left of the first,
    /// F = 1 from the last on.
    pub fn support(&self) -> (f64, f64) {
        let x = &self.breaks.x;
        (x[0], x[x.len() - 1])
    }

    /// Sorted atoms and knots where F is not affine.
    pub fn breakpoints(&self) -> &[f64] {
        &self.breaks.x
    }

    pub(crate) fn breaks(&self) -> &Breaks {
        &self.breaks
    }

    /// The law as `(location, mass)` pairs when it is purely atomic.
    /// Mixture components are concatenated, not merged.
    pub fn atoms_list(&self) -> Option<Vec<(f64, f64)>> {
        match &self.law {
            Law::Atoms(t) | Law::Empirical { table: t, .. } => {
                Some(t.locs.iter().copied().zip(t.masses.iter().copied()).collect())
            }
            Law::PwlCdf(_) => None,
            Law::Mixture {
                weights, components, ..
            } => {
                let mut out = Vec::new();
                for (w, c) in weights.iter().zip(components) {
                    out.extend(c.atoms_list()?.into_iter().map(|(x, p)| (x, w * p)));
                }
                Some(out)
            }
        }
    }

    pub fn to_spec(&self) -> DistributionSpec {
        match &self.law {
            Law::Atoms(t) => DistributionSpec::Atoms {
                points: t.locs.iter().copied().zip(t.masses.iter().copied()).collect(),
            },
            Law::Empirical { samples, .. } => DistributionSpec::Empirical {
                samples: samples.clone(),
            },
            Law::PwlCdf(p) => DistributionSpec::PwlCdf {
                knots: p.xs.iter().copied().zip(p.fs.iter().copied()).collect(),
            },
            Law::Mixture {
                weights, components, ..
            } => DistributionSpec::Mixture {
                weights: weights.clone(),
                components: components.iter().map(Distribution::to_spec).collect(),
            },
        }
    }

    /// The law of X + c.
    pub fn shifted(&self, c: f64) -> Result<Self> {
        validate(&self.to_spec().shifted(c))
    }

    /// `n` draws by inverse transform: each open-unit uniform `u` maps to the
    /// midpoint of the set of u-quantiles. ChaCha8 seeded from `seed`.
    pub fn sample(&self, n: usize, seed: u64) -> Vec<f64> {
        self.sample_iter(seed).take(n).collect()
    }

    pub fn sample_iter(&self, seed: u64) -> Samples<'_> {
        Samples {
            law: self,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

/// Endless stream of draws from a [`Distribution`].
#[derive(Debug, Clone)]
pub struct Samples<'a> {
    law: &'a Distribution,
    rng: ChaCha8Rng,
}

impl Iterator for Samples<'_> {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        let u: f64 = self.rng.sample(Open01);
        let (lo, hi) = self.law.breaks.quantile_bounds(u);
        Some(if lo == hi { lo } else { lo + 0.5 * (hi - lo) })
    }
}
