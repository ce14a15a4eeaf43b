//! Quantiles as minimizers of `Phi`.
//!
//! `q` minimizes `Phi(q) = 𝐅(q) - tau q` exactly when `0` lies in
//! `[F⁻(q) - tau, F(q) - tau]`, i.e. when `Phi'(q; 1) >= 0` and
//! `Phi'(q; -1) >= 0`. [`minimize_phi`] locates both ends of the minimizer
//! set by bisecting on the signs of those one-sided derivatives.

use crate::error::{Error, Result};
use crate::graph::{refine_root, tie_tol, QuantileInterval};
use crate::measure::Distribution;
use crate::objective::{self, grid, minus_direction_derivative, right_derivative, PinballParams};

/// Minimum grid size accepted by [`grid_oracle`].
pub const MIN_GRID: usize = 1000;

/// Relative threshold used by [`grid_oracle`] to collect near-minimal points.
pub const GRID_VALUE_TOL: f64 = 1e-9;

/// Bisect `[a, b]` for the boundary of a monotone predicate with
/// `pred(a) != pred(b)`, until the bracket is at most `width` wide.
fn bisect(mut a: f64, mut b: f64, width: f64, pred: impl Fn(f64) -> bool) -> (f64, f64) {
    let at_a = pred(a);
    debug_assert_ne!(at_a, pred(b));
    while b - a > width {
        let mid = a + 0.5 * (b - a);
        if mid <= a || mid >= b {
            break;
        }
        if pred(mid) == at_a {
            a = mid;
        } else {
            b = mid;
        }
    }
    (a, b)
}

/// The full set of minimizers of `Phi`, a nonempty compact interval.
///
/// The bracket is the support hull widened by 1 on each side. Each endpoint
/// is bisected to width `1e-12 (1 + |bracket|)`, then snapped to a breakpoint
/// within that width, or else resolved exactly on the affine piece of F that
/// contains it and refined to the best double there.
pub fn minimize_phi(d: &Distribution, tau: f64) -> Result<QuantileInterval> {
    let tau = PinballParams::new(tau)?.tau();
    let eps = tie_tol(tau);
    let (smin, smax) = d.support();
    let (a, b) = (smin - 1.0, smax + 1.0);
    let width = 1e-12 * (1.0 + a.abs().max(b.abs()));
    let breaks = d.breaks();
    let xs = d.breakpoints();

    // lo: first q with Phi'(q; 1) >= -eps
    let (_, lo_hat) = bisect(a, b, width, |q| d.cdf(q) - tau >= -eps);
    let k = breaks.nearest(lo_hat);
    let lo = if (xs[k] - lo_hat).abs() <= width {
        xs[k]
    } else {
        let seg = xs.partition_point(|&x| x <= lo_hat).min(xs.len() - 1);
        breaks.lower_at(seg, tau, eps)
    };

    // hi: last q with Phi'(q; -1) >= -eps
    let (hi_hat, _) = bisect(a, b, width, |q| tau - d.left_cdf(q) >= -eps);
    let j = breaks.nearest(hi_hat);
    let hi = if (xs[j] - hi_hat).abs() <= width {
        xs[j]
    } else {
        let seg = xs.partition_point(|&x| x <= hi_hat).min(xs.len() - 1);
        breaks.upper_at(seg, tau, eps)
    };
    log::debug!("minimize_phi tau={tau}: bisection [{lo_hat}, {hi_hat}] -> [{lo}, {hi}]");
    Ok(QuantileInterval::new(refine_root(d, lo, tau), refine_root(d, hi, tau)))
}

/// Result of a brute-force scan of `Phi` on a uniform grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridScan {
    /// Hull of the grid points within the value band of the minimum.
    pub hull: QuantileInterval,
    /// Smallest value of `Phi` on the grid.
    pub best: f64,
    /// The band `1e-9 (1 + |best|)`.
    pub band: f64,
    /// Grid spacing.
    pub step: f64,
}

/// [`grid_oracle`] with the grid minimum and spacing.
pub fn grid_scan(d: &Distribution, tau: f64, lo: f64, hi: f64, n: usize) -> Result<GridScan> {
    PinballParams::new(tau)?;
    let (smin, smax) = d.support();
    if lo >= hi || lo > smin || hi < smax || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::BadBracket { lo, hi });
    }
    if n < MIN_GRID {
        return Err(Error::TooFewPoints { n, min: MIN_GRID });
    }
    let values: Vec<(f64, f64)> = grid(lo, hi, n)
        .map(|q| (q, objective::phi(d, tau, q).expect("tau checked")))
        .collect();
    let best = values.iter().map(|v| v.1).fold(f64::INFINITY, f64::min);
    let band = GRID_VALUE_TOL * (1.0 + best.abs());
    let mut near = values.iter().filter(|v| v.1 <= best + band).map(|v| v.0);
    let first = near.next().expect("grid minimum is attained");
    let last = near.next_back().unwrap_or(first);
    Ok(GridScan {
        hull: QuantileInterval::new(first, last),
        best,
        band,
        step: (hi - lo) / (n - 1) as f64,
    })
}

/// Brute-force minimizer: evaluates `Phi` on `n` uniform points of
/// `[lo, hi]` and returns the hull of those within
/// `1e-9 (1 + |Phi*|)` of the grid minimum `Phi*`.
pub fn grid_oracle(d: &Distribution, tau: f64, lo: f64, hi: f64, n: usize) -> Result<QuantileInterval> {
    grid_scan(d, tau, lo, hi, n).map(|s| s.hull)
}

/// The order-1 objective `∫ rho_tau(x - q) dP(x) = Phi(q) + ∫ rho_tau dP`.
pub fn order1_objective(d: &Distribution, tau: f64, q: f64) -> Result<f64> {
    Ok(objective::phi(d, tau, q)? + d.pinball_moment(tau)?)
}

/// The median set, minimizers of `Phi` at `tau = 1/2`.
pub fn median_set(d: &Distribution) -> QuantileInterval {
    minimize_phi(d, 0.5).expect("1/2 is an admissible level")
}

/// Whether `q` satisfies both one-sided optimality conditions within `tol`.
pub fn is_optimal(d: &Distribution, tau: f64, q: f64, tol: f64) -> Result<bool> {
    Ok(right_derivative(d, tau, q)? >= -tol && minus_direction_derivative(d, tau, q)? >= -tol)
}
