//! The filled-in graph of F viewed as a maximal monotone operator.
//!
//! Vertical sections `{y : (x, y) in G}` are the subdifferentials of the
//! antiderivative of F; horizontal sections `{q : (q, tau) in G}` are the
//! sets of tau-quantiles. Both are read off the breakpoint table of a law.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::ext_real;
use crate::measure::{Breaks, CdfPair, Distribution};

/// Tie tolerance when comparing tau against values of F.
pub const TAU_TOL: f64 = 1e-12;

/// Slack allowed on `(x1 - x2)(y1 - y2) >= 0`.
pub const MONOTONE_TOL: f64 = 1e-14;

/// Closed interval of extended reals, possibly empty.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuantileInterval {
    #[serde(with = "ext_real")]
    pub lo: f64,
    #[serde(with = "ext_real")]
    pub hi: f64,
    pub empty: bool,
}

impl QuantileInterval {
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "[{lo}, {hi}]");
        QuantileInterval { lo, hi, empty: false }
    }

    pub fn empty() -> Self {
        QuantileInterval {
            lo: f64::INFINITY,
            hi: f64::NEG_INFINITY,
            empty: true,
        }
    }

    pub fn point(q: f64) -> Self {
        Self::new(q, q)
    }

    pub fn contains(&self, q: f64) -> bool {
        !self.empty && self.lo <= q && q <= self.hi
    }

    pub fn is_bounded(&self) -> bool {
        !self.empty && self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn width(&self) -> f64 {
        if self.empty {
            0.0
        } else {
            self.hi - self.lo
        }
    }

    pub fn midpoint(&self) -> f64 {
        self.lo + 0.5 * (self.hi - self.lo)
    }

    /// Largest endpoint distance, or infinity if emptiness differs.
    pub fn distance(&self, other: &Self) -> f64 {
        match (self.empty, other.empty) {
            (true, true) => 0.0,
            (false, false) => endpoint_gap(self.lo, other.lo).max(endpoint_gap(self.hi, other.hi)),
            _ => f64::INFINITY,
        }
    }
}

fn endpoint_gap(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs()
    }
}

/// A point `(x, y)` of the plane, with `y` a candidate value of F.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GraphPoint {
    pub x: f64,
    pub y: f64,
}

impl GraphPoint {
    pub fn new(x: f64, y: f64) -> Self {
        GraphPoint { x, y }
    }
}

/// Effective tie tolerance for `tau`. Kept below `tau` and `1 - tau` so
/// that quantile sets for interior `tau` stay bounded.
pub(crate) fn tie_tol(tau: f64) -> f64 {
    if tau > 0.0 && tau < 1.0 {
        TAU_TOL.min(0.5 * tau).min(0.5 * (1.0 - tau))
    } else {
        TAU_TOL
    }
}

impl Breaks {
    fn len(&self) -> usize {
        self.x.len()
    }

    /// Where the affine piece between breakpoints `k - 1` and `k` reaches `tau`.
    fn affine_root(&self, k: usize, tau: f64) -> f64 {
        let (x0, x1) = (self.x[k - 1], self.x[k]);
        let (f0, f1) = (self.right[k - 1], self.left[k]);
        let q = x0 + (tau - f0) / (f1 - f0) * (x1 - x0);
        q.clamp(x0, x1)
    }

    /// Lower quantile endpoint given `k`, the first breakpoint with
    /// `F(x_k) >= tau - eps`. The crossing is either the jump at `x_k` or
    /// inside the affine piece just before it.
    pub(crate) fn lower_at(&self, k: usize, tau: f64, eps: f64) -> f64 {
        let left = self.left[k];
        if k == 0 || left <= tau + eps {
            self.x[k]
        } else {
            self.affine_root(k, tau)
        }
    }

    /// Upper quantile endpoint given `j`, the first breakpoint with
    /// `F(x_j) > tau + eps`.
    pub(crate) fn upper_at(&self, j: usize, tau: f64, eps: f64) -> f64 {
        if j == 0 || self.left[j] <= tau + eps {
            self.x[j]
        } else if self.right[j - 1] >= tau - eps {
            self.x[j - 1]
        } else {
            self.affine_root(j, tau)
        }
    }

    /// `inf {q : F(q) >= tau}` for `tau > 0`, ties within `eps` included.
    pub(crate) fn lower_end(&self, tau: f64, eps: f64) -> f64 {
        let k = self.right.partition_point(|&r| r < tau - eps);
        if k == self.len() {
            return f64::INFINITY;
        }
        self.lower_at(k, tau, eps)
    }

    /// `sup {q : F⁻(q) <= tau}` for `tau < 1`, ties within `eps` included.
    pub(crate) fn upper_end(&self, tau: f64, eps: f64) -> f64 {
        let j = self.right.partition_point(|&r| r <= tau + eps);
        if j == self.len() {
            return f64::INFINITY;
        }
        self.upper_at(j, tau, eps)
    }

    /// Endpoints of the tau-quantile set for `tau` in `[0, 1]`.
    pub(crate) fn quantile_bounds(&self, tau: f64) -> (f64, f64) {
        let eps = tie_tol(tau);
        let lo = if tau <= 0.0 {
            f64::NEG_INFINITY
        } else {
            self.lower_end(tau, eps)
        };
        let hi = if tau >= 1.0 {
            f64::INFINITY
        } else {
            self.upper_end(tau, eps)
        };
        (lo, hi)
    }

    /// Index of the breakpoint closest to `q`.
    pub(crate) fn nearest(&self, q: f64) -> usize {
        let k = self.x.partition_point(|&b| b < q);
        if k == 0 {
            0
        } else if k == self.len() || q - self.x[k - 1] <= self.x[k] - q {
            k - 1
        } else {
            k
        }
    }
}

/// How far `q` is from satisfying `F⁻(q) <= tau <= F(q)`.
pub(crate) fn optimality_gap(d: &Distribution, q: f64, tau: f64) -> f64 {
    let s = d.cdf_pair(q);
    (tau - s.right).max(s.left - tau).max(0.0)
}

/// Snaps an endpoint that is a root inside an affine piece of F to the
/// nearby double that best satisfies `F⁻(q) <= tau <= F(q)`. On steep
/// pieces F moves by more than the tie tolerance between adjacent doubles,
/// so the rounded root alone can miss it. Breakpoints and infinite ends
/// are returned unchanged.
pub(crate) fn refine_root(d: &Distribution, q: f64, tau: f64) -> f64 {
    const REACH: usize = 16;
    if !q.is_finite() || d.breakpoints().binary_search_by(|x| x.total_cmp(&q)).is_ok() {
        return q;
    }
    let mut best = (optimality_gap(d, q, tau), q);
    let (mut down, mut up) = (q, q);
    for _ in 0..REACH {
        if best.0 == 0.0 {
            break;
        }
        down = down.next_down();
        up = up.next_up();
        for c in [down, up] {
            let gap = optimality_gap(d, c, tau);
            if gap < best.0 {
                best = (gap, c);
            }
        }
    }
    best.1
}

/// Whether the level `tau` is crossed strictly between `q` and an adjacent
/// double, so that no double meets `F⁻(q) <= tau <= F(q)` within
/// [`TAU_TOL`]. Happens on pieces of F steep enough to move by more than
/// the tolerance in one ulp.
pub fn unrepresentable_crossing(d: &Distribution, tau: f64, q: f64) -> bool {
    let below = |x: f64| d.cdf(x) < tau - TAU_TOL;
    let above = |x: f64| d.left_cdf(x) > tau + TAU_TOL;
    (below(q) && above(q.next_up())) || (below(q.next_down()) && above(q))
}

/// The subdifferential of the antiderivative of F at `x`: `[F⁻(x), F(x)]`.
pub fn subdifferential(d: &Distribution, x: f64) -> CdfPair {
    d.cdf_pair(x)
}

/// Whether `p` lies on the filled-in graph, within [`TAU_TOL`].
pub fn graph_contains(d: &Distribution, p: GraphPoint) -> bool {
    (0.0..=1.0).contains(&p.y) && d.cdf_pair(p.x).contains(p.y, TAU_TOL)
}

/// The set `{q : (q, tau) in G}`, for `tau` in `[0, 1]`.
///
/// For interior `tau` this is the bounded interval of tau-quantiles,
/// `P(X < q) <= tau <= P(X <= q)`; at `tau = 0` it is `(-inf, hi]` and at
/// `tau = 1` it is `[lo, +inf)`.
pub fn quantile_set(d: &Distribution, tau: f64) -> Result<QuantileInterval> {
    if !(0.0..=1.0).contains(&tau) {
        return Err(Error::BadTau(tau));
    }
    let (lo, hi) = d.breaks().quantile_bounds(tau);
    Ok(QuantileInterval::new(refine_root(d, lo, tau), refine_root(d, hi, tau)))
}

/// Checks `(x1 - x2)(y1 - y2) >= 0` on every pair, after verifying that each
/// point is on the graph.
pub fn monotonicity_witness(d: &Distribution, pairs: &[(GraphPoint, GraphPoint)]) -> Result<bool> {
    for &(a, b) in pairs {
        for p in [a, b] {
            if !graph_contains(d, p) {
                return Err(Error::NotOnGraph { x: p.x, y: p.y });
            }
        }
    }
    Ok(pairs.iter().all(|(a, b)| (a.x - b.x) * (a.y - b.y) >= -MONOTONE_TOL))
}
