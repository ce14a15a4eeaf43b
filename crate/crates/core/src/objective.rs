//! The pinball loss and the shifted objective `Phi(q) = 𝐅(q) - tau q`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::format::fmt_num;
use crate::measure::Distribution;
use crate::numeric::Neumaier;

/// A validated quantile level, `0 < tau < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PinballParams {
    tau: f64,
}

impl PinballParams {
    pub fn new(tau: f64) -> Result<Self> {
        if tau > 0.0 && tau < 1.0 {
            Ok(PinballParams { tau })
        } else {
            Err(Error::BadTau(tau))
        }
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }
}

/// `Phi` and its two one-sided directional derivatives at `q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObjectiveSample {
    pub q: f64,
    pub phi: f64,
    /// `Phi'(q; 1) = F(q) - tau`
    pub d_plus: f64,
    /// `Phi'(q; -1) = tau - F⁻(q)`
    pub d_minus: f64,
}

impl ObjectiveSample {
    pub const CSV_HEADER: &'static str = "q,phi,d_plus,d_minus";

    pub fn csv_row(&self) -> String {
        let mut row = String::new();
        for (i, v) in [self.q, self.phi, self.d_plus, self.d_minus].into_iter().enumerate() {
            if i > 0 {
                row.push(',');
            }
            write!(row, "{}", fmt_num(v)).unwrap();
        }
        row
    }
}

/// The check loss: `(tau - 1) x` for `x <= 0`, `tau x` for `x >= 0`.
pub fn rho(tau: f64, x: f64) -> f64 {
    if x <= 0.0 {
        (tau - 1.0) * x
    } else {
        tau * x
    }
}

/// `rho_tau(x - q) - rho_tau(x)`, evaluated from its case table so that the
/// bound `|.| <= |q|` survives rounding.
pub fn phi_integrand(tau: f64, q: f64, x: f64) -> f64 {
    if q >= 0.0 {
        if x <= 0.0 {
            (1.0 - tau) * q
        } else if x <= q {
            (1.0 - tau) * q - x
        } else {
            -tau * q
        }
    } else if x <= q {
        (1.0 - tau) * q
    } else if x <= 0.0 {
        x - tau * q
    } else {
        -tau * q
    }
}

/// `Phi(q) = 𝐅(q) - tau q`, through the closed-form antiderivative.
pub fn phi(d: &Distribution, tau: f64, q: f64) -> Result<f64> {
    let p = PinballParams::new(tau)?;
    Ok(d.antiderivative(q) - p.tau() * q)
}

/// Integral of F over `[a, b]`, `a <= b`, summed piece by piece over the
/// affine stretches between breakpoints.
pub(crate) fn integrate_cdf(d: &Distribution, a: f64, b: f64) -> f64 {
    debug_assert!(a <= b);
    if a == b {
        return 0.0;
    }
    let xs = d.breakpoints();
    let first = xs.partition_point(|&x| x <= a);
    let last = xs.partition_point(|&x| x < b);
    let mut acc = Neumaier::new();
    let (mut u, mut fu) = (a, d.cdf(a));
    for x in &xs[first..last] {
        let pair = d.cdf_pair(*x);
        acc.add((x - u) * (fu + pair.left) * 0.5);
        u = *x;
        fu = pair.right;
    }
    acc.add((b - u) * (fu + d.left_cdf(b)) * 0.5);
    acc.value()
}

/// `Phi` from its two-case form: `-tau q + ∫_{]0,q]} F` for `q >= 0` and
/// `-tau q - ∫_{]q,0]} F` for `q < 0`, integrating F directly.
pub fn phi_piecewise(d: &Distribution, tau: f64, q: f64) -> Result<f64> {
    let p = PinballParams::new(tau)?;
    let linear = -p.tau() * q;
    Ok(if q >= 0.0 {
        linear + integrate_cdf(d, 0.0, q)
    } else {
        linear - integrate_cdf(d, q, 0.0)
    })
}

/// `Phi'(q; 1) = F(q) - tau`.
pub fn right_derivative(d: &Distribution, tau: f64, q: f64) -> Result<f64> {
    let p = PinballParams::new(tau)?;
    Ok(d.cdf(q) - p.tau())
}

/// `Phi'(q; -1) = tau - F⁻(q)`, the derivative in direction -1.
pub fn minus_direction_derivative(d: &Distribution, tau: f64, q: f64) -> Result<f64> {
    let p = PinballParams::new(tau)?;
    Ok(p.tau() - d.left_cdf(q))
}

pub fn objective_sample(d: &Distribution, tau: f64, q: f64) -> Result<ObjectiveSample> {
    Ok(ObjectiveSample {
        q,
        phi: phi(d, tau, q)?,
        d_plus: right_derivative(d, tau, q)?,
        d_minus: minus_direction_derivative(d, tau, q)?,
    })
}

/// Samples on `n >= 2` evenly spaced points from `lo` to `hi` inclusive.
pub fn trace(d: &Distribution, tau: f64, lo: f64, hi: f64, n: usize) -> Result<Vec<ObjectiveSample>> {
    PinballParams::new(tau)?;
    if lo >= hi || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::BadBracket { lo, hi });
    }
    if n < 2 {
        return Err(Error::TooFewPoints { n, min: 2 });
    }
    grid(lo, hi, n).map(|q| objective_sample(d, tau, q)).collect()
}

/// `n` evenly spaced points, endpoints exact.
pub fn grid(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let span = hi - lo;
    let last = n.saturating_sub(1) as f64;
    (0..n).map(move |i| if i + 1 == n { hi } else { lo + span * (i as f64 / last) })
}
