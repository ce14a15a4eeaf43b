//! Numerical verification of the identities behind the minimizer
//! characterization: integration by parts on `]a, b]`, the two evaluations
//! of the product measure of `]a, b]²`, the closed forms of `Phi`, its
//! one-sided derivatives, and Monte Carlo estimates of `Phi` from draws.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{self, GraphPoint};
use crate::measure::Distribution;
use crate::numeric::{accurate_sum, Neumaier};
use crate::objective::{
    minus_direction_derivative, phi, phi_integrand, phi_piecewise, right_derivative, PinballParams,
};
use crate::solver;

/// Relative tolerance for the integration-by-parts and product-measure residuals.
pub const IBP_TOL: f64 = 1e-10;
/// Absolute tolerance for agreement between evaluations of `Phi`.
pub const PHI_TOL: f64 = 1e-12;
/// Tolerance on the subgradient inequality.
pub const SUBGRADIENT_TOL: f64 = 1e-10;
/// Base step of the finite-difference derivative check.
pub const FD_STEP: f64 = 1e-7;
/// Tolerance of the finite-difference derivative check.
pub const FD_TOL: f64 = 1e-5;
/// Minimum distance to a breakpoint for two-sided finite-difference checks.
pub const FD_CLEARANCE: f64 = 1e-6;
/// Fewest draws accepted by [`mc_phi`].
pub const MC_MIN_DRAWS: usize = 10_000;
/// Width of the Monte Carlo acceptance band, in standard errors.
pub const MC_SIGMAS: f64 = 4.0;
/// Tolerance on the one-sided optimality conditions.
pub const OPTIMALITY_TOL: f64 = 1e-12;

fn check_interval(a: f64, b: f64) -> Result<()> {
    if a < b {
        Ok(())
    } else {
        Err(Error::BadInterval { a, b })
    }
}

/// `∫_{]a,b]} x dP - (b F(b) - a F(a) - ∫_a^b F)`, with the left side from
/// masses or densities and the integral of F from the antiderivative.
pub fn ibp_check(d: &Distribution, a: f64, b: f64) -> Result<f64> {
    check_interval(a, b)?;
    let lhs = d.first_moment(a, b)?;
    let area = d.antiderivative(b) - d.antiderivative(a);
    let rhs = b * d.cdf(b) - a * d.cdf(a) - area;
    Ok(lhs - rhs)
}

/// Difference between the product form `(b - a)(F(b) - F(a))` of
/// `(dx ⊗ dP)(]a,b]²)` and its split form
/// `(b - a) F(b) - ∫_a^b F + b (F(b) - F(a)) - ∫_{]a,b]} y dP`.
pub fn product_measure_check(d: &Distribution, a: f64, b: f64) -> Result<f64> {
    check_interval(a, b)?;
    let (fa, fb) = (d.cdf(a), d.cdf(b));
    let product = (b - a) * (fb - fa);
    let area = d.antiderivative(b) - d.antiderivative(a);
    let split = (b - a) * fb - area + b * (fb - fa) - d.first_moment(a, b)?;
    Ok(product - split)
}

/// Sample mean and standard error of a Monte Carlo estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McEstimate {
    pub estimate: f64,
    pub stderr: f64,
    pub n: usize,
}

impl McEstimate {
    /// `|estimate - reference| <= sigmas * stderr`, plus a rounding floor
    /// of `1e-12 (1 + |reference|)` so degenerate laws compare equal.
    pub fn covers(&self, reference: f64, sigmas: f64) -> bool {
        (self.estimate - reference).abs() <= sigmas * self.stderr + PHI_TOL * (1.0 + reference.abs())
    }
}

/// Monte Carlo estimate of `Phi(q)` from `n` draws of `d`.
///
/// The integrand is bounded by `|q|`, so the variance is finite for any
/// law. Uses Welford's recurrence and the unbiased variance.
pub fn mc_phi(d: &Distribution, tau: f64, q: f64, n: usize, seed: u64) -> Result<McEstimate> {
    let tau = PinballParams::new(tau)?.tau();
    if n < MC_MIN_DRAWS {
        return Err(Error::TooFewPoints { n, min: MC_MIN_DRAWS });
    }
    let (mut mean, mut m2) = (0.0f64, 0.0f64);
    for (i, x) in d.sample_iter(seed).take(n).enumerate() {
        let v = phi_integrand(tau, q, x);
        let delta = v - mean;
        mean += delta / (i + 1) as f64;
        m2 += delta * (v - mean);
    }
    let var = (m2 / (n - 1) as f64).max(0.0);
    Ok(McEstimate {
        estimate: mean,
        stderr: (var / n as f64).sqrt(),
        n,
    })
}

/// Residuals of the one-sided difference quotients of `Phi` at `q` against
/// `F(q) - tau` and `tau - F⁻(q)`.
///
/// Quotients at `h` and `h / 2` (`h = 1e-7`) are combined by Richardson
/// extrapolation, which is exact on the quadratic pieces of `Phi`.
pub fn fd_derivative_check(d: &Distribution, tau: f64, q: f64) -> Result<(f64, f64)> {
    let f0 = phi(d, tau, q)?;
    let quotient = |h: f64| -> Result<f64> { Ok((phi(d, tau, q + h)? - f0) / h) };
    let h = FD_STEP;
    let plus = 2.0 * quotient(h / 2.0)? - quotient(h)?;
    let minus = -(2.0 * quotient(-h / 2.0)? - quotient(-h)?);
    Ok((
        (plus - right_derivative(d, tau, q)?).abs(),
        (minus - minus_direction_derivative(d, tau, q)?).abs(),
    ))
}

/// Outcome of one identity over its randomized panel.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub max_residual: f64,
    pub pass: bool,
}

impl CheckResult {
    fn bounded(name: &str, max_residual: f64, tol: f64) -> Self {
        CheckResult {
            name: name.to_string(),
            max_residual,
            pass: max_residual <= tol,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// `{"checks":[{"name":..,"max_residual":..,"pass":..}, ...]}`
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Random points and levels around a law's support.
struct Panel<'a> {
    d: &'a Distribution,
    rng: ChaCha8Rng,
    lo: f64,
    hi: f64,
}

impl<'a> Panel<'a> {
    fn new(d: &'a Distribution, seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        let (smin, smax) = d.support();
        let pad = 0.5 * (smax - smin).max(1.0);
        Panel {
            d,
            rng,
            lo: smin - pad,
            hi: smax + pad,
        }
    }

    fn breakpoint(&mut self) -> f64 {
        let xs = self.d.breakpoints();
        xs[self.rng.random_range(0..xs.len())]
    }

    /// A point of `[lo, hi]`, a third of the time exactly at a breakpoint.
    fn point(&mut self) -> f64 {
        if self.rng.random_bool(1.0 / 3.0) {
            self.breakpoint()
        } else {
            self.rng.random_range(self.lo..=self.hi)
        }
    }

    fn tau(&mut self) -> f64 {
        self.rng.random_range(0.005..0.995)
    }

    /// Intervals mixing three regimes: generic endpoints, endpoints at
    /// breakpoints, and `b - a = 1e-9`.
    fn interval(&mut self) -> (f64, f64) {
        match self.rng.random_range(0..3) {
            0 => {
                let (u, v) = (self.point(), self.point());
                if u == v {
                    (u, u + 1.0)
                } else {
                    (u.min(v), u.max(v))
                }
            }
            1 => {
                let (u, v) = (self.breakpoint(), self.breakpoint());
                if u == v {
                    (u - 0.5, u)
                } else {
                    (u.min(v), u.max(v))
                }
            }
            _ => {
                let a = self.point();
                (a, a + 1e-9)
            }
        }
    }

    fn clear_of_breakpoints(&self, q: f64, clearance: f64) -> bool {
        let xs = self.d.breakpoints();
        let k = xs.partition_point(|&x| x < q);
        let left_ok = k == 0 || q - xs[k - 1] >= clearance;
        let right_ok = k == xs.len() || xs[k] - q >= clearance;
        left_ok && right_ok
    }

    /// How far the nearest other breakpoint is from breakpoint `q`.
    fn isolated_breakpoint(&self, q: f64, clearance: f64) -> bool {
        let xs = self.d.breakpoints();
        let k = xs.partition_point(|&x| x < q);
        let left_ok = k == 0 || q - xs[k - 1] >= clearance;
        let right_ok = k + 1 >= xs.len() || xs[k + 1] - q >= clearance;
        left_ok && right_ok
    }
}

/// Quantile levels used by the optimality and grid checks.
pub const LEVELS: [f64; 7] = [0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99];

fn subdifferential_checks(d: &Distribution, seed: u64) -> Vec<CheckResult> {
    let mut p = Panel::new(d, seed, 1);
    let mut section: f64 = 0.0;
    let mut subgradient: f64 = 0.0;
    for _ in 0..500 {
        let x = p.point();
        let s = graph::subdifferential(d, x);
        section = section.max((s.left - d.left_cdf(x)).abs() + (s.right - d.cdf(x)).abs());
        let l = s.left + p.rng.random::<f64>() * (s.right - s.left);
        let h = p.rng.random_range(-10.0..=10.0);
        let gap = l * h - (d.antiderivative(x + h) - d.antiderivative(x));
        subgradient = subgradient.max(gap);
    }
    vec![
        CheckResult::bounded("subdifferential_section", section, 0.0),
        CheckResult::bounded("subgradient_inequality", subgradient.max(0.0), SUBGRADIENT_TOL),
    ]
}

fn graph_geometry(d: &Distribution, seed: u64) -> Vec<CheckResult> {
    let mut p = Panel::new(d, seed, 2);
    let on_graph = |p: &mut Panel| {
        let x = p.point();
        let s = d.cdf_pair(x);
        GraphPoint::new(x, s.left + p.rng.random::<f64>() * s.jump())
    };
    let pairs: Vec<_> = (0..500).map(|_| (on_graph(&mut p), on_graph(&mut p))).collect();
    let worst = pairs
        .iter()
        .map(|(a, b)| -(a.x - b.x) * (a.y - b.y))
        .fold(0.0f64, f64::max);
    let monotone = graph::monotonicity_witness(d, &pairs).unwrap_or(false);

    // horizontal/vertical duality over a (q, tau) panel
    let mut mismatches = 0usize;
    for _ in 0..300 {
        let tau = match p.rng.random_range(0..4) {
            0 => 0.0,
            1 => 1.0,
            2 => d.cdf(p.breakpoint()),
            _ => p.tau(),
        };
        let set = graph::quantile_set(d, tau).expect("tau in [0, 1]");
        let qs = [p.point(), set.lo, set.hi, p.point()];
        for q in qs.into_iter().filter(|q| q.is_finite()) {
            let on_graph = graph::graph_contains(d, GraphPoint::new(q, tau));
            // a rounded root whose level is crossed within one ulp counts as on the graph
            if set.contains(q) != (on_graph || graph::unrepresentable_crossing(d, tau, q)) {
                mismatches += 1;
            }
        }
    }
    vec![
        CheckResult {
            name: "graph_monotonicity".into(),
            max_residual: (worst + 0.0).max(0.0),
            pass: monotone,
        },
        CheckResult::bounded("quantile_duality", mismatches as f64, 0.0),
    ]
}

fn interval_identities(d: &Distribution, seed: u64) -> Vec<CheckResult> {
    let mut p = Panel::new(d, seed, 3);
    let (mut ibp, mut prod): (f64, f64) = (0.0, 0.0);
    for _ in 0..300 {
        let (a, b) = p.interval();
        let scale = 1.0 + a.abs() + b.abs();
        ibp = ibp.max(ibp_check(d, a, b).expect("a < b").abs() / scale);
        prod = prod.max(product_measure_check(d, a, b).expect("a < b").abs() / scale);
    }
    vec![
        CheckResult::bounded("integration_by_parts", ibp, IBP_TOL),
        CheckResult::bounded("product_measure", prod, IBP_TOL),
    ]
}

fn closed_forms(d: &Distribution, seed: u64) -> Vec<CheckResult> {
    let mut p = Panel::new(d, seed, 4);
    let atoms = d.atoms_list();
    let (mut piecewise, mut finite_sum, mut median): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for _ in 0..300 {
        let (tau, q) = (p.tau(), p.point());
        let closed = phi(d, tau, q).expect("tau admissible");
        piecewise = piecewise.max((closed - phi_piecewise(d, tau, q).expect("tau admissible")).abs());
        if let Some(atoms) = &atoms {
            let sum = accurate_sum(atoms.iter().map(|&(x, w)| w * phi_integrand(tau, q, x)));
            finite_sum = finite_sum.max((closed - sum).abs());
            // the absolute-deviation median objective is twice Phi at 1/2
            let m = q;
            let dev = accurate_sum(atoms.iter().map(|&(x, w)| w * ((x - m).abs() - x.abs())));
            median = median.max((dev - 2.0 * phi(d, 0.5, m).expect("1/2")).abs());
        }
    }
    let mut out = vec![CheckResult::bounded("phi_closed_form", piecewise, PHI_TOL)];
    if atoms.is_some() {
        out.push(CheckResult::bounded("phi_finite_sum", finite_sum, PHI_TOL));
        out.push(CheckResult::bounded(
            "median_objective_factor_two",
            median,
            2.0 * PHI_TOL,
        ));
    }
    out
}

fn integrand_bound(d: &Distribution, seed: u64) -> Vec<CheckResult> {
    let mut p = Panel::new(d, seed, 5);
    let xs = d.sample(500, seed ^ 0x5eed);
    let (mut rough, mut refined): (f64, f64) = (0.0, 0.0);
    for &x in &xs {
        for _ in 0..4 {
            let (tau, q) = (p.tau(), p.point() - p.point());
            let v = phi_integrand(tau, q, x).abs();
            rough = rough.max(v - q.abs());
            refined = refined.max(v - tau.max(1.0 - tau) * q.abs());
        }
    }
    vec![
        CheckResult::bounded("integrand_bound", rough.max(0.0), 0.0),
        CheckResult::bounded("integrand_refined_bound", refined.max(0.0), 1e-15),
    ]
}

fn derivatives(d: &Distribution, seed: u64) -> Vec<CheckResult> {
    let mut p = Panel::new(d, seed, 6);
    let mut smooth: f64 = 0.0;
    let mut one_sided: f64 = 0.0;
    let mut tried = 0;
    let mut kept = 0;
    while kept < 200 && tried < 5000 {
        tried += 1;
        let q = p.rng.random_range(p.lo..=p.hi);
        if !p.clear_of_breakpoints(q, FD_CLEARANCE) {
            continue;
        }
        kept += 1;
        let (rp, rm) = fd_derivative_check(d, p.tau(), q).expect("tau admissible");
        smooth = smooth.max(rp).max(rm);
    }
    // exactly at isolated breakpoints each side is checked on its own
    for _ in 0..100 {
        let q = p.breakpoint();
        if p.isolated_breakpoint(q, FD_CLEARANCE) {
            let (rp, rm) = fd_derivative_check(d, p.tau(), q).expect("tau admissible");
            one_sided = one_sided.max(rp).max(rm);
        }
    }
    vec![
        CheckResult::bounded("derivatives_finite_difference", smooth, FD_TOL),
        CheckResult::bounded("derivatives_one_sided_at_breakpoints", one_sided, FD_TOL),
    ]
}

/// Violations of the minimizer characterization at level `tau`: the
/// minimizer set must equal the quantile set, satisfy both one-sided
/// conditions, and fail them strictly `1e-6` outside each end. A point
/// where the crossing falls between two adjacent doubles counts as
/// satisfying them, since no double does better.
pub fn optimality_violations(d: &Distribution, tau: f64) -> Result<usize> {
    let m = solver::minimize_phi(d, tau)?;
    let g = graph::quantile_set(d, tau)?;
    let mut bad = usize::from(m != g);
    for q in [m.lo, m.midpoint(), m.hi] {
        let ok = solver::is_optimal(d, tau, q, OPTIMALITY_TOL)? || graph::unrepresentable_crossing(d, tau, q);
        bad += usize::from(!ok);
    }
    bad += usize::from(right_derivative(d, tau, m.lo - 1e-6)? >= 0.0);
    bad += usize::from(minus_direction_derivative(d, tau, m.hi + 1e-6)? >= 0.0);
    Ok(bad)
}

/// Smallest `Phi(q) - Phi(q*)` margin over `min(tau, 1 - tau) Δ / 2`, for
/// `q` at distance `Δ in {1, 10, 100}` beyond the support hull.
pub fn inf_compactness_margin(d: &Distribution, tau: f64) -> Result<f64> {
    let m = solver::minimize_phi(d, tau)?;
    let best = phi(d, tau, m.lo)?;
    let (smin, smax) = d.support();
    let slope = tau.min(1.0 - tau) * 0.5;
    let mut margin = f64::INFINITY;
    for delta in [1.0, 10.0, 100.0] {
        for q in [smin - delta, smax + delta] {
            margin = margin.min(phi(d, tau, q)? - best - slope * delta);
        }
    }
    Ok(margin)
}

fn solver_checks(d: &Distribution, seed: u64) -> Vec<CheckResult> {
    let mut p = Panel::new(d, seed, 7);
    let mut levels = LEVELS.to_vec();
    levels.extend((0..5).map(|_| p.tau()));
    let mut violations = 0usize;
    let mut margin = f64::INFINITY;
    let mut shift_spread: f64 = 0.0;
    for &tau in &levels {
        violations += optimality_violations(d, tau).expect("tau admissible");
        margin = margin.min(inf_compactness_margin(d, tau).expect("tau admissible"));
        let diffs: Vec<f64> = (0..50)
            .map(|_| {
                let q = p.point();
                solver::order1_objective(d, tau, q).expect("tau admissible") - phi(d, tau, q).expect("tau admissible")
            })
            .collect();
        let (lo, hi) = diffs.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
        shift_spread = shift_spread.max(hi - lo);
    }
    vec![
        CheckResult::bounded("optimality_conditions", violations as f64, 0.0),
        CheckResult {
            name: "inf_compactness".into(),
            max_residual: (-margin).max(0.0),
            pass: margin >= 0.0,
        },
        CheckResult::bounded("order1_shift", shift_spread, PHI_TOL),
    ]
}

fn monte_carlo(d: &Distribution, seed: u64) -> Vec<CheckResult> {
    const PANELS: usize = 100;
    let mut p = Panel::new(d, seed, 8);
    let mut misses = 0usize;
    let mut worst: f64 = 0.0;
    for _ in 0..PANELS {
        let (tau, q) = (p.tau(), p.point());
        let draw_seed = p.rng.random::<u64>();
        let mc = mc_phi(d, tau, q, 10_000, draw_seed).expect("tau admissible");
        let exact = phi(d, tau, q).expect("tau admissible");
        if !mc.covers(exact, MC_SIGMAS) {
            misses += 1;
        }
        let band = MC_SIGMAS * mc.stderr + PHI_TOL * (1.0 + exact.abs());
        worst = worst.max((mc.estimate - exact).abs() / band);
    }
    vec![CheckResult {
        name: "monte_carlo_phi".into(),
        max_residual: (worst + 0.0).max(0.0),
        pass: misses * 100 <= PANELS,
    }]
}

/// Run every identity on randomized panels derived from `seed`. Each check
/// owns its own ChaCha8 stream, so results do not depend on check order.
pub fn run_suite(d: &Distribution, seed: u64) -> Report {
    let groups: [fn(&Distribution, u64) -> Vec<CheckResult>; 8] = [
        subdifferential_checks,
        graph_geometry,
        interval_identities,
        closed_forms,
        integrand_bound,
        derivatives,
        solver_checks,
        monte_carlo,
    ];
    let checks = groups.iter().flat_map(|g| g(d, seed)).collect();
    Report { checks }
}

/// Compensated finite sum `Σ p_i f(x_i)` over a purely atomic law.
pub fn atomic_expectation(d: &Distribution, f: impl Fn(f64) -> f64) -> Option<f64> {
    let atoms = d.atoms_list()?;
    let mut acc = Neumaier::new();
    for (x, w) in atoms {
        acc.add(w * f(x));
    }
    Some(acc.value())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d1() -> Distribution {
        Distribution::atoms(&[(0.0, 1.0)]).unwrap()
    }
    fn d2() -> Distribution {
        Distribution::atoms(&[(0.0, 0.5), (1.0, 0.5)]).unwrap()
    }
    fn unif() -> Distribution {
        Distribution::pwl_cdf(&[(0.0, 0.0), (1.0, 1.0)]).unwrap()
    }

    #[test]
    fn ibp_examples() {
        let at1 = Distribution::atoms(&[(1.0, 1.0)]).unwrap();
        assert_eq!(ibp_check(&at1, 0.0, 2.0).unwrap(), 0.0);
        assert_eq!(ibp_check(&d1(), -1.0, 1.0).unwrap(), 0.0);
        assert_eq!(ibp_check(&unif(), 0.0, 1.0).unwrap(), 0.0);
        assert_eq!(ibp_check(&d1(), 1.0, 1.0), Err(Error::BadInterval { a: 1.0, b: 1.0 }));
    }

    #[test]
    fn product_measure_examples() {
        let at1 = Distribution::atoms(&[(1.0, 1.0)]).unwrap();
        assert_eq!(product_measure_check(&at1, 0.0, 2.0).unwrap(), 0.0);
        assert_eq!(product_measure_check(&unif(), 0.0, 1.0).unwrap(), 0.0);
        for d in [d1(), d2(), unif()] {
            assert_eq!(product_measure_check(&d, 10.0, 11.0).unwrap(), 0.0);
        }
    }

    #[test]
    fn half_open_convention_matters_at_atoms() {
        // ]0, 1] holds the atom at 1 but not the one at 0
        let d = d2();
        assert_eq!(d.first_moment(0.0, 1.0).unwrap(), 0.5);
        assert!(ibp_check(&d, 0.0, 1.0).unwrap().abs() < 1e-15);
        assert!(ibp_check(&d, -1.0, 0.0).unwrap().abs() < 1e-15);
    }

    #[test]
    fn mc_degenerate_law_is_exact() {
        let mc = mc_phi(&d1(), 0.3, 2.0, 10_000, 5).unwrap();
        assert_eq!(mc.estimate, phi_integrand(0.3, 2.0, 0.0));
        assert_eq!(mc.stderr, 0.0);
        assert!((mc.estimate - 1.4).abs() < 1e-15);
        assert!(mc.covers(phi(&d1(), 0.3, 2.0).unwrap(), MC_SIGMAS));
        assert_eq!(mc_phi(&d1(), 1.2, 2.0, 10_000, 1), Err(Error::BadTau(1.2)));
        assert!(matches!(
            mc_phi(&d1(), 0.3, 2.0, 100, 1),
            Err(Error::TooFewPoints { .. })
        ));
    }

    #[test]
    fn mc_covers_closed_form() {
        let mc = mc_phi(&d2(), 0.5, 1.0, 1_000_000, 1).unwrap();
        assert!(mc.covers(phi(&d2(), 0.5, 1.0).unwrap(), MC_SIGMAS), "{mc:?}");
        let mc = mc_phi(&unif(), 0.25, 0.5, 1_000_000, 2).unwrap();
        assert!(mc.covers(phi(&unif(), 0.25, 0.5).unwrap(), MC_SIGMAS), "{mc:?}");
    }

    #[test]
    fn fd_examples() {
        let (rp, rm) = fd_derivative_check(&unif(), 0.3, 0.5).unwrap();
        assert!(rp <= FD_TOL && rm <= FD_TOL, "{rp} {rm}");
        let (rp, rm) = fd_derivative_check(&d2(), 0.25, 0.5).unwrap();
        assert!(rp <= FD_TOL && rm <= FD_TOL, "{rp} {rm}");
        assert_eq!(right_derivative(&d2(), 0.25, 0.5).unwrap(), 0.25);
        assert_eq!(minus_direction_derivative(&d2(), 0.25, 0.5).unwrap(), -0.25);
        // at the atom: right quotient -> F(0) - tau, minus quotient -> tau - F⁻(0)
        let (rp, rm) = fd_derivative_check(&d2(), 0.25, 0.0).unwrap();
        assert!(rp <= FD_TOL && rm <= FD_TOL, "{rp} {rm}");
        assert_eq!(right_derivative(&d2(), 0.25, 0.0).unwrap(), 0.25);
        assert_eq!(minus_direction_derivative(&d2(), 0.25, 0.0).unwrap(), 0.25);
    }

    #[test]
    fn suite_passes_on_small_laws() {
        for d in [d1(), d2(), unif()] {
            let report = run_suite(&d, 1);
            let failed: Vec<_> = report.failures().collect();
            assert!(failed.is_empty(), "{failed:?}");
        }
    }

    #[test]
    fn suite_passes_on_many_random_atoms() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let points: Vec<(f64, f64)> = (0..1000)
            .map(|_| (rng.random_range(-50.0..50.0), rng.random_range(0.001..1.0)))
            .collect();
        let total: f64 = points.iter().map(|p| p.1).sum();
        let mut points: Vec<(f64, f64)> = points.iter().map(|&(x, w)| (x, w / total)).collect();
        points.sort_by(|a, b| a.0.total_cmp(&b.0));
        let d = Distribution::atoms(&points).unwrap();
        let report = run_suite(&d, 9);
        let failed: Vec<_> = report.failures().collect();
        assert!(failed.is_empty(), "{failed:?}");
    }

    #[test]
    fn suite_is_deterministic() {
        let mix = Distribution::mixture(vec![d2(), unif()], &[0.5, 0.5]).unwrap();
        assert_eq!(run_suite(&mix, 3).to_json(), run_suite(&mix, 3).to_json());
    }
}
