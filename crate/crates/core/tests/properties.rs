mod common;

use proptest::prelude::*;
use qmin::identity;
use qmin::objective::{self, phi};
use qmin::random::{self, Family, Limits};
use qmin::{graph, solver, Distribution, QuantileInterval};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn law(seed: u64, family: usize) -> Distribution {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random::distribution(&mut rng, Family::ALL[family % 4], &Limits::small())
}

fn ext_real() -> impl Strategy<Value = f64> {
    prop_oneof![
        Just(f64::NEG_INFINITY),
        Just(f64::INFINITY),
        Just(0.0),
        -1e6..1e6f64,
        any::<i32>().prop_map(f64::from),
        (-300i32..300).prop_map(|e| 10f64.powi(e)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn solver_matches_graph(seed in any::<u64>(), fam in 0usize..4, tau in 0.001..0.999f64) {
        let d = law(seed, fam);
        prop_assert_eq!(solver::minimize_phi(&d, tau).unwrap(), graph::quantile_set(&d, tau).unwrap());
    }

    #[test]
    fn graph_levels_hit_exactly(seed in any::<u64>(), fam in 0usize..4, pick in any::<prop::sample::Index>()) {
        // levels equal to F at a breakpoint open flat quantile sets
        let d = law(seed, fam);
        let x = d.breakpoints()[pick.index(d.breakpoints().len())];
        let tau = d.cdf(x);
        if tau > 0.0 && tau < 1.0 {
            let set = graph::quantile_set(&d, tau).unwrap();
            prop_assert!(set.contains(x), "{:?} misses {}", set, x);
            prop_assert_eq!(solver::minimize_phi(&d, tau).unwrap(), set);
        }
    }

    #[test]
    fn monotone_in_tau(seed in any::<u64>(), fam in 0usize..4, a in 0.001..0.999f64, b in 0.001..0.999f64) {
        let d = law(seed, fam);
        let (lo, hi) = (a.min(b), a.max(b));
        let (p, q) = (solver::minimize_phi(&d, lo).unwrap(), solver::minimize_phi(&d, hi).unwrap());
        prop_assert!(p.lo <= q.lo && p.hi <= q.hi, "{:?} {:?}", p, q);
    }

    #[test]
    fn translation_equivariance(seed in any::<u64>(), fam in 0usize..4, tau in 0.001..0.999f64, c in -50i32..50) {
        let d = law(seed, fam);
        let c = f64::from(c) / 4.0;
        let moved = d.shifted(c).unwrap();
        let (m, n) = (solver::minimize_phi(&d, tau).unwrap(), solver::minimize_phi(&moved, tau).unwrap());
        let tol = |x: f64| 1e-9 * (1.0 + x.abs() + c.abs());
        prop_assert!((n.lo - (m.lo + c)).abs() <= tol(m.lo), "{:?} {:?}", m, n);
        prop_assert!((n.hi - (m.hi + c)).abs() <= tol(m.hi), "{:?} {:?}", m, n);
    }

    #[test]
    fn phi_convex(seed in any::<u64>(), fam in 0usize..4, tau in 0.001..0.999f64, u in 0.0..1.0f64, v in 0.0..1.0f64) {
        let d = law(seed, fam);
        let (lo, hi) = common::window(&d);
        let (x, y) = (lo + u * (hi - lo), lo + v * (hi - lo));
        let (fx, fy) = (phi(&d, tau, x).unwrap(), phi(&d, tau, y).unwrap());
        let mid = phi(&d, tau, 0.5 * (x + y)).unwrap();
        prop_assert!(mid <= 0.5 * (fx + fy) + 1e-10 * (1.0 + fx.abs() + fy.abs()));
    }

    #[test]
    fn one_sided_derivatives_add_up(seed in any::<u64>(), fam in 0usize..4, tau in 0.001..0.999f64, u in 0.0..1.0f64) {
        let d = law(seed, fam);
        let (lo, hi) = common::window(&d);
        let s = objective::objective_sample(&d, tau, lo + u * (hi - lo)).unwrap();
        prop_assert!(s.d_plus + s.d_minus >= 0.0);
        prop_assert!(s.phi.is_finite());
    }

    #[test]
    fn trace_slope_nondecreasing(seed in any::<u64>(), fam in 0usize..4, tau in 0.001..0.999f64) {
        let d = law(seed, fam);
        let (lo, hi) = common::window(&d);
        let rows = objective::trace(&d, tau, lo, hi, 200).unwrap();
        prop_assert!(rows.windows(2).all(|w| w[0].d_plus <= w[1].d_plus));
    }

    #[test]
    fn interval_json_round_trip(a in ext_real(), b in ext_real()) {
        let q = QuantileInterval::new(a.min(b), a.max(b));
        let text = serde_json::to_string(&q).unwrap();
        let back: QuantileInterval = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, q);
    }

    #[test]
    fn spec_round_trip(seed in any::<u64>(), fam in 0usize..4, u in 0.0..1.0f64) {
        let d = law(seed, fam);
        let again = d.to_spec().validate().unwrap();
        let (lo, hi) = common::window(&d);
        let x = lo + u * (hi - lo);
        // masses are renormalized on the way back in, which can move them by an ulp
        prop_assert!((d.cdf(x) - again.cdf(x)).abs() <= 1e-13);
        let f = d.antiderivative(x);
        prop_assert!((f - again.antiderivative(x)).abs() <= 1e-13 * (1.0 + f.abs()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn identity_suite_passes_on_random_laws(seed in any::<u64>(), fam in 0usize..4, suite_seed in any::<u64>()) {
        let d = law(seed, fam);
        let report = identity::run_suite(&d, suite_seed);
        let failed: Vec<_> = report.failures().collect();
        prop_assert!(failed.is_empty(), "{:?}", failed);
    }
}

#[test]
fn identity_suite_passes_on_full_size_laws() {
    for (i, d) in random::corpus(24, 99, &Limits::default()).iter().enumerate() {
        let report = identity::run_suite(d, i as u64);
        let failed: Vec<_> = report.failures().collect();
        assert!(failed.is_empty(), "law {i} ({:?}): {failed:?}", d.kind());
    }
}

#[test]
fn median_examples() {
    let d2 = Distribution::atoms(&[(0.0, 0.5), (1.0, 0.5)]).unwrap();
    assert_eq!(solver::median_set(&d2), QuantileInterval::new(0.0, 1.0));
    let three = Distribution::atoms(&[(-3.0, 0.2), (0.0, 0.6), (5.0, 0.2)]).unwrap();
    assert_eq!(solver::median_set(&three), QuantileInterval::point(0.0));
    let u = Distribution::pwl_cdf(&[(0.0, 0.0), (1.0, 1.0)]).unwrap();
    assert_eq!(solver::median_set(&u), QuantileInterval::point(0.5));
}

#[test]
fn grid_oracle_examples() {
    let d3 = Distribution::empirical(&[1.0, 2.0, 3.0, 4.0]).unwrap();
    let g = solver::grid_oracle(&d3, 0.5, 0.0, 5.0, 100_000).unwrap();
    assert!((g.lo - 2.0).abs() <= 1e-4 && (g.hi - 3.0).abs() <= 1e-4, "{g:?}");
    let u = Distribution::pwl_cdf(&[(0.0, 0.0), (1.0, 1.0)]).unwrap();
    let g = solver::grid_oracle(&u, 0.3, -1.0, 2.0, 100_000).unwrap();
    assert!((g.lo - 0.3).abs() <= 1e-4 && (g.hi - 0.3).abs() <= 1e-4, "{g:?}");
    let d1 = Distribution::atoms(&[(0.0, 1.0)]).unwrap();
    assert!(solver::grid_oracle(&d1, 0.5, -1.0, 1.0, 1000).unwrap().contains(0.0));
    assert!(solver::grid_oracle(&d1, 0.5, 0.5, 1.0, 1000).is_err());
    assert!(solver::grid_oracle(&d1, 0.5, -1.0, 1.0, 999).is_err());
}
