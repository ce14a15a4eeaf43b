//! Quantiles three ways: the minimizer set of Phi, the horizontal section
//! of the filled-in graph, and a brute-force grid scan.
//!
//! cargo run --release --example quantile_solver

use qmin::random::{self, Limits};
use qmin::{graph, solver, Distribution, Result};

fn main() -> Result<()> {
    let d3 = Distribution::empirical(&[1.0, 2.0, 3.0, 4.0])?;
    println!("median set of [1, 2, 3, 4]: {:?}", solver::median_set(&d3));
    let skewed = Distribution::atoms(&[(-3.0, 0.2), (0.0, 0.6), (5.0, 0.2)])?;
    println!("median set of the skewed atoms: {:?}", solver::median_set(&skewed));

    println!(
        "\n{:>4} {:>6} {:>24} {:>24} {:>24}",
        "law", "tau", "minimize_phi", "quantile_set", "grid (1e5)"
    );
    for (i, d) in random::corpus(8, 5, &Limits::default()).iter().enumerate() {
        let (lo, hi) = d.support();
        for tau in [0.1, 0.5, 0.9] {
            let m = solver::minimize_phi(d, tau)?;
            let g = graph::quantile_set(d, tau)?;
            let scan = solver::grid_oracle(d, tau, lo - 1.0, hi + 1.0, 100_000)?;
            assert_eq!(m, g);
            let fmt = |lo: f64, hi: f64| format!("[{lo:.6}, {hi:.6}]");
            println!(
                "{i:>4} {tau:>6} {:>24} {:>24} {:>24}",
                fmt(m.lo, m.hi),
                fmt(g.lo, g.hi),
                fmt(scan.lo, scan.hi)
            );
        }
    }

    // the minimizers satisfy F⁻(q) <= tau <= F(q)
    let m = solver::minimize_phi(&d3, 0.5)?;
    for q in [m.lo, m.midpoint(), m.hi, m.hi + 1e-6] {
        println!("q = {q}: optimal {}", solver::is_optimal(&d3, 0.5, q, 1e-12)?);
    }
    Ok(())
}
