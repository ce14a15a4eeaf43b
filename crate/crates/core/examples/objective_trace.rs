//! Tabulate Phi(q) = ∫₀^q F - tau q with its one-sided derivatives as CSV,
//! ready for plotting. Pass a spec path to trace another law.
//!
//! cargo run --example objective_trace -- examples/data/d3.json 0.25

use qmin::cli::load_distribution;
use qmin::objective::{self, phi_integrand, ObjectiveSample};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/d3.json").into());
    let tau: f64 = args.next().map_or(Ok(0.25), |t| t.parse())?;
    let d = load_distribution(path.as_ref())?;

    let (lo, hi) = d.support();
    println!("{}", ObjectiveSample::CSV_HEADER);
    for row in objective::trace(&d, tau, lo - 1.0, hi + 1.0, 25)? {
        println!("{}", row.csv_row());
    }

    // the same value through the pinball integrand, for an atomic law
    if let Some(atoms) = d.atoms_list() {
        let q = 0.5 * (lo + hi);
        let sum: f64 = atoms.iter().map(|&(x, w)| w * phi_integrand(tau, q, x)).sum();
        eprintln!(
            "Phi({q}) = {} closed form, {sum} as a finite sum",
            objective::phi(&d, tau, q)?
        );
    }
    Ok(())
}
