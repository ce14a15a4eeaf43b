//! Check the identities behind the minimizer characterization on a law and
//! print the report. Pass a spec path and a seed to check another law.
//!
//! cargo run --release --example identity_suite -- examples/data/mix.json 3

use qmin::cli::load_distribution;
use qmin::identity;
use qmin::objective::phi;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/mix.json").into());
    let seed: u64 = args.next().map_or(Ok(1), |s| s.parse())?;
    let d = load_distribution(path.as_ref())?;

    println!(
        "integration by parts on ]-0.5, 1]: residual {:e}",
        identity::ibp_check(&d, -0.5, 1.0)?
    );
    println!(
        "product measure of ]0, 1]²:      residual {:e}",
        identity::product_measure_check(&d, 0.0, 1.0)?
    );
    let (rp, rm) = identity::fd_derivative_check(&d, 0.3, 0.37)?;
    println!("one-sided derivatives at 0.37:    residuals {rp:e}, {rm:e}");

    let mc = identity::mc_phi(&d, 0.3, 0.5, 1_000_000, seed)?;
    let exact = phi(&d, 0.3, 0.5)?;
    println!(
        "Monte Carlo Phi(0.5): {:.6} ± {:.1e}, exact {exact:.6}, within 4 se: {}",
        mc.estimate,
        mc.stderr,
        mc.covers(exact, identity::MC_SIGMAS)
    );

    let report = identity::run_suite(&d, seed);
    for c in &report.checks {
        println!(
            "{:<40} {:>12.3e} {}",
            c.name,
            c.max_residual,
            if c.pass { "pass" } else { "FAIL" }
        );
    }
    println!("all pass: {}", report.all_pass());
    Ok(())
}
