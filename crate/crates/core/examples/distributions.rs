//! Build each representation and evaluate F, F⁻, the antiderivative of F,
//! interval probabilities, pinball moments and seeded draws.
//!
//! cargo run --example distributions

use qmin::{Distribution, Result};

fn main() -> Result<()> {
    let coin = Distribution::atoms(&[(0.0, 0.5), (1.0, 0.5)])?;
    let sample = Distribution::empirical(&[3.0, 1.0, 4.0, 1.0, 5.0])?;
    let uniform = Distribution::pwl_cdf(&[(0.0, 0.0), (1.0, 1.0)])?;
    let mix = Distribution::mixture(vec![coin.clone(), uniform.clone()], &[0.5, 0.5])?;

    println!("{:>10} {:>6} {:>8} {:>8} {:>10}", "law", "x", "F⁻(x)", "F(x)", "∫₀ˣ F");
    for (name, d) in [
        ("coin", &coin),
        ("sample", &sample),
        ("uniform", &uniform),
        ("mixture", &mix),
    ] {
        for x in [-1.0, 0.0, 0.5, 1.0, 3.0] {
            println!(
                "{name:>10} {x:>6} {:>8.4} {:>8.4} {:>10.4}",
                d.left_cdf(x),
                d.cdf(x),
                d.antiderivative(x)
            );
        }
    }

    // ]a, b] is half open: the atom at 0 is counted only when a < 0
    println!("P(]-1, 0]) = {}", coin.interval_prob(-1.0, 0.0)?);
    println!("P(]0, 1])  = {}", coin.interval_prob(0.0, 1.0)?);
    println!("P(]0, 0])  = {}", coin.interval_prob(0.0, 0.0)?);

    for tau in [0.1, 0.5, 0.9] {
        println!("E rho_{tau}(X) for the sample: {}", sample.pinball_moment(tau)?);
    }

    let draws = mix.sample(10, 42);
    println!("10 draws from the mixture: {draws:?}");
    let mean = mix.sample(100_000, 7).iter().sum::<f64>() / 1e5;
    println!("mean of 1e5 draws {mean:.4}, exact {}", mix.mean());
    Ok(())
}
