//! The filled-in graph of a CDF: vertical sections are the subdifferentials
//! of its antiderivative, horizontal sections are quantile sets.
//!
//! cargo run --example filled_graph

use qmin::graph::{self, GraphPoint};
use qmin::{Distribution, Result};

fn main() -> Result<()> {
    // jumps at 0 and 2, a flat stretch at level 0.7 on [1, 2)
    let d = Distribution::mixture(
        vec![
            Distribution::atoms(&[(0.0, 0.5), (2.0, 0.5)])?,
            Distribution::pwl_cdf(&[(0.0, 0.0), (1.0, 1.0)])?,
        ],
        &[0.6, 0.4],
    )?;

    println!("vertical sections [F⁻(x), F(x)]");
    for x in [-0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 2.5] {
        let s = graph::subdifferential(&d, x);
        println!("  x = {x:>4}: [{:.3}, {:.3}]", s.left, s.right);
    }

    println!("horizontal sections {{q : (q, tau) in G}}");
    for tau in [0.0, 0.1, 0.3, 0.5, 0.7, 0.8, 1.0] {
        let q = graph::quantile_set(&d, tau)?;
        println!("  tau = {tau:>3}: [{}, {}]", q.lo, q.hi);
    }

    // every pair of graph points is monotone: (x1 - x2)(y1 - y2) >= 0
    let points = [
        GraphPoint::new(0.0, 0.1),
        GraphPoint::new(0.0, 0.3),
        GraphPoint::new(1.5, 0.7),
        GraphPoint::new(2.0, 0.9),
    ];
    let pairs: Vec<_> = points
        .iter()
        .flat_map(|&a| points.iter().map(move |&b| (a, b)))
        .collect();
    println!(
        "monotone on {} pairs: {}",
        pairs.len(),
        graph::monotonicity_witness(&d, &pairs)?
    );
    for p in [GraphPoint::new(2.0, 0.8), GraphPoint::new(1.5, 0.5)] {
        println!("({}, {}) on graph: {}", p.x, p.y, graph::graph_contains(&d, p));
    }
    Ok(())
}
