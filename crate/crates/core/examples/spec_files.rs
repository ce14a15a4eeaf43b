//! Read distribution specs from JSON, validate them and report their
//! quantiles, as the `qmin quantile` command does.
//!
//! cargo run --example spec_files -- examples/data/*.json

use std::path::PathBuf;

use qmin::cli::load_distribution;
use qmin::{graph, DistributionSpec};

fn main() {
    let mut paths: Vec<PathBuf> = std::env::args().skip(1).map(PathBuf::from).collect();
    if paths.is_empty() {
        let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data");
        paths = std::fs::read_dir(&dir)
            .expect("data directory")
            .map(|e| e.unwrap().path())
            .collect();
        paths.sort();
    }
    for path in &paths {
        match load_distribution(path) {
            Ok(d) => {
                let quartiles: Vec<String> = [0.0, 0.25, 0.5, 0.75, 1.0]
                    .iter()
                    .map(|&t| serde_json::to_string(&graph::quantile_set(&d, t).unwrap()).unwrap())
                    .collect();
                println!("{}: {:?} on {:?}", path.display(), d.kind(), d.support());
                println!("  quantile sets at 0, 1/4, 1/2, 3/4, 1: {}", quartiles.join(" "));
            }
            Err(e) => println!("{}: rejected: {e}", path.display()),
        }
    }

    // specs can be built in code and serialized, too
    let spec = DistributionSpec::Mixture {
        weights: vec![0.5, 0.5],
        components: vec![
            DistributionSpec::Atoms {
                points: vec![(0.0, 1.0)],
            },
            DistributionSpec::Empirical {
                samples: vec![1.0, 2.0],
            },
        ],
    };
    println!("{}", spec.to_json());
}
