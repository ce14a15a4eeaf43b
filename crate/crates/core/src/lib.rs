//! Quantiles of one-dimensional probability laws, computed as minimizers of
//! the convex objective `Phi(q) = 𝐅(q) - tau q` where `𝐅` is the
//! antiderivative of the distribution function vanishing at 0.
//!
//! The crate is organised around the objects involved:
//!
//! - [`measure`]: laws in closed form (atoms, empirical samples,
//!   piecewise-linear CDFs, mixtures) with exact F, F⁻ and `𝐅`.
//! - [`graph`]: the filled-in graph of F, its vertical sections (the
//!   subdifferential of `𝐅`) and horizontal sections (quantile sets).
//! - [`objective`]: the pinball loss, `Phi` and its one-sided derivatives.
//! - [`solver`]: minimizer sets of `Phi`, a brute-force grid oracle, medians.
//! - [`identity`]: numerical checks of the integration-by-parts identity,
//!   the closed forms of `Phi`, its derivatives, and Monte Carlo estimates.
//! - [`cli`]: the `qmin` command-line front end.
//!
//! ```
//! use qmin::{graph, solver, Distribution};
//!
//! let d = Distribution::empirical(&[1.0, 2.0, 3.0, 4.0]).unwrap();
//! let m = solver::minimize_phi(&d, 0.5).unwrap();
//! assert_eq!((m.lo, m.hi), (2.0, 3.0));
//! assert_eq!(m, graph::quantile_set(&d, 0.5).unwrap());
//! ```

pub mod cli;
pub mod error;
pub mod format;
pub mod graph;
pub mod identity;
pub mod measure;
pub mod numeric;
pub mod objective;
pub mod random;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{GraphPoint, QuantileInterval};
pub use measure::{CdfPair, Distribution, DistributionSpec, Kind};
pub use objective::{ObjectiveSample, PinballParams};
