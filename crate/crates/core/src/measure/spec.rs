use serde::{Deserialize, Serialize};

use super::{Distribution, MASS_TOL};
use crate::error::{Error, Result};

/// External JSON description of a law, tagged by `"type"`.
///
/// ```json
/// {"type":"atoms","points":[[0,0.5],[1,0.5]]}
/// {"type":"empirical","samples":[1,2,3,4]}
/// {"type":"pwl_cdf","knots":[[0,0],[1,1]]}
/// {"type":"mixture","weights":[0.5,0.5],"components":[...]}
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum DistributionSpec {
    Atoms {
        points: Vec<(f64, f64)>,
    },
    Empirical {
        samples: Vec<f64>,
    },
    PwlCdf {
        knots: Vec<(f64, f64)>,
    },
    Mixture {
        weights: Vec<f64>,
        components: Vec<DistributionSpec>,
    },
}

impl DistributionSpec {
    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }

    pub fn validate(&self) -> Result<Distribution> {
        validate(self)
    }

    /// Translate every location, sample, and knot by `c`.
    pub fn shifted(&self, c: f64) -> Self {
        match self {
            Self::Atoms { points } => Self::Atoms {
                points: points.iter().map(|&(x, p)| (x + c, p)).collect(),
            },
            Self::Empirical { samples } => Self::Empirical {
                samples: samples.iter().map(|x| x + c).collect(),
            },
            Self::PwlCdf { knots } => Self::PwlCdf {
                knots: knots.iter().map(|&(x, f)| (x + c, f)).collect(),
            },
            Self::Mixture { weights, components } => Self::Mixture {
                weights: weights.clone(),
                components: components.iter().map(|s| s.shifted(c)).collect(),
            },
        }
    }
}

/// Build a validated [`Distribution`] from its external description.
pub fn validate(spec: &DistributionSpec) -> Result<Distribution> {
    match spec {
        DistributionSpec::Atoms { points } => Distribution::atoms(points),
        DistributionSpec::Empirical { samples } => Distribution::empirical(samples),
        DistributionSpec::PwlCdf { knots } => Distribution::pwl_cdf(knots),
        DistributionSpec::Mixture { weights, components } => {
            let comps = components.iter().map(validate).collect::<Result<Vec<_>>>()?;
            Distribution::mixture(comps, weights)
        }
    }
}

pub(super) fn check_total(sum: f64) -> Result<()> {
    if (sum - 1.0).abs() > MASS_TOL {
        return Err(Error::MassNotOne { sum, tol: MASS_TOL });
    }
    Ok(())
}
