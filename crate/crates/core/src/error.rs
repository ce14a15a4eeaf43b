use thiserror::Error;

/// Errors raised while validating laws or evaluating operations on them.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("total mass {sum} is not 1 (tolerance {tol:e})")]
    MassNotOne { sum: f64, tol: f64 },
    #[error("{what} out of order at index {index}")]
    NonMonotone { what: &'static str, index: usize },
    #[error("law has empty support")]
    EmptySupport,
    #[error("mixture nesting depth exceeds {max}")]
    DepthExceeded { max: usize },
    #[error("non-positive {what} {value} at index {index}")]
    NonPositiveMass {
        what: &'static str,
        value: f64,
        index: usize,
    },
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("cdf must start at 0 and end at 1, got first={first}, last={last}")]
    CdfEndpoints { first: f64, last: f64 },
    #[error("{weights} mixture weights for {components} components")]
    ComponentMismatch { weights: usize, components: usize },
    #[error("tau = {0} outside the admissible range")]
    BadTau(f64),
    #[error("bad interval: a = {a} > b = {b}")]
    BadInterval { a: f64, b: f64 },
    #[error("bad bracket [{lo}, {hi}]")]
    BadBracket { lo: f64, hi: f64 },
    #[error("grid needs at least {min} points, got {n}")]
    TooFewPoints { n: usize, min: usize },
    #[error("point ({x}, {y}) is not on the filled-in graph")]
    NotOnGraph { x: f64, y: f64 },
    #[error("cannot read spec: {0}")]
    Io(String),
    #[error("invalid spec JSON: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
