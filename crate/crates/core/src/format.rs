//! Lossless text rendering of extended reals.

use serde::{Deserialize, Deserializer, Serializer};

const EXACT_INT: f64 = 9_007_199_254_740_992.0; // 2^53

/// Shortest round-trip decimal; integers print without a fractional part,
/// infinities as `inf` / `-inf`.
pub fn fmt_num(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.to_string()
    } else if x == x.trunc() && x.abs() < EXACT_INT {
        format!("{}", x as i64)
    } else {
        format!("{x:?}")
    }
}

pub fn parse_num(s: &str) -> Option<f64> {
    match s.trim() {
        "inf" | "+inf" => Some(f64::INFINITY),
        "-inf" => Some(f64::NEG_INFINITY),
        t => t.parse().ok().filter(|v: &f64| v.is_finite()),
    }
}

/// Serde adapter: finite values as JSON numbers, infinities as strings.
pub mod ext_real {
    use super::*;

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        if x.is_infinite() {
            s.serialize_str(if *x > 0.0 { "inf" } else { "-inf" })
        } else if *x == x.trunc() && x.abs() < EXACT_INT {
            s.serialize_i64(*x as i64)
        } else {
            s.serialize_f64(*x)
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Num(f64),
        Text(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(v),
            Raw::Text(t) => match t.as_str() {
                "inf" | "+inf" => Ok(f64::INFINITY),
                "-inf" => Ok(f64::NEG_INFINITY),
                other => Err(serde::de::Error::custom(format!(
                    "expected number, \"inf\" or \"-inf\", got {other:?}"
                ))),
            },
        }
    }
}
