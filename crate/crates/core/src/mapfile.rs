//! Mapping spec files: a JSON document with a label, the coefficients of `h`
//! and `g` as `[re, im]` pairs, and optional expected constants.
//!
//! ```json
//! {
//!   "label": "z + conj(z)^2/2",
//!   "h": [[0, 0], [1, 0]],
//!   "g": [[0, 0], [0, 0], [0.5, 0]],
//!   "expected": { "C": 0.5, "alpha": 1.0, "K": null }
//! }
//! ```

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::mapping::HarmonicMap;
use crate::series::ComplexSeries;

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(rename = "C", default, skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(rename = "K", default, skip_serializing_if = "Option::is_none")]
    pub k: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MappingSpec {
    pub label: String,
    #[serde(deserialize_with = "coefficients")]
    pub h: Vec<[f64; 2]>,
    #[serde(deserialize_with = "coefficients")]
    pub g: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

fn coefficients<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<[f64; 2]>, D::Error> {
    let v = Vec::<[f64; 2]>::deserialize(d)?;
    if v.is_empty() {
        return Err(serde::de::Error::custom("coefficient array must not be empty"));
    }
    if v.iter().flatten().any(|x| !x.is_finite()) {
        return Err(serde::de::Error::custom("coefficients must be finite"));
    }
    Ok(v)
}

impl MappingSpec {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: strip_position(&e.to_string()),
        })
    }

    pub fn from_map(map: &HarmonicMap) -> Self {
        let pairs = |s: &ComplexSeries| s.coeffs().iter().map(|c| [c.re, c.im]).collect();
        Self {
            label: map.label().to_string(),
            h: pairs(map.h()),
            g: pairs(map.g()),
            expected: None,
        }
    }

    pub fn to_map(&self) -> HarmonicMap {
        let series = |v: &[[f64; 2]]| ComplexSeries::new(v.iter().map(|&[re, im]| Complex64::new(re, im)).collect());
        HarmonicMap::new(series(&self.h), series(&self.g), self.label.clone())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }
}

/// serde_json appends " at line L column C"; the position is reported separately.
fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXTREMAL: &str = r#"{
  "label": "extremal",
  "h": [[0, 0], [1, 0]],
  "g": [[0, 0], [0, 0], [0.5, 0]],
  "expected": {"C": 0.5, "alpha": 1}
}"#;

    #[test]
    fn parses_and_pads() {
        let spec = MappingSpec::parse(EXTREMAL).unwrap();
        let f = spec.to_map();
        assert_eq!(f.degree(), 2);
        assert_eq!(f.b(2), Complex64::new(0.5, 0.0));
        assert_eq!(spec.expected.unwrap().c, Some(0.5));
        assert_eq!(spec.expected.unwrap().k, None);
    }

    #[test]
    fn round_trip() {
        let spec = MappingSpec::from_map(&HarmonicMap::extremal());
        assert_eq!(MappingSpec::parse(&spec.to_json()).unwrap(), spec);
    }

    fn parse_error(text: &str) -> (usize, usize, String) {
        match MappingSpec::parse(text) {
            Err(Error::Parse { line, column, message }) => (line, column, message),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn errors_carry_positions() {
        let (line, column, _) = parse_error("{\n  \"label\": \"x\",\n  \"h\": [[0, 0], [1, ]]\n}");
        assert_eq!((line, column), (3, 21));
        let (line, _, msg) = parse_error("{\"label\": \"x\", \"h\": [], \"g\": [[0,0]]}");
        assert_eq!(line, 1);
        assert!(msg.contains("empty"), "{msg}");
        let (_, _, msg) = parse_error("{\"label\": \"x\", \"h\": [[1,0]], \"g\": [[0,0]], \"extra\": 1}");
        assert!(msg.contains("unknown field"), "{msg}");
        let (_, _, msg) = parse_error("{\"label\": \"x\", \"h\": [[1e999,0]], \"g\": [[0,0]]}");
        assert!(msg.contains("out of range"), "{msg}");
        parse_error("{\"label\": \"x\", \"h\": [[1,0,0]], \"g\": [[0,0]]}");
        parse_error("{\"label\": \"x\", \"g\": [[0,0]]}");
    }
}
