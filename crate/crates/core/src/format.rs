//! Instance file format.
//!
//! ```json
//! {"k": 1, "paths": [{"id": 0, "weight": "5/2", "vertices": [[0,0],[2,0]]}]}
//! ```
//!
//! Weights are JSON numbers (decimal literals, converted exactly) or `"p/q"`
//! strings. Unknown fields are rejected.

use serde::{Deserialize, Serialize};
use serde_json::Value as Json;

use crate::geometry::{GridPath, GridPoint, Instance, InstanceError, PathId};
use crate::number::{parse_decimal, parse_ratio, Rational};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    k: u32,
    paths: Vec<RawPath>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPath {
    id: PathId,
    weight: Json,
    vertices: Vec<[i64; 2]>,
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed instance JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("path {id}: bad weight {weight}")]
    Weight { id: PathId, weight: String },
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

impl FormatError {
    /// True when the document could not be read at all (as opposed to
    /// describing an invalid instance).
    pub fn is_parse_error(&self) -> bool {
        !matches!(self, FormatError::Instance(_))
    }
}

fn parse_weight(id: PathId, w: &Json) -> Result<Rational, FormatError> {
    let bad = || FormatError::Weight {
        id,
        weight: w.to_string(),
    };
    match w {
        Json::Number(n) => parse_decimal(&n.to_string()).map_err(|_| bad()),
        Json::String(s) => parse_ratio(s).map_err(|_| bad()),
        _ => Err(bad()),
    }
}

fn weight_json(w: &Rational) -> Json {
    if w.is_integer() {
        // Integers stay plain JSON numbers.
        serde_json::from_str(&w.to_integer().to_string()).unwrap_or_else(|_| Json::String(w.to_string()))
    } else {
        Json::String(w.to_string())
    }
}

/// Parses the raw paths and `k` without validating path geometry.
pub fn parse_paths(text: &str) -> Result<(u32, Vec<GridPath>), FormatError> {
    let raw: RawInstance = serde_json::from_str(text)?;
    let paths = raw
        .paths
        .iter()
        .map(|p| {
            Ok(GridPath::new(
                p.id,
                parse_weight(p.id, &p.weight)?,
                p.vertices.iter().map(|&[x, y]| GridPoint::new(x, y)).collect(),
            ))
        })
        .collect::<Result<Vec<_>, FormatError>>()?;
    Ok((raw.k, paths))
}

/// Parses and validates an instance document.
pub fn parse_instance(text: &str) -> Result<Instance, FormatError> {
    let (k, paths) = parse_paths(text)?;
    Ok(Instance::new(k, paths)?)
}

/// Serializes an instance, one path per line.
pub fn write_instance(instance: &Instance) -> String {
    let mut out = format!("{{\"k\": {}, \"paths\": [", instance.k());
    for (i, p) in instance.paths().iter().enumerate() {
        let raw = RawPath {
            id: p.id,
            weight: weight_json(&p.weight),
            vertices: p.vertices.iter().map(|v| [v.x, v.y]).collect(),
        };
        out.push_str(if i == 0 { "\n  " } else { ",\n  " });
        out.push_str(&serde_json::to_string(&raw).expect("path serializes"));
    }
    if !instance.is_empty() {
        out.push('\n');
    }
    out.push_str("]}\n");
    out
}
