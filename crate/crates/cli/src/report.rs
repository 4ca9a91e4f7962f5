//! JSON documents printed by `solve` and `exact`.

use bkvpg::{ExactResult, PathId, SolveReport};
use serde::Serialize;

/// Output schema shared by `solve` and `exact`.
///
/// `weight` is always an exact `p/q` string. `lp_objective` is `p/q` in exact
/// mode, a decimal string in float mode, and `null` for `exact`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportJson {
    pub selected: Vec<PathId>,
    pub weight: String,
    pub lp_objective: Option<String>,
    pub bound: u64,
    pub certified: bool,
    pub pivot_rule: Option<String>,
    pub arith: String,
}

impl From<&SolveReport> for ReportJson {
    fn from(r: &SolveReport) -> Self {
        Self {
            selected: r.selected.clone(),
            weight: r.weight.to_string(),
            lp_objective: Some(r.lp_objective.to_string()),
            bound: r.bound,
            certified: r.certified,
            pivot_rule: Some(r.pivot_rule.to_string()),
            arith: r.arith.as_str().to_string(),
        }
    }
}

impl ReportJson {
    /// An optimal set needs no LP certificate; `certified` records that the
    /// set was re-checked for independence.
    pub fn from_exact(r: &ExactResult, bound: u64, independent: bool) -> Self {
        Self {
            selected: r.best_set.clone(),
            weight: r.best_weight.to_string(),
            lp_objective: None,
            bound,
            certified: independent,
            pivot_rule: None,
            arith: "exact".into(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Payload printed when the certificate check trips.
#[derive(Debug, Serialize)]
pub struct FailureJson {
    pub error: String,
    pub message: String,
}
