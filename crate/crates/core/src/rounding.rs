//! Local-ratio rounding of a feasible LP solution.
//!
//! The recursive procedure is run as two flat passes:
//!
//! * forward: drop paths whose residual weight is non-positive, pick a pivot
//!   `P`, subtract its residual weight from every active path in `N[P]`, and
//!   push `P`;
//! * backward: pop pivots in reverse and keep `P` unless something already
//!   kept is adjacent to it.
//!
//! Every path qualifies as a pivot because the LP mass on any closed
//! neighborhood is at most `c*k + c + 1`, so the pivot rule is free. The kept
//! set weighs at least `w.x / (c*k + c + 1)`, which is checked at the end.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::geometry::{Instance, PathId};
use crate::graph::IntersectionGraph;
use crate::lp::LpSolution;
use crate::number::{Arith, Number, Rational, Value};

/// Residual weights at or below this are treated as deleted in float mode.
pub const FLOAT_NONPOSITIVE_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotRule {
    /// Smallest id among active paths.
    #[default]
    MinId,
    /// Largest residual weight, ties to the smaller id.
    MaxWeight,
}

impl PivotRule {
    pub fn as_str(self) -> &'static str {
        match self {
            PivotRule::MinId => "min-id",
            PivotRule::MaxWeight => "max-weight",
        }
    }
}

impl fmt::Display for PivotRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PivotRule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "min-id" => Ok(PivotRule::MinId),
            "max-weight" => Ok(PivotRule::MaxWeight),
            other => Err(format!("unknown pivot rule `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RoundingError {
    #[error("no active path to pivot on")]
    EmptyActiveSet,
    #[error("LP solution has {found} values for {expected} paths")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("selected paths {0:?} are not independent")]
    NotIndependent(Vec<PathId>),
    #[error("certificate failed: weight {weight} times bound {bound} is below LP objective {lp_objective}")]
    CertificationFailed {
        weight: String,
        lp_objective: String,
        bound: u64,
    },
}

/// Picks the next pivot from `active` (path id to index).
pub fn select_pivot<N: Number>(
    rule: PivotRule,
    active: &BTreeMap<PathId, usize>,
    residual: &[N],
) -> Result<usize, RoundingError> {
    let mut it = active.values().copied();
    let first = it.next().ok_or(RoundingError::EmptyActiveSet)?;
    Ok(match rule {
        PivotRule::MinId => first,
        // Ascending id order plus a strict comparison keeps the smaller id on ties.
        PivotRule::MaxWeight => it.fold(first, |best, i| {
            if residual[i] > residual[best] {
                i
            } else {
                best
            }
        }),
    })
}

/// Outcome of a certified rounding.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    /// Selected path ids, ascending.
    pub selected: Vec<PathId>,
    /// Total original weight of `selected`, always exact.
    pub weight: Rational,
    /// Objective reported by the LP solver.
    pub lp_objective: Value,
    /// `w.x` recomputed from the solution vector.
    pub recomputed_objective: Value,
    /// `c*k + c + 1`.
    pub bound: u64,
    pub certified: bool,
    pub pivot_rule: PivotRule,
    pub arith: Arith,
    /// Pivot ids in the order they were chosen.
    pub pivots: Vec<PathId>,
}

/// Rounds `lp` into an independent set and certifies
/// `weight * (c*k + c + 1) >= w.x`.
///
/// `eps` is the relative tolerance of the certificate in float mode.
pub fn local_ratio_round<N: Number>(
    instance: &Instance,
    graph: &IntersectionGraph,
    lp: &LpSolution<N>,
    rule: PivotRule,
    eps: f64,
) -> Result<SolveReport, RoundingError> {
    let n = instance.len();
    if lp.x.len() != n || graph.len() != n {
        return Err(RoundingError::DimensionMismatch {
            expected: n,
            found: lp.x.len(),
        });
    }
    let weights: Vec<N> = instance
        .paths()
        .iter()
        .map(|p| N::from_rational(&p.weight))
        .collect();
    let deleted = |w: &N| !w.is_pos_tol(if N::EXACT { 0.0 } else { FLOAT_NONPOSITIVE_EPS });

    let mut residual = weights.clone();
    let mut active: BTreeMap<PathId, usize> = (0..n)
        .filter(|&i| !deleted(&residual[i]))
        .map(|i| (graph.id(i), i))
        .collect();
    let mut stack = Vec::with_capacity(active.len());

    while !active.is_empty() {
        let p = select_pivot(rule, &active, &residual)?;
        let wp = residual[p].clone();
        for q in graph.closed_neighborhood(p) {
            if !active.contains_key(&graph.id(q)) {
                continue;
            }
            residual[q] = residual[q].sub(&wp);
            if deleted(&residual[q]) {
                active.remove(&graph.id(q));
            }
        }
        debug_assert!(!active.contains_key(&graph.id(p)));
        stack.push(p);
    }

    let mut blocked = vec![false; n];
    let mut chosen = Vec::new();
    for &p in stack.iter().rev() {
        if !blocked[p] {
            chosen.push(p);
            for q in graph.closed_neighborhood(p) {
                blocked[q] = true;
            }
        }
    }

    let mut selected: Vec<PathId> = chosen.iter().map(|&i| graph.id(i)).collect();
    selected.sort_unstable();
    if !graph.is_independent(&chosen) {
        return Err(RoundingError::NotIndependent(selected));
    }

    let weight: Rational = chosen.iter().map(|&i| &instance.paths()[i].weight).sum();
    let recomputed = weights
        .iter()
        .zip(&lp.x)
        .fold(N::zero(), |s, (w, x)| s.add(&w.mul(x)));
    let scaled = N::from_rational(&weight).mul(&N::from_u64(instance.bound()));
    let covers = |target: &N| {
        let slack = eps * target.to_f64().abs().max(1.0);
        !target.sub(&scaled).is_pos_tol(slack)
    };
    let certified = covers(&recomputed) && covers(&lp.objective);
    if !certified {
        return Err(RoundingError::CertificationFailed {
            weight: weight.to_string(),
            lp_objective: lp.objective.to_string(),
            bound: instance.bound(),
        });
    }

    Ok(SolveReport {
        selected,
        weight,
        lp_objective: lp.objective.to_value(),
        recomputed_objective: recomputed.to_value(),
        bound: instance.bound(),
        certified,
        pivot_rule: rule,
        arith: if N::EXACT { Arith::Exact } else { Arith::Float },
        pivots: stack.iter().map(|&i| graph.id(i)).collect(),
    })
}
