//! The grid-point LP relaxation
//!
//! ```text
//! maximize   sum_P w(P) x(P)
//! subject to sum_{P in paths(t)} x(P) <= 1   for every grid point t
//!            x(P) >= 0
//! ```
//!
//! Points covered by a single path only ever yield `x(P) <= 1`, so those rows
//! are represented by a per-variable upper bound of 1. Points covered by two or
//! more paths become explicit rows, one per distinct support set.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::geometry::{GridPoint, Instance, PathId};
use crate::graph::{IntersectionGraph, PointIndex};
use crate::number::{Number, Rational};
use crate::simplex::Tableau;

/// One `sum x <= 1` row, with the grid points that induce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConstraint {
    /// Sorted variable indices.
    pub support: Vec<usize>,
    /// Every grid point whose `paths(t)` equals `support`, in point order.
    pub points: Vec<GridPoint>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpProblem {
    ids: Vec<PathId>,
    objective: Vec<Rational>,
    constraints: Vec<PointConstraint>,
}

impl LpProblem {
    pub fn variable_count(&self) -> usize {
        self.objective.len()
    }

    pub fn ids(&self) -> &[PathId] {
        &self.ids
    }

    pub fn objective(&self) -> &[Rational] {
        &self.objective
    }

    /// Explicit point rows; the `x <= 1` bounds are not included.
    pub fn constraints(&self) -> &[PointConstraint] {
        &self.constraints
    }

    /// Point rows plus one upper bound per variable.
    pub fn constraint_count(&self) -> usize {
        self.constraints.len() + self.objective.len()
    }

    /// Renders the problem in CPLEX LP text format.
    pub fn to_lp_format(&self) -> String {
        let mut out = String::from("\\ maximum-weight independent set, grid-point LP relaxation\n");
        out.push_str("Maximize\n obj:");
        if self.objective.is_empty() {
            out.push_str(" 0");
        }
        for (i, (w, id)) in self.objective.iter().zip(&self.ids).enumerate() {
            let c = Number::to_f64(w);
            let sign = match (c < 0.0, i == 0) {
                (true, _) => " -",
                (false, true) => "",
                (false, false) => " +",
            };
            let _ = write!(out, "{sign} {} x{id}", c.abs());
        }
        out.push_str("\nSubject To\n");
        for row in &self.constraints {
            let t = row.points[0];
            let _ = write!(out, " p_{}_{}:", t.x, t.y);
            for (i, &v) in row.support.iter().enumerate() {
                let _ = write!(out, "{} x{}", if i == 0 { "" } else { " +" }, self.ids[v]);
            }
            out.push_str(" <= 1\n");
        }
        out.push_str("Bounds\n");
        for id in &self.ids {
            let _ = writeln!(out, " 0 <= x{id} <= 1");
        }
        out.push_str("End\n");
        out
    }
}

/// Builds the relaxation with rows only at shared points, duplicates collapsed.
pub fn build_lp(instance: &Instance, index: &PointIndex) -> LpProblem {
    let mut rows: BTreeMap<&[usize], Vec<GridPoint>> = BTreeMap::new();
    for (t, on) in index.iter() {
        if on.len() >= 2 {
            rows.entry(on).or_default().push(t);
        }
    }
    let mut constraints: Vec<PointConstraint> = rows
        .into_iter()
        .map(|(support, points)| PointConstraint {
            support: support.to_vec(),
            points,
        })
        .collect();
    constraints.sort_by_key(|c| c.points[0]);
    LpProblem {
        ids: instance.ids(),
        objective: instance.weights(),
        constraints,
    }
}

/// One row for every point of `grid(G)`, with no collapsing.
///
/// Same optimum as [`build_lp`]; kept for cross-checking.
pub fn build_lp_uncollapsed(instance: &Instance, index: &PointIndex) -> LpProblem {
    let constraints = index
        .iter()
        .map(|(t, on)| PointConstraint {
            support: on.to_vec(),
            points: vec![t],
        })
        .collect();
    LpProblem {
        ids: instance.ids(),
        objective: instance.weights(),
        constraints,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LpStatus {
    Optimal,
    /// Primal feasible; the dual bound exceeds the objective by `gap`.
    FeasibleWithGap(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution<N> {
    pub x: Vec<N>,
    pub objective: N,
    pub status: LpStatus,
    pub iterations: usize,
}

impl<N: Number> LpSolution<N> {
    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LpError {
    #[error("LP is unbounded")]
    Unbounded,
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
    #[error("simplex exceeded {0} iterations")]
    IterationLimit(usize),
}

/// Solves the LP with a primal simplex (Bland's rule) on a dense tableau.
///
/// `eps` is the float tolerance for pivoting, feasibility and the duality gap;
/// it is ignored in exact arithmetic.
pub fn solve_lp<N: Number>(lp: &LpProblem, eps: f64) -> Result<LpSolution<N>, LpError> {
    let n = lp.variable_count();
    let bounds: Vec<usize> = (0..n).collect();
    let rows: Vec<&[usize]> = lp
        .constraints
        .iter()
        .map(|c| c.support.as_slice())
        .chain(bounds.iter().map(std::slice::from_ref))
        .collect();
    let objective: Vec<N> = lp.objective.iter().map(N::from_rational).collect();

    let mut tableau = Tableau::new(n, &rows, &objective);
    let iterations = tableau.run(eps)?;
    let (mut x, duals) = tableau.primal_dual();

    if !N::EXACT {
        for (j, v) in x.iter().enumerate() {
            if v.is_neg_tol(eps) || v.sub(&N::one()).is_pos_tol(eps) {
                return Err(LpError::NumericalFailure(format!(
                    "x[{}] = {v} outside [0, 1]",
                    lp.ids[j]
                )));
            }
        }
        // Clamping into [0, 1] only lowers row sums, so feasibility is kept.
        for v in &mut x {
            if v.is_neg_tol(0.0) {
                *v = N::zero();
            } else if v.sub(&N::one()).is_pos_tol(0.0) {
                *v = N::one();
            }
        }
        for row in &lp.constraints {
            let sum = row.support.iter().fold(N::zero(), |s, &j| s.add(&x[j]));
            if sum.sub(&N::one()).is_pos_tol(eps) {
                return Err(LpError::NumericalFailure(format!(
                    "row at {} sums to {sum}",
                    row.points[0]
                )));
            }
        }
    }

    let value = objective
        .iter()
        .zip(&x)
        .fold(N::zero(), |s, (w, v)| s.add(&w.mul(v)));
    // Every right-hand side is 1, so the dual objective is the sum of duals.
    let dual_bound = duals.iter().fold(N::zero(), |s, y| s.add(y));
    let gap = dual_bound.sub(&value);
    let scale = value.to_f64().abs().max(1.0);
    let status = if gap.is_zero_tol(eps * scale) {
        LpStatus::Optimal
    } else if N::EXACT {
        return Err(LpError::NumericalFailure(format!(
            "exact solve ended with duality gap {gap}"
        )));
    } else {
        LpStatus::FeasibleWithGap(gap.to_f64())
    };

    Ok(LpSolution {
        x,
        objective: value,
        status,
        iterations,
    })
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("neighborhood LP mass of path {id} is {value}, above the bound {bound}")]
pub struct BoundViolated {
    pub id: PathId,
    pub value: String,
    pub bound: u64,
}

/// Computes `sum_{P' in N[P]} x(P')` for every path and checks each against
/// `c*k + c + 1`, allowing `eps` slack in float mode.
pub fn check_neighborhood_bound<N: Number>(
    solution: &LpSolution<N>,
    graph: &IntersectionGraph,
    instance: &Instance,
    eps: f64,
) -> Result<Vec<N>, BoundViolated> {
    let bound = instance.bound();
    let limit = N::from_u64(bound);
    (0..graph.len())
        .map(|p| {
            let sum = graph
                .closed_neighborhood(p)
                .into_iter()
                .fold(N::zero(), |s, q| s.add(&solution.x[q]));
            if sum.sub(&limit).is_pos_tol(eps) {
                Err(BoundViolated {
                    id: graph.id(p),
                    value: sum.to_string(),
                    bound,
                })
            } else {
                Ok(sum)
            }
        })
        .collect()
}
