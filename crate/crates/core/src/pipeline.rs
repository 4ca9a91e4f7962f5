//! End-to-end solve: point index, graph, LP, rounding, certificate.

use crate::geometry::Instance;
use crate::graph::{build_graph, build_point_index, IntersectionGraph, PointIndex};
use crate::lp::{build_lp, check_neighborhood_bound, solve_lp, BoundViolated, LpError, LpProblem, LpStatus};
use crate::number::{Arith, Number, Rational, Value};
use crate::rounding::{local_ratio_round, PivotRule, RoundingError, SolveReport};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    pub arith: Arith,
    pub pivot: PivotRule,
    /// Float-mode tolerance for LP feasibility, optimality and the certificate.
    pub tolerance: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            arith: Arith::Auto,
            pivot: PivotRule::MinId,
            tolerance: 1e-9,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SolveError {
    #[error(transparent)]
    Lp(#[from] LpError),
    #[error(transparent)]
    Bound(#[from] BoundViolated),
    #[error(transparent)]
    Rounding(#[from] RoundingError),
}

/// Everything a solve produced, kept for reporting and cross-checks.
#[derive(Debug, Clone)]
pub struct Solution {
    pub report: SolveReport,
    pub index: PointIndex,
    pub graph: IntersectionGraph,
    pub lp: LpProblem,
    /// LP values by path index.
    pub x: Vec<Value>,
    /// `sum_{P' in N[P]} x(P')` by path index.
    pub neighborhood_sums: Vec<Value>,
    pub lp_status: LpStatus,
    pub lp_iterations: usize,
    /// Float mode failed numerically and the solve was redone exactly.
    pub exact_fallback: bool,
}

pub fn solve(instance: &Instance, opts: &SolveOptions) -> Result<Solution, SolveError> {
    let index = build_point_index(instance);
    let graph = build_graph(&index);
    let lp = build_lp(instance, &index);
    let stages = match opts.arith.resolve(instance.len()) {
        Arith::Float => match run::<f64>(instance, &graph, &lp, opts) {
            Err(SolveError::Lp(LpError::NumericalFailure(_) | LpError::IterationLimit(_))) => {
                run::<Rational>(instance, &graph, &lp, opts).map(|s| (s, true))
            }
            other => other.map(|s| (s, false)),
        },
        _ => run::<Rational>(instance, &graph, &lp, opts).map(|s| (s, false)),
    };
    let (stages, exact_fallback) = stages?;
    Ok(Solution {
        report: stages.report,
        index,
        graph,
        lp,
        x: stages.x,
        neighborhood_sums: stages.sums,
        lp_status: stages.status,
        lp_iterations: stages.iterations,
        exact_fallback,
    })
}

struct Stages {
    report: SolveReport,
    x: Vec<Value>,
    sums: Vec<Value>,
    status: LpStatus,
    iterations: usize,
}

fn run<N: Number>(
    instance: &Instance,
    graph: &IntersectionGraph,
    lp: &LpProblem,
    opts: &SolveOptions,
) -> Result<Stages, SolveError> {
    let eps = opts.tolerance;
    let x = solve_lp::<N>(lp, eps)?;
    let sums = check_neighborhood_bound(&x, graph, instance, eps)?;
    let report = local_ratio_round(instance, graph, &x, opts.pivot, eps)?;
    Ok(Stages {
        report,
        x: x.x.iter().map(Number::to_value).collect(),
        sums: sums.iter().map(Number::to_value).collect(),
        status: x.status,
        iterations: x.iterations,
    })
}
