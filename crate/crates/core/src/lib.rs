//! Approximate maximum-weight independent sets on B_k-VPG graphs.
//!
//! Vertices are axis-parallel lattice paths with at most `k` bends; two
//! vertices are adjacent when their paths share a grid node. With `c` the
//! longest segment length, the solver returns an independent set of weight at
//! least `1 / (c*k + c + 1)` of the LP relaxation optimum and checks that
//! bound on every run.
//!
//! ```
//! use bkvpg::{format::parse_instance, solve, SolveOptions};
//!
//! let inst = parse_instance(r#"{"k": 1, "paths": [
//!     {"id": 0, "weight": 3, "vertices": [[0,1],[2,1]]},
//!     {"id": 1, "weight": 1, "vertices": [[1,0],[1,2]]}
//! ]}"#).unwrap();
//! let sol = solve(&inst, &SolveOptions::default()).unwrap();
//! assert_eq!(sol.report.selected, vec![0]);
//! assert!(sol.report.certified);
//! ```

pub mod exact;
pub mod format;
pub mod generate;
pub mod geometry;
pub mod graph;
pub mod lp;
pub mod number;
pub mod pipeline;
pub mod rounding;
mod simplex;

pub use exact::{exact_mwis, exhaustive_mwis, ExactResult, OracleError};
pub use generate::{generate, GenError, GenParams};
pub use geometry::{
    derive_c, grid_points, validate_path, BoundingBox, GridPath, GridPoint, Instance, InstanceError,
    PathId, Violation, ViolationKind,
};
pub use graph::{build_graph, build_point_index, IntersectionGraph, PointIndex};
pub use lp::{build_lp, check_neighborhood_bound, solve_lp, LpError, LpProblem, LpSolution, LpStatus};
pub use number::{Arith, Number, Rational, Value};
pub use pipeline::{solve, Solution, SolveError, SolveOptions};
pub use rounding::{local_ratio_round, select_pivot, PivotRule, RoundingError, SolveReport};
