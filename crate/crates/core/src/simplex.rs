//! Dense primal simplex for `max c.x  s.t.  A x <= 1, x >= 0` with a 0/1
//! matrix `A`.
//!
//! Every right-hand side is 1, so the all-slack basis is feasible and no
//! phase one is needed. Pivoting follows Bland's rule (lowest-index entering
//! column, lowest-index leaving variable among ratio ties), which cannot cycle.

use crate::lp::LpError;
use crate::number::Number;

pub(crate) struct Tableau<N> {
    structural: usize,
    /// Row-major coefficients over structural then slack columns.
    a: Vec<Vec<N>>,
    rhs: Vec<N>,
    /// Reduced costs `c_j - z_j`.
    cost: Vec<N>,
    basis: Vec<usize>,
}

impl<N: Number> Tableau<N> {
    /// `rows[i]` lists the structural columns with coefficient 1 in row `i`.
    pub(crate) fn new(structural: usize, rows: &[&[usize]], objective: &[N]) -> Self {
        let m = rows.len();
        let width = structural + m;
        let a = rows
            .iter()
            .enumerate()
            .map(|(i, support)| {
                let mut row = vec![N::zero(); width];
                for &j in *support {
                    row[j] = N::one();
                }
                row[structural + i] = N::one();
                row
            })
            .collect();
        let mut cost = vec![N::zero(); width];
        cost[..structural].clone_from_slice(objective);
        Self {
            structural,
            a,
            rhs: vec![N::one(); m],
            cost,
            basis: (structural..width).collect(),
        }
    }

    fn width(&self) -> usize {
        self.cost.len()
    }

    /// Pivots to optimality and returns the number of pivots taken.
    pub(crate) fn run(&mut self, eps: f64) -> Result<usize, LpError> {
        let limit = 64 * (self.width() + 1) * (self.a.len() + 1);
        let mut pivots = 0;
        while let Some(q) = self.cost.iter().position(|c| c.is_pos_tol(eps)) {
            if pivots == limit {
                return Err(LpError::IterationLimit(limit));
            }
            let r = self.leaving_row(q, eps).ok_or(LpError::Unbounded)?;
            self.pivot(r, q);
            pivots += 1;
        }
        Ok(pivots)
    }

    fn leaving_row(&self, q: usize, eps: f64) -> Option<usize> {
        let mut best: Option<(usize, N)> = None;
        for (r, row) in self.a.iter().enumerate() {
            if !row[q].is_pos_tol(eps) {
                continue;
            }
            let ratio = self.rhs[r].div(&row[q]);
            let better = match &best {
                None => true,
                Some((b, best_ratio)) => {
                    let diff = ratio.sub(best_ratio);
                    diff.is_neg_tol(eps) || (diff.is_zero_tol(eps) && self.basis[r] < self.basis[*b])
                }
            };
            if better {
                best = Some((r, ratio));
            }
        }
        best.map(|(r, _)| r)
    }

    fn pivot(&mut self, r: usize, q: usize) {
        let inv = N::one().div(&self.a[r][q]);
        let mut prow = std::mem::take(&mut self.a[r]);
        let nonzero: Vec<usize> = (0..prow.len())
            .filter(|&j| !prow[j].is_zero_tol(0.0))
            .collect();
        for &j in &nonzero {
            prow[j] = prow[j].mul(&inv);
        }
        prow[q] = N::one();
        let prhs = self.rhs[r].mul(&inv);

        for (i, row) in self.a.iter_mut().enumerate() {
            if i == r || row.is_empty() || row[q].is_zero_tol(0.0) {
                continue;
            }
            let f = row[q].clone();
            for &j in &nonzero {
                row[j].sub_mul_assign(&f, &prow[j]);
                row[j].snap();
            }
            row[q] = N::zero();
            self.rhs[i].sub_mul_assign(&f, &prhs);
            self.rhs[i].snap();
            if self.rhs[i].is_neg_tol(0.0) {
                // Only float round-off can push a basic value below zero.
                self.rhs[i] = N::zero();
            }
        }

        if !self.cost[q].is_zero_tol(0.0) {
            let f = self.cost[q].clone();
            for &j in &nonzero {
                self.cost[j].sub_mul_assign(&f, &prow[j]);
                self.cost[j].snap();
            }
            self.cost[q] = N::zero();
        }

        self.a[r] = prow;
        self.rhs[r] = prhs;
        self.basis[r] = q;
    }

    /// Primal values of the structural variables and one dual value per row.
    pub(crate) fn primal_dual(&self) -> (Vec<N>, Vec<N>) {
        let mut x = vec![N::zero(); self.structural];
        for (r, &j) in self.basis.iter().enumerate() {
            if j < self.structural {
                x[j] = self.rhs[r].clone();
            }
        }
        let duals = self.cost[self.structural..]
            .iter()
            .map(|c| N::zero().sub(c))
            .collect();
        (x, duals)
    }
}
