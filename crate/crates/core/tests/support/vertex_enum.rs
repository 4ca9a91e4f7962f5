//! LP optimum by brute-force vertex enumeration.
//!
//! For `max c.x` over `{x : rows.x <= 1, 0 <= x <= 1}` every basic feasible
//! point is the unique solution of `n` tight constraints. Enumerating all
//! `n`-subsets, solving each square system exactly and keeping the feasible
//! ones yields the optimum without any pivoting logic.

use num::{BigInt, BigRational, One, Signed, Zero};

type Q = BigRational;

#[derive(Clone)]
struct Halfspace {
    coef: Vec<Q>,
    rhs: Q,
}

fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::new(), &mut out);
    out
}

fn solve_square(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Option<Vec<Q>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = Q::one() / &a[col][col];
        for v in a[col].iter_mut() {
            *v = &*v * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (v, p) in a[r].iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
                let t = &f * &b[col];
                b[r] -= t;
            }
        }
    }
    Some(b)
}

/// Maximum of `objective . x` subject to each `rows[i]` summing to at most 1
/// and `0 <= x <= 1`.
pub fn lp_optimum_by_vertices(n: usize, rows: &[Vec<usize>], objective: &[Q]) -> Q {
    let mut hs = Vec::new();
    for row in rows {
        let mut coef = vec![Q::zero(); n];
        for &j in row {
            coef[j] = Q::one();
        }
        hs.push(Halfspace { coef, rhs: Q::one() });
    }
    for j in 0..n {
        let mut up = vec![Q::zero(); n];
        up[j] = Q::one();
        hs.push(Halfspace { coef: up, rhs: Q::one() });
        let mut low = vec![Q::zero(); n];
        low[j] = -Q::one();
        hs.push(Halfspace { coef: low, rhs: Q::zero() });
    }
    let mut best: Option<Q> = None;
    for pick in combinations(hs.len(), n) {
        let a = pick.iter().map(|&i| hs[i].coef.clone()).collect();
        let b = pick.iter().map(|&i| hs[i].rhs.clone()).collect();
        let Some(x) = solve_square(a, b) else { continue };
        let feasible = hs.iter().all(|h| {
            let lhs: Q = h.coef.iter().zip(&x).map(|(c, v)| c * v).sum();
            !(lhs - &h.rhs).is_positive()
        });
        if feasible {
            let val: Q = objective.iter().zip(&x).map(|(c, v)| c * v).sum();
            if best.as_ref().is_none_or(|b| val > *b) {
                best = Some(val);
            }
        }
    }
    best.unwrap_or_else(Q::zero)
}

#[allow(dead_code)]
pub fn q(p: i64, d: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(d))
}
