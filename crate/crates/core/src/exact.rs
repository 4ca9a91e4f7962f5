//! Exact maximum-weight independent set for small graphs.
//!
//! Only positive-weight vertices are ever selected. Among optimal sets the
//! lexicographically smallest sorted id list wins.

use std::cmp::Ordering;

use num::{Signed, Zero};

use crate::geometry::PathId;
use crate::graph::IntersectionGraph;
use crate::number::Rational;

pub const DEFAULT_CAP: usize = 30;
/// Largest graph the exhaustive sweep accepts.
pub const EXHAUSTIVE_MAX_N: usize = 20;

#[derive(Debug, Clone, PartialEq)]
pub struct ExactResult {
    /// Selected ids, ascending.
    pub best_set: Vec<PathId>,
    /// Selected vertex indices, ascending.
    pub indices: Vec<usize>,
    pub best_weight: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the exact-solver cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("{weights} weights for {n} vertices")]
    DimensionMismatch { n: usize, weights: usize },
}

struct Incumbent<'a> {
    ids: &'a [PathId],
    weight: Rational,
    set: u64,
    key: Vec<PathId>,
}

impl Incumbent<'_> {
    fn key_of(&self, set: u64) -> Vec<PathId> {
        let mut key: Vec<PathId> = members(set).map(|v| self.ids[v]).collect();
        key.sort_unstable();
        key
    }

    fn offer(&mut self, set: u64, weight: &Rational) {
        let better = match weight.cmp(&self.weight) {
            Ordering::Greater => true,
            Ordering::Equal => self.key_of(set) < self.key,
            Ordering::Less => false,
        };
        if better {
            self.key = self.key_of(set);
            self.weight = weight.clone();
            self.set = set;
        }
    }

    fn finish(self) -> ExactResult {
        ExactResult {
            indices: members(self.set).collect(),
            best_set: self.key,
            best_weight: self.weight,
        }
    }
}

fn members(set: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&v| set >> v & 1 == 1)
}

fn masks(graph: &IntersectionGraph) -> Vec<u64> {
    (0..graph.len())
        .map(|v| graph.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect()
}

fn check(graph: &IntersectionGraph, weights: &[Rational], cap: usize) -> Result<(), OracleError> {
    let n = graph.len();
    if weights.len() != n {
        return Err(OracleError::DimensionMismatch {
            n,
            weights: weights.len(),
        });
    }
    if n > cap.min(63) {
        return Err(OracleError::TooLarge { n, cap: cap.min(63) });
    }
    Ok(())
}

/// Branch and bound with the default size cap.
pub fn exact_mwis(graph: &IntersectionGraph, weights: &[Rational]) -> Result<ExactResult, OracleError> {
    exact_mwis_capped(graph, weights, DEFAULT_CAP)
}

/// Branches on the highest-degree undecided vertex; prunes when the current
/// weight plus all remaining positive weight cannot reach the incumbent.
pub fn exact_mwis_capped(
    graph: &IntersectionGraph,
    weights: &[Rational],
    cap: usize,
) -> Result<ExactResult, OracleError> {
    check(graph, weights, cap)?;
    let adj = masks(graph);
    let candidates = (0..graph.len())
        .filter(|&v| weights[v].is_positive())
        .fold(0u64, |m, v| m | 1 << v);
    let mut best = Incumbent {
        ids: graph.ids(),
        weight: Rational::zero(),
        set: 0,
        key: Vec::new(),
    };
    let rest = members(candidates).map(|v| &weights[v]).sum();
    let mut search = Search {
        adj: &adj,
        weights,
        best: &mut best,
    };
    search.branch(candidates, 0, Rational::zero(), rest);
    Ok(best.finish())
}

struct Search<'a, 'b> {
    adj: &'a [u64],
    weights: &'a [Rational],
    best: &'a mut Incumbent<'b>,
}

impl Search<'_, '_> {
    fn branch(&mut self, cand: u64, set: u64, weight: Rational, rest: Rational) {
        if &weight + &rest < self.best.weight {
            return;
        }
        // Isolated candidates belong to every optimum.
        let (mut cand, mut set, mut weight) = (cand, set, weight);
        let mut rest = rest;
        for v in members(cand) {
            if self.adj[v] & cand == 0 {
                cand &= !(1 << v);
                set |= 1 << v;
                weight += &self.weights[v];
                rest -= &self.weights[v];
            }
        }
        if cand == 0 {
            self.best.offer(set, &weight);
            return;
        }
        let v = members(cand)
            .max_by_key(|&v| ((self.adj[v] & cand).count_ones(), std::cmp::Reverse(v)))
            .expect("candidates nonempty");

        let dropped = cand & (self.adj[v] | 1 << v);
        let lost: Rational = members(dropped).map(|u| &self.weights[u]).sum();
        self.branch(
            cand & !dropped,
            set | 1 << v,
            &weight + &self.weights[v],
            &rest - &lost,
        );
        self.branch(cand & !(1 << v), set, weight, rest - &self.weights[v]);
    }
}

/// Enumerates every subset of positive-weight vertices.
pub fn exhaustive_mwis(graph: &IntersectionGraph, weights: &[Rational]) -> Result<ExactResult, OracleError> {
    check(graph, weights, EXHAUSTIVE_MAX_N)?;
    let adj = masks(graph);
    let positive: Vec<usize> = (0..graph.len()).filter(|&v| weights[v].is_positive()).collect();
    let mut best = Incumbent {
        ids: graph.ids(),
        weight: Rational::zero(),
        set: 0,
        key: Vec::new(),
    };
    for bits in 0u64..1 << positive.len() {
        let set = members(bits).fold(0u64, |m, i| m | 1 << positive[i]);
        if members(set).all(|v| adj[v] & set == 0) {
            let w: Rational = members(set).map(|v| &weights[v]).sum();
            best.offer(set, &w);
        }
    }
    Ok(best.finish())
}
