//! Point index `t -> paths(t)` and the intersection graph derived from it.
//!
//! Paths are addressed by their position in [`Instance::paths`] ("index");
//! the user-facing [`PathId`] is kept alongside for output.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::geometry::{GridPoint, Instance, PathId};

/// Maps each covered grid point to the sorted indices of the paths on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointIndex {
    ids: Vec<PathId>,
    points: BTreeMap<GridPoint, Vec<usize>>,
}

impl PointIndex {
    pub fn path_count(&self) -> usize {
        self.ids.len()
    }

    pub fn ids(&self) -> &[PathId] {
        &self.ids
    }

    /// `paths(t)` as indices, or an empty slice when `t` is uncovered.
    pub fn paths_at(&self, t: GridPoint) -> &[usize] {
        self.points.get(&t).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `paths(t)` as path ids, sorted.
    pub fn ids_at(&self, t: GridPoint) -> Vec<PathId> {
        let mut ids: Vec<_> = self.paths_at(t).iter().map(|&i| self.ids[i]).collect();
        ids.sort_unstable();
        ids
    }

    /// Iterates over `grid(G)` in point order with each point's path indices.
    pub fn iter(&self) -> impl Iterator<Item = (GridPoint, &[usize])> {
        self.points.iter().map(|(t, v)| (*t, v.as_slice()))
    }

    /// Number of distinct covered points, `|grid(G)|`.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `sum_t |paths(t)|`, equal to `sum_P |grid(P)|`.
    pub fn incidences(&self) -> usize {
        self.points.values().map(Vec::len).sum()
    }
}

pub fn build_point_index(instance: &Instance) -> PointIndex {
    let mut points: BTreeMap<GridPoint, Vec<usize>> = BTreeMap::new();
    for (i, path) in instance.paths().iter().enumerate() {
        for t in path.walk() {
            let on = points.entry(t).or_default();
            // walk() never repeats a point on a valid path
            if on.last() != Some(&i) {
                on.push(i);
            }
        }
    }
    PointIndex {
        ids: instance.ids(),
        points,
    }
}

/// Undirected intersection graph over path indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionGraph {
    ids: Vec<PathId>,
    adjacency: Vec<Vec<usize>>,
}

impl IntersectionGraph {
    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn ids(&self) -> &[PathId] {
        &self.ids
    }

    pub fn id(&self, index: usize) -> PathId {
        self.ids[index]
    }

    /// Sorted open neighborhood (excludes `v`).
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Sorted closed neighborhood `N[v]`, which always contains `v`.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let adj = &self.adjacency[v];
        let at = adj.partition_point(|&u| u < v);
        let mut out = Vec::with_capacity(adj.len() + 1);
        out.extend_from_slice(&adj[..at]);
        out.push(v);
        out.extend_from_slice(&adj[at..]);
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// True when no two of the given indices are adjacent.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.adjacent(u, v)))
    }

    /// Edge list by path id, one `u v` pair per line with `u < v`, sorted.
    pub fn edge_list(&self) -> String {
        let mut edges: Vec<(PathId, PathId)> = self
            .adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, adj)| adj.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .map(|(u, v)| {
                let (a, b) = (self.ids[u], self.ids[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        let mut out = String::new();
        for (u, v) in edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Two paths are adjacent iff some grid point lies on both (touching counts).
pub fn build_graph(index: &PointIndex) -> IntersectionGraph {
    let n = index.path_count();
    let mut adjacency = vec![Vec::new(); n];
    for (_, on) in index.iter() {
        for (a, &u) in on.iter().enumerate() {
            for &v in &on[a + 1..] {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
    }
    for adj in &mut adjacency {
        adj.sort_unstable();
        adj.dedup();
    }
    IntersectionGraph {
        ids: index.ids().to_vec(),
        adjacency,
    }
}
