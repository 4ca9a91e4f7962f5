//! Axis-parallel lattice paths, their validation, and the instance parameters
//! `k` (bend budget) and `c` (longest segment).

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::number::Rational;

pub type PathId = u64;

/// A node of the integer grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPoint {
    pub x: i64,
    pub y: i64,
}

impl GridPoint {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }
}

impl From<(i64, i64)> for GridPoint {
    fn from((x, y): (i64, i64)) -> Self {
        Self { x, y }
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Admissible coordinate range `[0, width] x [0, height]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundingBox {
    pub width: i64,
    pub height: i64,
}

impl BoundingBox {
    pub const DEFAULT_SIDE: i64 = 1_000_000;

    pub fn contains(&self, p: GridPoint) -> bool {
        (0..=self.width).contains(&p.x) && (0..=self.height).contains(&p.y)
    }
}

impl Default for BoundingBox {
    fn default() -> Self {
        Self {
            width: Self::DEFAULT_SIDE,
            height: Self::DEFAULT_SIDE,
        }
    }
}

/// A weighted polyline given by its breakpoints.
///
/// The first and last vertices are the endpoints; every interior vertex is a
/// bend. A single vertex denotes a path occupying one grid node.
#[derive(Debug, Clone, PartialEq)]
pub struct GridPath {
    pub id: PathId,
    pub weight: Rational,
    pub vertices: Vec<GridPoint>,
}

impl GridPath {
    pub fn new(id: PathId, weight: Rational, vertices: Vec<GridPoint>) -> Self {
        Self {
            id,
            weight,
            vertices,
        }
    }

    pub fn segment_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn bends(&self) -> usize {
        self.vertices.len().saturating_sub(2)
    }

    /// Lattice length `|dx| + |dy|` of each segment, in order.
    pub fn segment_lengths(&self) -> impl Iterator<Item = u64> + '_ {
        self.vertices
            .windows(2)
            .map(|w| w[0].x.abs_diff(w[1].x) + w[0].y.abs_diff(w[1].y))
    }

    pub fn longest_segment(&self) -> u64 {
        self.segment_lengths().max().unwrap_or(0)
    }

    /// Lattice points visited in order, starting at the first vertex.
    /// Diagonal segments are skipped.
    pub fn walk(&self) -> impl Iterator<Item = GridPoint> + '_ {
        let first = self.vertices.first().copied();
        let steps = self.vertices.windows(2).flat_map(|w| segment_steps(w[0], w[1]));
        first.into_iter().chain(steps)
    }
}

/// Points of the segment `a -> b`, excluding `a`. Empty for diagonal or
/// zero-length segments.
fn segment_steps(a: GridPoint, b: GridPoint) -> impl Iterator<Item = GridPoint> {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len = if dx != 0 && dy != 0 {
        0
    } else {
        dx.unsigned_abs() + dy.unsigned_abs()
    };
    let (sx, sy) = (dx.signum(), dy.signum());
    (1..=len as i64).map(move |i| GridPoint::new(a.x + sx * i, a.y + sy * i))
}

/// The set of grid nodes a path lies on.
pub fn grid_points(path: &GridPath) -> BTreeSet<GridPoint> {
    path.walk().collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    EmptyPath,
    DiagonalSegment,
    ZeroLengthSegment,
    CollinearBreakpoint,
    TooManyBends { found: usize, allowed: u32 },
    SelfIntersecting,
    OutOfBounds,
}

/// One failed invariant, anchored at a vertex index of the offending path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub vertex: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ViolationKind::TooManyBends { found, allowed } => {
                write!(f, "TooManyBends({found},{allowed})")?
            }
            kind => write!(f, "{kind:?}")?,
        }
        write!(f, " at vertex {}", self.vertex)
    }
}

/// Checks a path against the default bounding box.
pub fn validate_path(path: &GridPath, k: u32) -> Result<(), Vec<Violation>> {
    validate_path_in(path, k, &BoundingBox::default())
}

/// Checks every path invariant and reports all violations, not just the first.
pub fn validate_path_in(
    path: &GridPath,
    k: u32,
    bbox: &BoundingBox,
) -> Result<(), Vec<Violation>> {
    let v = &path.vertices;
    let mut out = Vec::new();
    let at = |kind, vertex| Violation { kind, vertex };

    if v.is_empty() {
        return Err(vec![at(ViolationKind::EmptyPath, 0)]);
    }

    for (i, p) in v.iter().enumerate() {
        if !bbox.contains(*p) {
            out.push(at(ViolationKind::OutOfBounds, i));
        }
    }

    // Axis of each segment: Some(true) horizontal, Some(false) vertical.
    let mut axes = Vec::with_capacity(v.len().saturating_sub(1));
    for (i, w) in v.windows(2).enumerate() {
        let (dx, dy) = (w[1].x - w[0].x, w[1].y - w[0].y);
        let axis = match (dx != 0, dy != 0) {
            (true, true) => {
                out.push(at(ViolationKind::DiagonalSegment, i));
                None
            }
            (false, false) => {
                out.push(at(ViolationKind::ZeroLengthSegment, i));
                None
            }
            (horizontal, _) => Some(horizontal),
        };
        axes.push(axis);
    }

    for (i, w) in axes.windows(2).enumerate() {
        if let (Some(a), Some(b)) = (w[0], w[1]) {
            if a == b {
                out.push(at(ViolationKind::CollinearBreakpoint, i + 1));
            }
        }
    }

    let bends = path.bends();
    if bends > k as usize {
        out.push(at(
            ViolationKind::TooManyBends {
                found: bends,
                allowed: k,
            },
            k as usize + 1,
        ));
    }

    let mut seen = HashSet::with_capacity(v.len() * 2);
    seen.insert(v[0]);
    for (i, w) in v.windows(2).enumerate() {
        if axes[i].is_none() {
            continue;
        }
        if !segment_steps(w[0], w[1]).all(|p| seen.insert(p)) {
            out.push(at(ViolationKind::SelfIntersecting, i));
        }
    }

    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum InstanceError {
    #[error("instance has no paths")]
    EmptyInstance,
    #[error("duplicate path id {0}")]
    DuplicateId(PathId),
    #[error("{} invalid path(s)", .0.len())]
    InvalidPaths(Vec<(PathId, Vec<Violation>)>),
}

/// Longest segment over all paths; 1 when every path is a single point.
pub fn derive_c(paths: &[GridPath]) -> Result<u64, InstanceError> {
    if paths.is_empty() {
        return Err(InstanceError::EmptyInstance);
    }
    Ok(paths
        .iter()
        .map(GridPath::longest_segment)
        .max()
        .unwrap_or(0)
        .max(1))
}

/// A validated set of paths with bend budget `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    k: u32,
    c: u64,
    paths: Vec<GridPath>,
    bbox: BoundingBox,
}

impl Instance {
    pub fn new(k: u32, paths: Vec<GridPath>) -> Result<Self, InstanceError> {
        Self::with_bounds(k, paths, BoundingBox::default())
    }

    pub fn with_bounds(
        k: u32,
        paths: Vec<GridPath>,
        bbox: BoundingBox,
    ) -> Result<Self, InstanceError> {
        let mut ids = HashSet::with_capacity(paths.len());
        if let Some(p) = paths.iter().find(|p| !ids.insert(p.id)) {
            return Err(InstanceError::DuplicateId(p.id));
        }
        let invalid: Vec<_> = paths
            .iter()
            .filter_map(|p| validate_path_in(p, k, &bbox).err().map(|e| (p.id, e)))
            .collect();
        if !invalid.is_empty() {
            return Err(InstanceError::InvalidPaths(invalid));
        }
        // An empty instance gets the same floor as an all-point instance.
        let c = derive_c(&paths).unwrap_or(1);
        Ok(Self { k, c, paths, bbox })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Longest segment length, at least 1.
    pub fn c(&self) -> u64 {
        self.c
    }

    /// The approximation bound `c*k + c + 1`.
    pub fn bound(&self) -> u64 {
        self.c * self.k as u64 + self.c + 1
    }

    pub fn paths(&self) -> &[GridPath] {
        &self.paths
    }

    pub fn bbox(&self) -> BoundingBox {
        self.bbox
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn weights(&self) -> Vec<Rational> {
        self.paths.iter().map(|p| p.weight.clone()).collect()
    }

    pub fn ids(&self) -> Vec<PathId> {
        self.paths.iter().map(|p| p.id).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn path(pts: &[(i64, i64)]) -> GridPath {
        GridPath::new(
            0,
            Rational::from_integer(1.into()),
            pts.iter().copied().map(GridPoint::from).collect(),
        )
    }

    fn kinds(r: Result<(), Vec<Violation>>) -> Vec<ViolationKind> {
        r.err().unwrap_or_default().into_iter().map(|v| v.kind).collect()
    }

    #[test]
    fn one_bend_path_is_valid() {
        assert_eq!(validate_path(&path(&[(0, 0), (2, 0), (2, 1)]), 1), Ok(()));
    }

    #[test]
    fn diagonal_segment() {
        let err = validate_path(&path(&[(0, 0), (1, 1)]), 1).unwrap_err();
        assert_eq!(
            err,
            vec![Violation {
                kind: ViolationKind::DiagonalSegment,
                vertex: 0
            }]
        );
        assert_eq!(err[0].to_string(), "DiagonalSegment at vertex 0");
    }

    #[test]
    fn too_many_bends() {
        let err = validate_path(&path(&[(0, 0), (0, 2), (3, 2), (3, 0)]), 1).unwrap_err();
        assert_eq!(
            err,
            vec![Violation {
                kind: ViolationKind::TooManyBends {
                    found: 2,
                    allowed: 1
                },
                vertex: 2
            }]
        );
        assert_eq!(err[0].to_string(), "TooManyBends(2,1) at vertex 2");
    }

    #[test]
    fn zero_length_and_collinear() {
        assert_eq!(
            kinds(validate_path(&path(&[(0, 0), (0, 0), (1, 0)]), 3)),
            vec![ViolationKind::ZeroLengthSegment]
        );
        assert_eq!(
            kinds(validate_path(&path(&[(0, 0), (2, 0), (5, 0)]), 3)),
            vec![ViolationKind::CollinearBreakpoint]
        );
        // Doubling back is both collinear and self-overlapping.
        assert_eq!(
            kinds(validate_path(&path(&[(0, 0), (3, 0), (1, 0)]), 3)),
            vec![
                ViolationKind::CollinearBreakpoint,
                ViolationKind::SelfIntersecting
            ]
        );
    }

    #[test]
    fn self_intersection_spiral() {
        let p = path(&[(0, 0), (3, 0), (3, 2), (1, 2), (1, -1)]);
        let bbox = BoundingBox {
            width: 10,
            height: 10,
        };
        let kinds: Vec<_> = validate_path_in(&p, 5, &bbox)
            .unwrap_err()
            .into_iter()
            .map(|v| (v.kind, v.vertex))
            .collect();
        assert_eq!(
            kinds,
            vec![
                (ViolationKind::OutOfBounds, 4),
                (ViolationKind::SelfIntersecting, 3)
            ]
        );
    }

    #[test]
    fn empty_vertex_list() {
        assert_eq!(
            kinds(validate_path(&path(&[]), 0)),
            vec![ViolationKind::EmptyPath]
        );
    }

    #[test]
    fn grid_points_examples() {
        let pts = grid_points(&path(&[(0, 0), (2, 0), (2, 1)]));
        let expect: BTreeSet<_> = [(0, 0), (1, 0), (2, 0), (2, 1)]
            .into_iter()
            .map(GridPoint::from)
            .collect();
        assert_eq!(pts, expect);

        assert_eq!(grid_points(&path(&[(3, 5)])).len(), 1);

        // k = 1, c = 2 reaches c*k + c + 1 = 5 exactly.
        let witness = path(&[(0, 0), (0, 2), (2, 2)]);
        assert_eq!(witness.bends(), 1);
        assert_eq!(witness.longest_segment(), 2);
        assert_eq!(grid_points(&witness).len(), 5);
    }

    #[test]
    fn derive_c_examples() {
        let ps = vec![
            path(&[(0, 0), (1, 0)]),
            path(&[(0, 0), (0, 2)]),
            path(&[(0, 0), (3, 0), (3, 1)]),
        ];
        assert_eq!(derive_c(&ps), Ok(3));
        assert_eq!(derive_c(&[path(&[(1, 1)]), path(&[(4, 4)])]), Ok(1));
        assert_eq!(derive_c(&[path(&[(0, 0), (5, 0)])]), Ok(5));
        assert_eq!(derive_c(&[]), Err(InstanceError::EmptyInstance));
    }

    #[test]
    fn instance_rejects_duplicates_and_reports_all_invalid() {
        let mut a = path(&[(0, 0), (1, 0)]);
        let b = a.clone();
        assert_eq!(
            Instance::new(0, vec![a.clone(), b]).unwrap_err(),
            InstanceError::DuplicateId(0)
        );
        a.vertices = vec![GridPoint::new(0, 0), GridPoint::new(1, 1)];
        let mut c = path(&[(0, 0), (1, 0), (1, 1)]);
        c.id = 1;
        match Instance::new(0, vec![a, c]).unwrap_err() {
            InstanceError::InvalidPaths(v) => {
                assert_eq!(v.len(), 2);
                assert_eq!(v[0].0, 0);
                assert_eq!(v[1].0, 1);
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn degenerate_instance_bound() {
        let inst = Instance::new(3, vec![path(&[(2, 2)])]).unwrap();
        assert_eq!(inst.c(), 1);
        assert_eq!(inst.bound(), 5);
        let empty = Instance::new(1, vec![]).unwrap();
        assert_eq!(empty.bound(), 3);
    }

    #[test]
    fn negative_weights_pass_validation() {
        let mut p = path(&[(0, 0), (1, 0)]);
        p.weight = Rational::from_integer((-4).into());
        assert!(Instance::new(0, vec![p]).is_ok());
    }

    /// Alternating-axis polyline from a start point and signed step lengths.
    fn alternating(start: (i64, i64), horizontal_first: bool, steps: &[i64]) -> GridPath {
        let mut cur = GridPoint::from(start);
        let mut verts = vec![cur];
        let mut horizontal = horizontal_first;
        for &s in steps {
            cur = if horizontal {
                GridPoint::new(cur.x + s, cur.y)
            } else {
                GridPoint::new(cur.x, cur.y + s)
            };
            verts.push(cur);
            horizontal = !horizontal;
        }
        path(&verts.iter().map(|p| (p.x, p.y)).collect::<Vec<_>>())
    }

    fn signed_len(c: i64) -> impl Strategy<Value = i64> {
        (1..=c, any::<bool>()).prop_map(|(l, neg)| if neg { -l } else { l })
    }

    proptest! {
        #[test]
        fn counting_bound_holds(
            k in 0u32..=5,
            c in 1i64..=10,
            horizontal in any::<bool>(),
            raw in prop::collection::vec(any::<(u8, bool)>(), 1..=6),
        ) {
            let steps: Vec<i64> = raw.iter().take(k as usize + 1)
                .map(|&(l, neg)| { let l = 1 + (l as i64 % c); if neg { -l } else { l } })
                .collect();
            let p = alternating((500, 500), horizontal, &steps);
            prop_assume!(validate_path(&p, k).is_ok());
            let used = p.bends() as u64;
            let seg = p.longest_segment();
            prop_assert!(seg as i64 <= c);
            prop_assert!(grid_points(&p).len() as u64 <= seg * used + seg + 1);
            prop_assert!(grid_points(&p).len() as u64 <= c as u64 * k as u64 + c as u64 + 1);
        }

        #[test]
        fn reversal_preserves_points(
            horizontal in any::<bool>(),
            steps in prop::collection::vec(signed_len(6), 0..6),
        ) {
            let p = alternating((100, 100), horizontal, &steps);
            let mut r = p.clone();
            r.vertices.reverse();
            prop_assert_eq!(grid_points(&p), grid_points(&r));
        }

        #[test]
        fn simple_iff_no_double_count(
            horizontal in any::<bool>(),
            steps in prop::collection::vec(signed_len(4), 0..8),
        ) {
            let p = alternating((100, 100), horizontal, &steps);
            let expected = 1 + p.segment_lengths().sum::<u64>() as usize;
            let simple = validate_path(&p, 16).is_ok();
            prop_assert_eq!(simple, grid_points(&p).len() == expected);
        }
    }
}
