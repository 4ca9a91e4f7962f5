//! Seeded random instances.
//!
//! The stream comes from Marsaglia's xorshift128 generator (`rand_xorshift`),
//! seeded with `seed_from_u64`, and all draws happen in a fixed order, so a
//! seed pins the output exactly.

use std::collections::HashSet;

use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_xorshift::XorShiftRng;

use crate::geometry::{BoundingBox, GridPath, GridPoint, Instance, PathId};
use crate::number::Rational;

/// Placement attempts per bend count before the path is shortened.
pub const MAX_RETRIES: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenParams {
    pub n: usize,
    pub k: u32,
    pub c: u64,
    pub grid_w: i64,
    pub grid_h: i64,
    pub weight_min: i64,
    pub weight_max: i64,
    pub seed: u64,
}

impl Default for GenParams {
    fn default() -> Self {
        Self {
            n: 20,
            k: 1,
            c: 2,
            grid_w: 20,
            grid_h: 20,
            weight_min: 1,
            weight_max: 100,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
    #[error("could not place path {0} inside the grid")]
    GenerationFailed(PathId),
}

impl GenParams {
    pub fn validate(&self) -> Result<(), GenError> {
        let bad = |m: String| Err(GenError::InvalidParams(m));
        let span = self.c.saturating_mul(self.k as u64 + 1);
        if self.n == 0 {
            return bad("n must be at least 1".into());
        }
        if self.c == 0 {
            return bad("c must be at least 1".into());
        }
        if self.grid_w < 0 || self.grid_h < 0 || (self.grid_w.min(self.grid_h) as u64) < span {
            return bad(format!(
                "grid {}x{} is smaller than c*(k+1) = {span}",
                self.grid_w, self.grid_h
            ));
        }
        if self.grid_w.max(self.grid_h) > BoundingBox::DEFAULT_SIDE {
            return bad(format!("grid side exceeds {}", BoundingBox::DEFAULT_SIDE));
        }
        if self.weight_min > self.weight_max {
            return bad(format!(
                "empty weight range {}:{}",
                self.weight_min, self.weight_max
            ));
        }
        Ok(())
    }
}

pub fn generate(params: &GenParams) -> Result<Instance, GenError> {
    params.validate()?;
    let mut rng = XorShiftRng::seed_from_u64(params.seed);
    let paths = (0..params.n as PathId)
        .map(|id| {
            let vertices = place_path(&mut rng, params).ok_or(GenError::GenerationFailed(id))?;
            let w = rng.random_range(params.weight_min..=params.weight_max);
            Ok(GridPath::new(id, Rational::from_integer(BigInt::from(w)), vertices))
        })
        .collect::<Result<Vec<_>, GenError>>()?;
    Ok(Instance::new(params.k, paths).expect("generated paths are valid"))
}

fn place_path(rng: &mut XorShiftRng, params: &GenParams) -> Option<Vec<GridPoint>> {
    let mut bends = rng.random_range(0..=params.k);
    loop {
        for _ in 0..MAX_RETRIES {
            if let Some(v) = try_path(rng, params, bends) {
                return Some(v);
            }
        }
        bends = bends.checked_sub(1)?;
    }
}

fn try_path(rng: &mut XorShiftRng, params: &GenParams, bends: u32) -> Option<Vec<GridPoint>> {
    let bbox = BoundingBox {
        width: params.grid_w,
        height: params.grid_h,
    };
    let mut cur = GridPoint::new(
        rng.random_range(0..=params.grid_w),
        rng.random_range(0..=params.grid_h),
    );
    let mut horizontal = rng.random_bool(0.5);
    let mut vertices = vec![cur];
    let mut seen = HashSet::from([cur]);
    for _ in 0..=bends {
        let len = rng.random_range(1..=params.c) as i64;
        let sign = if rng.random_bool(0.5) { 1 } else { -1 };
        let (dx, dy) = if horizontal { (sign, 0) } else { (0, sign) };
        for _ in 0..len {
            cur = GridPoint::new(cur.x + dx, cur.y + dy);
            if !bbox.contains(cur) || !seen.insert(cur) {
                return None;
            }
        }
        vertices.push(cur);
        horizontal = !horizontal;
    }
    Some(vertices)
}
