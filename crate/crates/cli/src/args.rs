//! Parsers for list- and range-valued flags.

use std::str::FromStr;

/// Comma-separated list; items may be inclusive ranges `a..b`. An empty
/// string is an empty list.
pub fn parse_list<T>(s: &str) -> Result<Vec<T>, String>
where
    T: FromStr + Copy + PartialOrd + num_step::Step,
{
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match item.split_once("..") {
            Some((a, b)) => {
                let a: T = a.trim().parse().map_err(|_| format!("bad range start in `{item}`"))?;
                let b: T = b.trim().parse().map_err(|_| format!("bad range end in `{item}`"))?;
                if a > b {
                    return Err(format!("empty range `{item}`"));
                }
                let mut v = a;
                loop {
                    out.push(v);
                    if v >= b {
                        break;
                    }
                    v = v.next();
                }
            }
            None => out.push(item.parse().map_err(|_| format!("bad value `{item}`"))?),
        }
    }
    Ok(out)
}

pub mod num_step {
    /// Successor for integer range expansion.
    pub trait Step {
        fn next(self) -> Self;
    }

    macro_rules! step {
        ($($t:ty),*) => {$(impl Step for $t { fn next(self) -> Self { self + 1 } })*};
    }
    step!(u32, u64, usize, i64);
}

/// `lo:hi` inclusive integer range.
pub fn parse_weight_range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected lo:hi, got `{s}`"))?;
    let lo = lo.trim().parse().map_err(|_| format!("bad lower weight `{lo}`"))?;
    let hi = hi.trim().parse().map_err(|_| format!("bad upper weight `{hi}`"))?;
    if lo > hi {
        return Err(format!("empty weight range `{s}`"));
    }
    Ok((lo, hi))
}

/// `W` (square) or `WxH`.
pub fn parse_grid(s: &str) -> Result<(i64, i64), String> {
    let bad = || format!("expected W or WxH, got `{s}`");
    match s.split_once(['x', 'X']) {
        Some((w, h)) => Ok((w.trim().parse().map_err(|_| bad())?, h.trim().parse().map_err(|_| bad())?)),
        None => {
            let w = s.trim().parse().map_err(|_| bad())?;
            Ok((w, w))
        }
    }
}
