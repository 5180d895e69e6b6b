//! Discrete sweep thresholds.
//!
//! The packing number of `{B : r_B <= x}` is a step function of `x` that only
//! changes at right endpoints, so the supremum of `{x : ν(B^-(x)) <= k}` is
//! attained at the first right endpoint where the prefix packs `k + 1` boxes.

use crate::error::{Error, Result};
use crate::model::{BoxFamily, Coord};
use crate::oracles::{nu_exact, OracleConfig};

/// Smallest right endpoint `a` on `axis` with `ν({B : r_B <= a}) >= k + 1`.
///
/// Then `{r < a}` packs at most `k` boxes and `{l > a}` packs at most
/// `ν(f) - k - 1`.
pub fn find_threshold(f: &BoxFamily, axis: usize, k: usize, cfg: &OracleConfig) -> Result<Coord> {
    let mut ends: Vec<Coord> = f.boxes().iter().map(|b| b.hi(axis)).collect();
    ends.sort_unstable();
    ends.dedup();
    search(f, axis, k, cfg, &ends, |b, x| b.hi(axis) <= x)
}

/// Largest left endpoint `b` on `axis` with `ν({B : l_B >= b}) >= m + 1`.
pub fn find_threshold_hi(f: &BoxFamily, axis: usize, m: usize, cfg: &OracleConfig) -> Result<Coord> {
    let mut ends: Vec<Coord> = f.boxes().iter().map(|b| b.lo(axis)).collect();
    ends.sort_unstable_by(|a, b| b.cmp(a));
    ends.dedup();
    search(f, axis, m, cfg, &ends, |b, x| b.lo(axis) >= x)
}

/// Binary search over `candidates` for the first `x` whose prefix
/// `{B : in_prefix(B, x)}` packs `k + 1` boxes. Prefixes grow along
/// `candidates`.
fn search(
    f: &BoxFamily,
    axis: usize,
    k: usize,
    cfg: &OracleConfig,
    candidates: &[Coord],
    in_prefix: impl Fn(&crate::model::BoxNd, Coord) -> bool,
) -> Result<Coord> {
    if axis >= f.dim() {
        return Err(Error::AxisOutOfRange { axis, dim: f.dim() });
    }
    cfg.admit(f)?;
    let packs = |x: Coord| -> Result<bool> {
        let prefix = f.filter(|b| in_prefix(b, x));
        Ok(nu_exact(&prefix, cfg)?.nu > k)
    };
    let Some(&last) = candidates.last() else {
        return Err(Error::NoThreshold { needed: k + 1, nu: 0 });
    };
    if !packs(last)? {
        return Err(Error::NoThreshold { needed: k + 1, nu: nu_exact(f, cfg)?.nu });
    }
    let (mut lo, mut hi) = (0usize, candidates.len() - 1);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if packs(candidates[mid])? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(candidates[lo])
}
