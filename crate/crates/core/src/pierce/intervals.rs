use super::{PierceReport, StepKind, TraceEntry};
use crate::error::{Error, Result};
use crate::model::{BoxFamily, Point};

/// Greedy stabbing on the line: sort by right endpoint and stab the first
/// right endpoint not yet covered. The stabbed intervals are pairwise
/// disjoint, so the output size equals the packing number.
pub fn pierce_intervals_1d(f: &BoxFamily) -> Result<PierceReport> {
    let points = stab(f)?;
    let nu = points.len();
    let trace = vec![TraceEntry {
        depth: 0,
        dim: 1,
        step: StepKind::IntervalSweep,
        nu,
        axis: Some(0),
        thresholds: Vec::new(),
        parts: vec![f.len()],
    }];
    Ok(PierceReport::new(points, nu as f64, nu, trace))
}

pub(super) fn stab(f: &BoxFamily) -> Result<Vec<Point>> {
    if f.dim() != 1 {
        return Err(Error::Precondition(format!("interval stabbing needs d = 1, got d = {}", f.dim())));
    }
    let mut ivs: Vec<_> = f.boxes().iter().map(|b| b.side(0)).collect();
    ivs.sort_by_key(|iv| (iv.hi(), iv.lo()));
    let mut points = Vec::new();
    let mut last = None;
    for iv in ivs {
        if last.is_some_and(|x| iv.contains(x)) {
            continue;
        }
        last = Some(iv.hi());
        points.push(Point::new(vec![iv.hi()]));
    }
    Ok(points)
}
