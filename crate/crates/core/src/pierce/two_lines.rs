use super::threshold::find_threshold;
use super::{three_halves, PierceReport, StepKind, TraceEntry};
use crate::error::{Error, Result};
use crate::model::{split_three, BoxFamily, Point, TwoLines};
use crate::oracles::{common_point, nu_exact, OracleConfig};

/// Pierces a planar family in which every box meets one of two parallel
/// lines, using at most `⌊3ν/2⌋` points.
///
/// Each round sweeps to the first threshold `a` where the boxes ending at or
/// before `a` pack two disjoint members. Boxes ending before `a` pairwise
/// intersect and share one point; boxes crossing `x = a` contain one of the
/// two crossing points with the lines; boxes starting after `a` pack two
/// fewer and go to the next round.
pub fn pierce_two_lines(f: &BoxFamily, cfg: &OracleConfig) -> Result<PierceReport> {
    let lines = f.lines().ok_or(Error::MissingLines)?;
    if f.dim() != 2 {
        return Err(Error::Precondition(format!("two-line sweep needs d = 2, got d = {}", f.dim())));
    }
    let nu = nu_exact(f, cfg)?.nu;
    let mut trace = Vec::new();
    let points = sweep(f, lines, cfg, 0, &mut trace)?;
    Ok(PierceReport::new(points, three_halves(nu) as f64, nu, trace))
}

pub(super) fn sweep(
    f: &BoxFamily,
    lines: TwoLines,
    cfg: &OracleConfig,
    depth: usize,
    trace: &mut Vec<TraceEntry>,
) -> Result<Vec<Point>> {
    if let Some(index) = f.boxes().iter().position(|b| !lines.admits(b)) {
        return Err(Error::TwoLineViolation { index, axis: lines.axis, c1: lines.c1, c2: lines.c2 });
    }
    let axis = 1 - lines.axis;
    let mut points = Vec::new();
    let mut remaining = f.clone().without_lines();
    for round in 0.. {
        let nu = nu_exact(&remaining, cfg)?.nu;
        if nu <= 1 {
            let step = if nu == 0 { StepKind::Empty } else { StepKind::CommonPoint };
            trace.push(TraceEntry { depth: depth + round, dim: 2, step, nu, axis: None, thresholds: Vec::new(), parts: Vec::new() });
            if nu == 1 {
                points.push(common_point(&remaining)?);
            }
            break;
        }
        let a = find_threshold(&remaining, axis, 1, cfg)?;
        let (minus, zero, plus) = split_three(&remaining, axis, a)?;
        trace.push(TraceEntry {
            depth: depth + round,
            dim: 2,
            step: StepKind::LineSweep,
            nu,
            axis: Some(axis),
            thresholds: vec![a],
            parts: vec![minus.len(), zero.len(), plus.len()],
        });
        if !minus.is_empty() {
            points.push(common_point(&minus)?);
        }
        let mut crossings = vec![lines.c1];
        if lines.c2 != lines.c1 {
            crossings.push(lines.c2);
        }
        for c in crossings {
            let mut coords = vec![0; 2];
            coords[axis] = a;
            coords[lines.axis] = c;
            let p = Point::new(coords);
            if zero.unhit(std::slice::from_ref(&p))?.len() < zero.len() {
                points.push(p);
            }
        }
        remaining = plus;
    }
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_extremal_two_line, gen_gadget};
    use crate::model::BoxNd;

    #[test]
    fn single_box() {
        let f = BoxFamily::new(2, vec![BoxNd::from_bounds(&[[0, 3], [1, 4]]).unwrap()])
            .unwrap()
            .with_lines(TwoLines { axis: 1, c1: 2, c2: 9 })
            .unwrap();
        let r = pierce_two_lines(&f, &OracleConfig::default()).unwrap();
        assert_eq!(r.size(), 1);
        assert_eq!(r.guarantee, 1.0);
    }

    #[test]
    fn gadget_takes_three() {
        let g = gen_gadget();
        let r = pierce_two_lines(&g, &OracleConfig::default()).unwrap();
        assert_eq!(r.size(), 3);
        assert_eq!(r.guarantee, 3.0);
        assert!(g.unhit(&r.points).unwrap().is_empty());
    }

    #[test]
    fn extremal_copies() {
        let cfg = OracleConfig::default();
        for n in 1..=6 {
            let f = gen_extremal_two_line(n).unwrap();
            let r = pierce_two_lines(&f, &cfg).unwrap();
            assert!(f.unhit(&r.points).unwrap().is_empty());
            assert!(r.size() <= three_halves(n), "n = {n}");
        }
    }

    #[test]
    fn vertical_lines() {
        // Same gadget with the axes swapped.
        let g = gen_gadget();
        let boxes = g.boxes().iter().map(|b| BoxNd::new(vec![b.side(1), b.side(0)]).unwrap()).collect();
        let f = BoxFamily::new(2, boxes).unwrap().with_lines(TwoLines { axis: 0, c1: 0, c2: 2 }).unwrap();
        let r = pierce_two_lines(&f, &OracleConfig::default()).unwrap();
        assert!(f.unhit(&r.points).unwrap().is_empty());
        assert!(r.size() <= 3);
    }

    #[test]
    fn requires_certificate() {
        let f = gen_gadget().without_lines();
        assert_eq!(pierce_two_lines(&f, &OracleConfig::default()), Err(Error::MissingLines));
    }
}
