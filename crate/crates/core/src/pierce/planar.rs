use super::threshold::{find_threshold, find_threshold_hi};
use super::two_lines::sweep;
use super::{PierceReport, SplitPolicy, StepKind, TraceEntry};
use crate::bounds::{h, Prop3Table};
use crate::error::{Error, Result};
use crate::model::{split_four, BoxFamily, Point, TwoLines};
use crate::oracles::{common_point, nu_exact, OracleConfig};

const X: usize = 0;

/// Planar piercing by recursive three-way split.
///
/// With `ν = n >= 2` and `k + l + m = n - 2`, thresholds `a` and `b` on the
/// x-axis cut the family into a left part (packing `<= k`), a middle band
/// (`<= l`), a right part (`<= m`), and boxes crossing `x = a` or `x = b`,
/// which form a two-line family. The guarantee is `h(ν)` for the balanced
/// policy and the three-way recurrence value for the DP policy.
pub fn pierce_planar(f: &BoxFamily, policy: SplitPolicy, cfg: &OracleConfig) -> Result<PierceReport> {
    if f.dim() != 2 {
        return Err(Error::Precondition(format!("planar piercing needs d = 2, got d = {}", f.dim())));
    }
    let nu = nu_exact(f, cfg)?.nu;
    let mut planar = Planar::new(policy, cfg, nu);
    let points = planar.run(f, 0)?;
    Ok(PierceReport::new(points, planar_guarantee(policy, nu, &planar.table)?, nu, planar.trace))
}

pub(super) fn planar_guarantee(policy: SplitPolicy, nu: usize, table: &Prop3Table) -> Result<f64> {
    Ok(match (policy, nu) {
        (_, 0) => 0.0,
        (SplitPolicy::Balanced, n) => h(n as u64)?,
        (SplitPolicy::DpOptimal, n) => table.get(n) as f64,
    })
}

/// `(k, l, m)` summing to `n - 2`, largest first, each at most `⌈(n-2)/3⌉`.
fn balanced_triple(n: usize) -> (usize, usize, usize) {
    let s = n - 2;
    let (q, r) = (s / 3, s % 3);
    (q + usize::from(r > 0), q + usize::from(r > 1), q)
}

pub(super) struct Planar<'a> {
    policy: SplitPolicy,
    cfg: &'a OracleConfig,
    pub(super) table: Prop3Table,
    pub(super) trace: Vec<TraceEntry>,
}

impl<'a> Planar<'a> {
    pub(super) fn new(policy: SplitPolicy, cfg: &'a OracleConfig, max_nu: usize) -> Self {
        Self { policy, cfg, table: Prop3Table::up_to(max_nu.max(2)), trace: Vec::new() }
    }

    pub(super) fn run(&mut self, f: &BoxFamily, depth: usize) -> Result<Vec<Point>> {
        let n = nu_exact(f, self.cfg)?.nu;
        if n <= 1 {
            let step = if n == 0 { StepKind::Empty } else { StepKind::CommonPoint };
            self.trace.push(TraceEntry { depth, dim: 2, step, nu: n, axis: None, thresholds: Vec::new(), parts: Vec::new() });
            return Ok(if n == 0 { Vec::new() } else { vec![common_point(f)?] });
        }
        let (k, _l, m) = match self.policy {
            SplitPolicy::Balanced => balanced_triple(n),
            SplitPolicy::DpOptimal => self.table.best_split(n),
        };
        let a = find_threshold(f, X, k, self.cfg)?;
        let b = find_threshold_hi(f, X, m, self.cfg)?;
        // With a > b the crossing boxes all span [b, a]; splitting at a alone
        // still leaves packing <= k on the left and <= m on the right.
        let (step, b) = if a <= b { (StepKind::ThreeWaySplit, b) } else { (StepKind::CollapsedSplit, a) };
        let split = split_four(f, X, a, b)?;
        self.trace.push(TraceEntry {
            depth,
            dim: 2,
            step,
            nu: n,
            axis: Some(X),
            thresholds: vec![a, b],
            parts: vec![split.minus.len(), split.plusminus.len(), split.plus.len(), split.zero.len()],
        });

        let mut points = self.run(&split.minus, depth + 1)?;
        points.extend(self.run(&split.plusminus, depth + 1)?);
        points.extend(self.run(&split.plus, depth + 1)?);
        let lines = TwoLines::new(X, a, b)?;
        points.extend(sweep(&split.zero, lines, self.cfg, depth + 1, &mut self.trace)?);
        Ok(points)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::bound_prop3;
    use crate::generators::gen_gadget;
    use crate::model::BoxNd;

    fn fam(boxes: &[[[i64; 2]; 2]]) -> BoxFamily {
        BoxFamily::new(2, boxes.iter().map(|b| BoxNd::from_bounds(b).unwrap()).collect()).unwrap()
    }

    #[test]
    fn balanced_triples() {
        assert_eq!(balanced_triple(2), (0, 0, 0));
        assert_eq!(balanced_triple(5), (1, 1, 1));
        assert_eq!(balanced_triple(6), (2, 1, 1));
        assert_eq!(balanced_triple(7), (2, 2, 1));
    }

    #[test]
    fn pairwise_intersecting_is_one_point() {
        let f = fam(&[[[0, 5], [0, 5]], [[2, 8], [1, 3]], [[4, 9], [3, 9]]]);
        for policy in [SplitPolicy::Balanced, SplitPolicy::DpOptimal] {
            let r = pierce_planar(&f, policy, &OracleConfig::default()).unwrap();
            assert_eq!(r.size(), 1);
        }
    }

    #[test]
    fn three_disjoint_boxes() {
        let f = fam(&[[[0, 1], [0, 1]], [[3, 4], [0, 1]], [[6, 7], [0, 1]]]);
        let r = pierce_planar(&f, SplitPolicy::Balanced, &OracleConfig::default()).unwrap();
        assert!(f.unhit(&r.points).unwrap().is_empty());
        assert!((r.guarantee - 7.5).abs() < 1e-9);
        assert!(r.size() <= 7);
    }

    #[test]
    fn gadget_plus_far_box() {
        let mut boxes = gen_gadget().boxes().to_vec();
        boxes.push(BoxNd::from_bounds(&[[100, 101], [100, 101]]).unwrap());
        let f = BoxFamily::new(2, boxes).unwrap();
        let r = pierce_planar(&f, SplitPolicy::DpOptimal, &OracleConfig::default()).unwrap();
        assert_eq!(r.nu_used, 3);
        assert_eq!(r.guarantee, bound_prop3(3) as f64);
        assert_eq!(r.guarantee, 5.0);
        assert!(f.unhit(&r.points).unwrap().is_empty());
        assert!(r.size() <= 5);
    }

    #[test]
    fn stacked_boxes_cross_thresholds() {
        // Same x-range, disjoint in y: the thresholds come out as a = 1 > b = 0.
        let f = fam(&[[[0, 1], [0, 1]], [[0, 1], [2, 3]]]);
        let r = pierce_planar(&f, SplitPolicy::Balanced, &OracleConfig::default()).unwrap();
        assert_eq!(r.trace[0].step, StepKind::CollapsedSplit);
        assert_eq!(r.size(), 2);
        assert!(f.unhit(&r.points).unwrap().is_empty());
    }

    #[test]
    fn rejects_other_dimensions() {
        let f = BoxFamily::new(3, vec![BoxNd::from_bounds(&[[0, 1], [0, 1], [0, 1]]).unwrap()]).unwrap();
        assert!(matches!(
            pierce_planar(&f, SplitPolicy::Balanced, &OracleConfig::default()),
            Err(Error::Precondition(_))
        ));
    }
}
