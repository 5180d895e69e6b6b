use super::intervals::stab;
use super::planar::{planar_guarantee, Planar};
use super::threshold::find_threshold;
use super::{PierceReport, SplitPolicy, StepKind, TraceEntry};
use crate::bounds::{bound_lemma1, LowerColumn, Prop1Table, Prop3Table};
use crate::error::{Error, Result};
use crate::model::{lift_points, project_onto_hyperplane, split_three, BoxFamily, Point};
use crate::oracles::{common_point, nu_exact, OracleConfig};

/// Split axis for the same-dimension recursion, and the axis dropped when
/// projecting the crossing boxes.
const AXIS: usize = 0;

/// Piercing in any dimension.
///
/// `d = 1` and `d = 2` dispatch to the interval sweep and the planar
/// algorithm. For `d >= 3` the family is cut at the first threshold on axis 0
/// where the left prefix packs `k + 1` boxes; both sides recurse in the same
/// dimension and the boxes crossing the hyperplane recurse one dimension
/// down. Planar subproblems reached from `d >= 3` always use the DP policy,
/// since the `d = 3` guarantees are built on the three-way table.
pub fn pierce_ddim(f: &BoxFamily, policy: SplitPolicy, cfg: &OracleConfig) -> Result<PierceReport> {
    match f.dim() {
        1 => {
            cfg.admit(f)?;
            super::pierce_intervals_1d(f)
        }
        2 => super::pierce_planar(f, policy, cfg),
        d => {
            let nu = nu_exact(f, cfg)?.nu;
            let mut rec = Recursion {
                policy,
                cfg,
                prop1: Prop1Table::build(nu.max(2), d, LowerColumn::Constructive),
                trace: Vec::new(),
            };
            let points = rec.run(f, 0)?;
            let guarantee = match (policy, nu) {
                (_, 0) => 0.0,
                (SplitPolicy::Balanced, n) => bound_lemma1(n as u64, d)?,
                (SplitPolicy::DpOptimal, n) => rec.prop1.get(n, d) as f64,
            };
            Ok(PierceReport::new(points, guarantee, nu, rec.trace))
        }
    }
}

struct Recursion<'a> {
    policy: SplitPolicy,
    cfg: &'a OracleConfig,
    prop1: Prop1Table,
    trace: Vec<TraceEntry>,
}

impl Recursion<'_> {
    fn run(&mut self, f: &BoxFamily, depth: usize) -> Result<Vec<Point>> {
        let d = f.dim();
        match d {
            0 => unreachable!("families have positive dimension"),
            1 => {
                let points = stab(f)?;
                self.trace.push(TraceEntry {
                    depth,
                    dim: 1,
                    step: StepKind::IntervalSweep,
                    nu: points.len(),
                    axis: Some(0),
                    thresholds: Vec::new(),
                    parts: vec![f.len()],
                });
                return Ok(points);
            }
            2 => {
                let mut planar = Planar::new(SplitPolicy::DpOptimal, self.cfg, f.len());
                let points = planar.run(f, depth)?;
                self.trace.append(&mut planar.trace);
                return Ok(points);
            }
            _ => {}
        }

        let n = nu_exact(f, self.cfg)?.nu;
        if n <= 1 {
            let step = if n == 0 { StepKind::Empty } else { StepKind::CommonPoint };
            self.trace.push(TraceEntry { depth, dim: d, step, nu: n, axis: None, thresholds: Vec::new(), parts: Vec::new() });
            return Ok(if n == 0 { Vec::new() } else { vec![common_point(f)?] });
        }
        let k = match self.policy {
            SplitPolicy::Balanced => (n - 1) / 2,
            SplitPolicy::DpOptimal => self.prop1.best_split(n, d),
        };
        let a = find_threshold(f, AXIS, k, self.cfg)?;
        let (minus, zero, plus) = split_three(f, AXIS, a)?;
        self.trace.push(TraceEntry {
            depth,
            dim: d,
            step: StepKind::HyperplaneSplit,
            nu: n,
            axis: Some(AXIS),
            thresholds: vec![a],
            parts: vec![minus.len(), zero.len(), plus.len()],
        });

        let mut points = self.run(&minus, depth + 1)?;
        let projected = project_onto_hyperplane(&zero, AXIS, a)?;
        points.extend(lift_points(self.run(&projected, depth + 1)?, AXIS, a));
        points.extend(self.run(&plus, depth + 1)?);
        Ok(points)
    }
}

/// Guarantee `pierce_ddim` certifies for packing number `nu` in dimension `d`.
pub fn ddim_guarantee(policy: SplitPolicy, nu: usize, d: usize) -> Result<f64> {
    if nu == 0 {
        return Ok(0.0);
    }
    match d {
        0 => Err(Error::ZeroDimension),
        1 => Ok(nu as f64),
        2 => planar_guarantee(policy, nu, &Prop3Table::up_to(nu.max(2))),
        _ => match policy {
            SplitPolicy::Balanced => bound_lemma1(nu as u64, d),
            SplitPolicy::DpOptimal => Ok(Prop1Table::build(nu, d, LowerColumn::Constructive).get(nu, d) as f64),
        },
    }
}
