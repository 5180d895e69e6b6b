//! Constructive piercing algorithms. Each one returns a point set together
//! with the upper bound it certifies for the input's packing number.
//!
//! - [`pierce_intervals_1d`]: greedy stabbing, optimal on the line.
//! - [`pierce_two_lines`]: sweep for planar families crossing two parallel
//!   lines, at most `⌊3ν/2⌋` points.
//! - [`pierce_planar`]: three-way split around two vertical thresholds with
//!   the crossing boxes handed to the two-line sweep.
//! - [`pierce_ddim`]: hyperplane split in `d >= 3`, recursing on both sides
//!   and on the projected crossing boxes one dimension down.

mod ddim;
mod intervals;
mod planar;
mod threshold;
mod two_lines;

use serde::{Deserialize, Serialize};

pub use ddim::{ddim_guarantee, pierce_ddim};
pub use intervals::pierce_intervals_1d;
pub use planar::pierce_planar;
pub use threshold::{find_threshold, find_threshold_hi};
pub use two_lines::pierce_two_lines;

use crate::model::{Coord, Point};

/// How recursion split sizes are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitPolicy {
    /// Parts as equal as possible.
    Balanced,
    /// Split sizes minimizing the integer recurrence.
    #[serde(rename = "dp")]
    DpOptimal,
}

impl SplitPolicy {
    pub fn name(self) -> &'static str {
        match self {
            SplitPolicy::Balanced => "balanced",
            SplitPolicy::DpOptimal => "dp",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    Empty,
    CommonPoint,
    IntervalSweep,
    /// One round of the two-line sweep.
    LineSweep,
    /// Four-way split around `a <= b`.
    ThreeWaySplit,
    /// Four-way split where the thresholds crossed and were collapsed to `a`.
    CollapsedSplit,
    HyperplaneSplit,
}

/// One recursion node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub depth: usize,
    pub dim: usize,
    pub step: StepKind,
    pub nu: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axis: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub thresholds: Vec<Coord>,
    /// Part sizes, in the order the parts are pierced.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub parts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PierceReport {
    pub points: Vec<Point>,
    /// Certified upper bound on `points.len()` for this input.
    pub guarantee: f64,
    /// Packing number of the input.
    pub nu_used: usize,
    pub trace: Vec<TraceEntry>,
}

impl PierceReport {
    fn new(mut points: Vec<Point>, guarantee: f64, nu_used: usize, trace: Vec<TraceEntry>) -> Self {
        let mut seen = std::collections::HashSet::new();
        points.retain(|p| seen.insert(p.clone()));
        Self { points, guarantee, nu_used, trace }
    }

    pub fn size(&self) -> usize {
        self.points.len()
    }

    pub fn max_depth(&self) -> usize {
        self.trace.iter().map(|t| t.depth).max().unwrap_or(0)
    }
}

/// `⌊3n/2⌋`
pub fn three_halves(n: usize) -> usize {
    3 * n / 2
}
