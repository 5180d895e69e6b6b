//! Exact-coordinate geometry: closed axis-parallel boxes, families of them,
//! and the left/middle/right partitions that every splitting step uses.
//!
//! Coordinates are `i64`. Boxes are closed, so touching boxes intersect, and
//! degenerate (zero-thickness) sides are allowed.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Coord = i64;

/// A closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[Coord; 2]", into = "[Coord; 2]")]
pub struct Interval {
    lo: Coord,
    hi: Coord,
}

impl Interval {
    pub fn new(lo: Coord, hi: Coord) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> Coord {
        self.lo
    }

    pub fn hi(&self) -> Coord {
        self.hi
    }

    pub fn contains(&self, x: Coord) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

impl TryFrom<[Coord; 2]> for Interval {
    type Error = Error;

    fn try_from([lo, hi]: [Coord; 2]) -> Result<Self> {
        Interval::new(lo, hi)
    }
}

impl From<Interval> for [Coord; 2] {
    fn from(iv: Interval) -> Self {
        [iv.lo, iv.hi]
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// A point in `Z^d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(pub Vec<Coord>);

impl Point {
    pub fn new(coords: Vec<Coord>) -> Self {
        Self(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Coord] {
        &self.0
    }
}

impl From<Vec<Coord>> for Point {
    fn from(coords: Vec<Coord>) -> Self {
        Self(coords)
    }
}

/// Closed axis-parallel box: the product of one interval per axis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Interval>", into = "Vec<Interval>")]
pub struct BoxNd {
    sides: Vec<Interval>,
}

impl BoxNd {
    pub fn new(sides: Vec<Interval>) -> Result<Self> {
        if sides.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(Self { sides })
    }

    /// Builds a box from `[lo, hi]` pairs, one per axis.
    pub fn from_bounds(bounds: &[[Coord; 2]]) -> Result<Self> {
        let sides = bounds
            .iter()
            .map(|&[lo, hi]| Interval::new(lo, hi))
            .collect::<Result<Vec<_>>>()?;
        Self::new(sides)
    }

    pub fn dim(&self) -> usize {
        self.sides.len()
    }

    pub fn sides(&self) -> &[Interval] {
        &self.sides
    }

    pub fn side(&self, axis: usize) -> Interval {
        self.sides[axis]
    }

    /// Left endpoint on `axis`.
    pub fn lo(&self, axis: usize) -> Coord {
        self.sides[axis].lo
    }

    /// Right endpoint on `axis`.
    pub fn hi(&self, axis: usize) -> Coord {
        self.sides[axis].hi
    }

    /// The box with `axis` removed.
    fn drop_axis(&self, axis: usize) -> BoxNd {
        let mut sides = self.sides.clone();
        sides.remove(axis);
        BoxNd { sides }
    }
}

impl TryFrom<Vec<Interval>> for BoxNd {
    type Error = Error;

    fn try_from(sides: Vec<Interval>) -> Result<Self> {
        BoxNd::new(sides)
    }
}

impl From<BoxNd> for Vec<Interval> {
    fn from(b: BoxNd) -> Self {
        b.sides
    }
}

/// Closed overlap test: true iff the intervals overlap on every axis.
pub fn intersects(p: &BoxNd, q: &BoxNd) -> Result<bool> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), found: q.dim() });
    }
    Ok(p.sides.iter().zip(&q.sides).all(|(a, b)| a.overlaps(b)))
}

pub fn contains(b: &BoxNd, p: &Point) -> Result<bool> {
    if b.dim() != p.dim() {
        return Err(Error::DimensionMismatch { expected: b.dim(), found: p.dim() });
    }
    Ok(b.sides.iter().zip(&p.0).all(|(iv, &x)| iv.contains(x)))
}

/// Two parallel lines `{axis = c1}` and `{axis = c2}` such that every box of
/// the family meets at least one of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoLines {
    pub axis: usize,
    pub c1: Coord,
    pub c2: Coord,
}

impl TwoLines {
    pub fn new(axis: usize, c1: Coord, c2: Coord) -> Result<Self> {
        if c1 > c2 {
            return Err(Error::LinesOutOfOrder { c1, c2 });
        }
        Ok(Self { axis, c1, c2 })
    }

    pub fn admits(&self, b: &BoxNd) -> bool {
        let side = b.side(self.axis);
        side.contains(self.c1) || side.contains(self.c2)
    }
}

/// A finite multiset of boxes of one dimension, in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxFamily {
    dim: usize,
    boxes: Vec<BoxNd>,
    lines: Option<TwoLines>,
}

impl BoxFamily {
    pub fn new(dim: usize, boxes: Vec<BoxNd>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        for (index, b) in boxes.iter().enumerate() {
            if b.dim() != dim {
                return Err(Error::InvalidBox {
                    index,
                    reason: format!("has dimension {}, family has {}", b.dim(), dim),
                });
            }
        }
        Ok(Self { dim, boxes, lines: None })
    }

    pub fn empty(dim: usize) -> Result<Self> {
        Self::new(dim, Vec::new())
    }

    /// Attaches a two-line certificate, checking it against every box.
    pub fn with_lines(mut self, lines: TwoLines) -> Result<Self> {
        if lines.axis >= self.dim {
            return Err(Error::AxisOutOfRange { axis: lines.axis, dim: self.dim });
        }
        TwoLines::new(lines.axis, lines.c1, lines.c2)?;
        if let Some(index) = self.boxes.iter().position(|b| !lines.admits(b)) {
            return Err(Error::TwoLineViolation { index, axis: lines.axis, c1: lines.c1, c2: lines.c2 });
        }
        self.lines = Some(lines);
        Ok(self)
    }

    pub fn without_lines(mut self) -> Self {
        self.lines = None;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn boxes(&self) -> &[BoxNd] {
        &self.boxes
    }

    pub fn lines(&self) -> Option<TwoLines> {
        self.lines
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn get(&self, index: usize) -> &BoxNd {
        &self.boxes[index]
    }

    /// The boxes at `indices`, in the given order, without a line certificate.
    pub fn subfamily(&self, indices: &[usize]) -> BoxFamily {
        BoxFamily {
            dim: self.dim,
            boxes: indices.iter().map(|&i| self.boxes[i].clone()).collect(),
            lines: None,
        }
    }

    /// Boxes satisfying `keep`, input order preserved, certificate dropped.
    pub fn filter(&self, mut keep: impl FnMut(&BoxNd) -> bool) -> BoxFamily {
        BoxFamily {
            dim: self.dim,
            boxes: self.boxes.iter().filter(|b| keep(b)).cloned().collect(),
            lines: None,
        }
    }

    /// Whether the closed boxes `i` and `j` intersect.
    pub fn pair_intersects(&self, i: usize, j: usize) -> bool {
        let (p, q) = (&self.boxes[i], &self.boxes[j]);
        p.sides.iter().zip(&q.sides).all(|(a, b)| a.overlaps(b))
    }

    /// Indices of boxes containing none of `points`.
    pub fn unhit(&self, points: &[Point]) -> Result<Vec<usize>> {
        for p in points {
            if p.dim() != self.dim {
                return Err(Error::DimensionMismatch { expected: self.dim, found: p.dim() });
            }
        }
        Ok(self
            .boxes
            .iter()
            .enumerate()
            .filter(|(_, b)| !points.iter().any(|p| b.sides.iter().zip(&p.0).all(|(iv, &x)| iv.contains(x))))
            .map(|(i, _)| i)
            .collect())
    }

    fn check_axis(&self, axis: usize) -> Result<()> {
        if axis >= self.dim {
            return Err(Error::AxisOutOfRange { axis, dim: self.dim });
        }
        Ok(())
    }
}

/// Result of [`split_four`]. The four parts partition the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourWaySplit {
    /// `r < a`
    pub minus: BoxFamily,
    /// `l > a` and `r < b`
    pub plusminus: BoxFamily,
    /// `l > b`
    pub plus: BoxFamily,
    /// Everything else; each of these contains `a` or `b` on the split axis.
    pub zero: BoxFamily,
    pub a: Coord,
    pub b: Coord,
}

/// Partitions `f` around the hyperplane `{axis = x}` into boxes strictly to
/// the left (`r < x`), boxes meeting it, and boxes strictly to the right
/// (`l > x`). Returned as `(minus, zero, plus)`.
pub fn split_three(f: &BoxFamily, axis: usize, x: Coord) -> Result<(BoxFamily, BoxFamily, BoxFamily)> {
    f.check_axis(axis)?;
    let mut minus = Vec::new();
    let mut zero = Vec::new();
    let mut plus = Vec::new();
    for b in &f.boxes {
        if b.hi(axis) < x {
            minus.push(b.clone());
        } else if b.lo(axis) > x {
            plus.push(b.clone());
        } else {
            zero.push(b.clone());
        }
    }
    let part = |boxes| BoxFamily { dim: f.dim, boxes, lines: None };
    Ok((part(minus), part(zero), part(plus)))
}

/// Four-way partition around two thresholds `a <= b` on `axis`.
///
/// Rules are applied in order: `r < a` goes left, `l > b` goes right,
/// `l > a && r < b` goes to the middle band, and the rest is the crossing part.
pub fn split_four(f: &BoxFamily, axis: usize, a: Coord, b: Coord) -> Result<FourWaySplit> {
    f.check_axis(axis)?;
    if a > b {
        return Err(Error::ThresholdOrder { a, b });
    }
    let mut parts: [Vec<BoxNd>; 4] = Default::default();
    for bx in &f.boxes {
        let (l, r) = (bx.lo(axis), bx.hi(axis));
        let slot = if r < a {
            0
        } else if l > b {
            2
        } else if l > a && r < b {
            1
        } else {
            3
        };
        parts[slot].push(bx.clone());
    }
    let [minus, plusminus, plus, zero] = parts.map(|boxes| BoxFamily { dim: f.dim, boxes, lines: None });
    Ok(FourWaySplit { minus, plusminus, plus, zero, a, b })
}

/// Restricts a family whose every box meets `{axis = x}` to that hyperplane,
/// dropping `axis`. Box order and count are preserved.
pub fn project_onto_hyperplane(f: &BoxFamily, axis: usize, x: Coord) -> Result<BoxFamily> {
    f.check_axis(axis)?;
    if f.dim == 1 {
        return Err(Error::ProjectFromLine);
    }
    let mut boxes = Vec::with_capacity(f.len());
    for (index, b) in f.boxes.iter().enumerate() {
        if !b.side(axis).contains(x) {
            return Err(Error::MissesHyperplane { index, axis, x });
        }
        boxes.push(b.drop_axis(axis));
    }
    Ok(BoxFamily { dim: f.dim - 1, boxes, lines: None })
}

/// Re-embeds points of a projected family by inserting coordinate `x` at `axis`.
pub fn lift_points(points: Vec<Point>, axis: usize, x: Coord) -> Vec<Point> {
    points
        .into_iter()
        .map(|Point(mut coords)| {
            coords.insert(axis, x);
            Point(coords)
        })
        .collect()
}
