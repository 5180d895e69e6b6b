//! Instance generators: the five-box sharpness gadget, its disjoint-copy
//! scaling, and seeded random families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{BoxFamily, BoxNd, Coord, Interval, TwoLines};

/// Identity of the random generator; stored in instance metadata.
pub const GENERATOR_TAG: &str = "chacha8-v1";

/// Horizontal offset between consecutive gadget copies. The gadget spans
/// `x ∈ [0, 7]`.
pub const COPY_SPACING: Coord = 10;

const GADGET: [[[Coord; 2]; 2]; 5] = [
    [[0, 7], [0, 1]],
    [[0, 1], [0, 5]],
    [[0, 4], [2, 5]],
    [[3, 6], [2, 5]],
    [[6, 7], [0, 5]],
];

fn gadget_lines() -> TwoLines {
    TwoLines { axis: 1, c1: 0, c2: 2 }
}

fn translated(bounds: &[[Coord; 2]; 2], dx: Coord) -> BoxNd {
    BoxNd::from_bounds(&[[bounds[0][0] + dx, bounds[0][1] + dx], bounds[1]]).expect("valid gadget box")
}

/// Five planar boxes whose intersection graph is a 5-cycle, each meeting
/// `y = 0` or `y = 2`. Packing number 2, piercing number 3.
pub fn gen_gadget() -> BoxFamily {
    BoxFamily::new(2, GADGET.iter().map(|b| translated(b, 0)).collect())
        .and_then(|f| f.with_lines(gadget_lines()))
        .expect("gadget satisfies the two-line condition")
}

/// Two-line family with packing number `n` and piercing number `⌊3n/2⌋`:
/// `⌊n/2⌋` disjoint gadget copies, plus one small box when `n` is odd.
pub fn gen_extremal_two_line(n: usize) -> Result<BoxFamily> {
    if n < 1 {
        return Err(Error::InvalidSpec("extremal family needs n >= 1".into()));
    }
    let copies = n / 2;
    let mut boxes = Vec::with_capacity(5 * copies + 1);
    for c in 0..copies {
        let dx = COPY_SPACING * c as Coord;
        boxes.extend(GADGET.iter().map(|b| translated(b, dx)));
    }
    if n % 2 == 1 {
        let x = COPY_SPACING * copies as Coord;
        boxes.push(BoxNd::from_bounds(&[[x, x + 1], [0, 1]])?);
    }
    BoxFamily::new(2, boxes)?.with_lines(gadget_lines())
}

/// Parameters for a seeded random family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomSpec {
    pub n_boxes: usize,
    pub dim: usize,
    /// Inclusive coordinate range for every endpoint.
    pub coord_range: (Coord, Coord),
    pub seed: u64,
    /// Stream index for deriving independent instances from one seed.
    pub stream: u64,
    /// When set, each box is stretched on `lines.axis` to contain a
    /// uniformly chosen one of the two lines.
    pub two_lines: Option<TwoLines>,
}

impl RandomSpec {
    pub fn new(n_boxes: usize, dim: usize, coord_range: (Coord, Coord), seed: u64) -> Self {
        Self { n_boxes, dim, coord_range, seed, stream: 0, two_lines: None }
    }

    pub fn stream(mut self, stream: u64) -> Self {
        self.stream = stream;
        self
    }

    pub fn two_lines(mut self, lines: TwoLines) -> Self {
        self.two_lines = Some(lines);
        self
    }

    fn validate(&self) -> Result<()> {
        if self.dim < 1 {
            return Err(Error::InvalidSpec("dim must be at least 1".into()));
        }
        if self.coord_range.0 > self.coord_range.1 {
            return Err(Error::InvalidSpec(format!(
                "empty coordinate range [{}, {}]",
                self.coord_range.0, self.coord_range.1
            )));
        }
        if let Some(lines) = self.two_lines {
            if lines.axis >= self.dim {
                return Err(Error::InvalidSpec(format!("line axis {} out of range", lines.axis)));
            }
            if lines.c1 > lines.c2 {
                return Err(Error::InvalidSpec("line coordinates out of order".into()));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenSpec {
    Gadget,
    ExtremalTwoLine(usize),
    Random(RandomSpec),
}

pub fn generate(spec: &GenSpec) -> Result<BoxFamily> {
    match spec {
        GenSpec::Gadget => Ok(gen_gadget()),
        GenSpec::ExtremalTwoLine(n) => gen_extremal_two_line(*n),
        GenSpec::Random(r) => gen_random(r),
    }
}

pub fn gen_random(spec: &RandomSpec) -> Result<BoxFamily> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    rng.set_stream(spec.stream);
    let (lo, hi) = spec.coord_range;
    let mut boxes = Vec::with_capacity(spec.n_boxes);
    for _ in 0..spec.n_boxes {
        let mut sides = Vec::with_capacity(spec.dim);
        for _ in 0..spec.dim {
            let a = rng.random_range(lo..=hi);
            let b = rng.random_range(lo..=hi);
            sides.push(Interval::new(a.min(b), a.max(b))?);
        }
        if let Some(lines) = spec.two_lines {
            let c = if rng.random_bool(0.5) { lines.c1 } else { lines.c2 };
            let side = sides[lines.axis];
            sides[lines.axis] = Interval::new(side.lo().min(c), side.hi().max(c))?;
        }
        boxes.push(BoxNd::new(sides)?);
    }
    let family = BoxFamily::new(spec.dim, boxes)?;
    match spec.two_lines {
        Some(lines) => family.with_lines(lines),
        None => Ok(family),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{nu_exact, tau_exact, OracleConfig};

    #[test]
    fn gadget_is_a_five_cycle() {
        let g = gen_gadget();
        assert_eq!(g.len(), 5);
        for i in 0..5 {
            for j in (i + 1)..5 {
                let adjacent = j == i + 1 || (i == 0 && j == 4);
                assert_eq!(g.pair_intersects(i, j), adjacent, "pair ({i}, {j})");
            }
        }
        let lines = g.lines().unwrap();
        assert!(g.boxes().iter().all(|b| lines.admits(b)));
    }

    #[test]
    fn gadget_oracle_values() {
        let g = gen_gadget();
        let cfg = OracleConfig::default();
        assert_eq!(nu_exact(&g, &cfg).unwrap().nu, 2);
        assert_eq!(tau_exact(&g, &cfg).unwrap().tau, 3);
    }

    #[test]
    fn extremal_small_cases() {
        let cfg = OracleConfig::default();
        let one = gen_extremal_two_line(1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(tau_exact(&one, &cfg).unwrap().tau, 1);
        assert_eq!(gen_extremal_two_line(2).unwrap().boxes(), gen_gadget().boxes());
        let four = gen_extremal_two_line(4).unwrap();
        assert_eq!(four.len(), 10);
        assert_eq!(nu_exact(&four, &cfg).unwrap().nu, 4);
        assert_eq!(tau_exact(&four, &cfg).unwrap().tau, 6);
        assert!(gen_extremal_two_line(0).is_err());
    }

    #[test]
    fn copies_do_not_touch() {
        let f = gen_extremal_two_line(7).unwrap();
        for i in 0..f.len() {
            for j in (i + 1)..f.len() {
                if i / 5 != j / 5 {
                    assert!(!f.pair_intersects(i, j));
                }
            }
        }
    }

    #[test]
    fn random_is_reproducible() {
        let spec = RandomSpec::new(8, 3, (-5, 5), 42);
        assert_eq!(gen_random(&spec).unwrap(), gen_random(&spec).unwrap());
        assert_ne!(gen_random(&spec).unwrap(), gen_random(&spec.clone().stream(1)).unwrap());
        assert!(gen_random(&RandomSpec::new(0, 2, (0, 1), 0)).unwrap().is_empty());
    }

    #[test]
    fn random_two_line_filter() {
        let lines = TwoLines { axis: 1, c1: 3, c2: 12 };
        for seed in 0..20 {
            let f = gen_random(&RandomSpec::new(10, 2, (0, 15), seed).two_lines(lines)).unwrap();
            assert!(f.boxes().iter().all(|b| lines.admits(b)));
        }
    }

    #[test]
    fn random_rejects_bad_specs() {
        assert!(gen_random(&RandomSpec::new(3, 0, (0, 1), 0)).is_err());
        assert!(gen_random(&RandomSpec::new(3, 2, (5, 1), 0)).is_err());
        let bad_axis = RandomSpec::new(3, 2, (0, 5), 0).two_lines(TwoLines { axis: 2, c1: 0, c2: 1 });
        assert!(gen_random(&bad_axis).is_err());
    }
}
