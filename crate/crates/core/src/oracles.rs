//! Exact ground-truth solvers for the packing number ν and the piercing
//! number τ, plus the Helly common point of a pairwise-intersecting family.
//!
//! Both solvers are exponential and refuse families above a configurable
//! size cap instead of falling back to an approximation. Boxes are tracked as
//! `u64` bitmasks, so the cap can never exceed [`MAX_ORACLE_BOXES`].

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::model::{BoxFamily, Coord, Point};

pub const DEFAULT_ORACLE_CAP: usize = 32;
pub const MAX_ORACLE_BOXES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub cap: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { cap: DEFAULT_ORACLE_CAP }
    }
}

impl OracleConfig {
    pub fn with_cap(cap: usize) -> Self {
        Self { cap }
    }

    pub(crate) fn admit(&self, f: &BoxFamily) -> Result<()> {
        let cap = self.cap.min(MAX_ORACLE_BOXES);
        if f.len() > cap {
            return Err(Error::CapExceeded { size: f.len(), cap });
        }
        Ok(())
    }
}

/// Maximum packing: `witness` holds indices of `nu` pairwise-disjoint boxes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuResult {
    pub nu: usize,
    pub witness: Vec<usize>,
}

/// Minimum piercing: `witness` is a point set of size `tau` meeting every box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauResult {
    pub tau: usize,
    pub witness: Vec<Point>,
}

fn bit(i: usize) -> u64 {
    1u64 << i
}

/// `adj[i]`: boxes intersecting box `i`, excluding `i` itself.
fn intersection_masks(f: &BoxFamily) -> Vec<u64> {
    let n = f.len();
    let mut adj = vec![0u64; n];
    for i in 0..n {
        for j in (i + 1)..n {
            if f.pair_intersects(i, j) {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
        }
    }
    adj
}

fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let i = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(i)
    })
}

/// Greedy disjoint subfamily of `mask`, lowest index first.
fn greedy_packing(mask: u64, adj: &[u64]) -> Vec<usize> {
    let mut picked = Vec::new();
    let mut left = mask;
    while left != 0 {
        let i = left.trailing_zeros() as usize;
        picked.push(i);
        left &= !(adj[i] | bit(i));
    }
    picked
}

/// Number of pairwise-intersecting groups in a greedy partition of `mask`.
/// Each group holds at most one box of any packing, so this bounds ν from above.
fn clique_cover_bound(mask: u64, adj: &[u64]) -> usize {
    let mut groups: Vec<u64> = Vec::new();
    for i in ones(mask) {
        match groups.iter_mut().find(|g| **g & !adj[i] == 0) {
            Some(g) => *g |= bit(i),
            None => groups.push(bit(i)),
        }
    }
    groups.len()
}

struct PackingSearch<'a> {
    adj: &'a [u64],
    best: Vec<usize>,
    chosen: Vec<usize>,
}

impl PackingSearch<'_> {
    fn run(&mut self, cand: u64) {
        if cand == 0 {
            if self.chosen.len() > self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        }
        if self.chosen.len() + cand.count_ones() as usize <= self.best.len() {
            return;
        }
        if self.chosen.len() + clique_cover_bound(cand, self.adj) <= self.best.len() {
            return;
        }
        let i = cand.trailing_zeros() as usize;
        self.chosen.push(i);
        self.run(cand & !(self.adj[i] | bit(i)));
        self.chosen.pop();
        self.run(cand & !bit(i));
    }
}

/// Exact packing number by branch-and-bound over the intersection graph.
/// Boxes are branched in input order, include-branch first.
pub fn nu_exact(f: &BoxFamily, cfg: &OracleConfig) -> Result<NuResult> {
    cfg.admit(f)?;
    let n = f.len();
    if n == 0 {
        return Ok(NuResult { nu: 0, witness: Vec::new() });
    }
    let adj = intersection_masks(f);
    let all = if n == 64 { u64::MAX } else { bit(n) - 1 };
    let mut search = PackingSearch { adj: &adj, best: greedy_packing(all, &adj), chosen: Vec::new() };
    search.run(all);
    let mut witness = search.best;
    witness.sort_unstable();
    Ok(NuResult { nu: witness.len(), witness })
}

/// Product over axes of the distinct left endpoints, in lexicographic order.
///
/// Some minimum piercing set always lives on this grid: a piercing point can
/// slide down on each axis to the largest left endpoint among the boxes
/// containing it without leaving any of them.
pub fn candidate_grid(f: &BoxFamily) -> Vec<Point> {
    if f.is_empty() {
        return Vec::new();
    }
    let axes: Vec<Vec<Coord>> = (0..f.dim())
        .map(|axis| {
            let mut ls: Vec<Coord> = f.boxes().iter().map(|b| b.lo(axis)).collect();
            ls.sort_unstable();
            ls.dedup();
            ls
        })
        .collect();
    let mut out = vec![Vec::with_capacity(f.dim())];
    for coords in &axes {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                coords.iter().map(move |&c| {
                    let mut p = prefix.clone();
                    p.push(c);
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(Point::new).collect()
}

struct HittingSearch<'a> {
    /// Coverage mask per surviving candidate point.
    cover: &'a [u64],
    /// Candidate indices covering each box, in grid order.
    hitters: &'a [Vec<usize>],
    adj: &'a [u64],
    chosen: Vec<usize>,
    /// Largest budget known to fail for a given uncovered set.
    failed: HashMap<u64, usize>,
}

impl HittingSearch<'_> {
    fn run(&mut self, uncovered: u64, budget: usize) -> bool {
        if uncovered == 0 {
            return true;
        }
        if budget == 0 {
            return false;
        }
        if self.failed.get(&uncovered).is_some_and(|&b| b >= budget) {
            return false;
        }
        // Pairwise-disjoint boxes need distinct points.
        if greedy_packing(uncovered, self.adj).len() > budget {
            self.failed.insert(uncovered, budget);
            return false;
        }
        let pivot = ones(uncovered)
            .min_by_key(|&i| (self.hitters[i].len(), i))
            .expect("nonempty");
        for k in 0..self.hitters[pivot].len() {
            let c = self.hitters[pivot][k];
            self.chosen.push(c);
            if self.run(uncovered & !self.cover[c], budget - 1) {
                return true;
            }
            self.chosen.pop();
        }
        let slot = self.failed.entry(uncovered).or_insert(0);
        *slot = (*slot).max(budget);
        false
    }
}

/// Exact piercing number by iterative deepening over the candidate grid.
pub fn tau_exact(f: &BoxFamily, cfg: &OracleConfig) -> Result<TauResult> {
    cfg.admit(f)?;
    let n = f.len();
    if n == 0 {
        return Ok(TauResult { tau: 0, witness: Vec::new() });
    }
    let grid = candidate_grid(f);
    let masks: Vec<u64> = grid
        .iter()
        .map(|p| {
            f.boxes()
                .iter()
                .enumerate()
                .filter(|(_, b)| b.sides().iter().zip(p.coords()).all(|(iv, &x)| iv.contains(x)))
                .fold(0u64, |m, (i, _)| m | bit(i))
        })
        .collect();

    // Keep only the first grid point for each coverage mask that is not
    // strictly contained in another mask.
    let mut distinct: Vec<(u64, usize)> = Vec::new();
    let mut seen = HashMap::new();
    for (idx, &m) in masks.iter().enumerate() {
        if m != 0 && seen.insert(m, idx).is_none() {
            distinct.push((m, idx));
        }
    }
    let maximal: Vec<(u64, usize)> = distinct
        .iter()
        .copied()
        .filter(|&(m, _)| !distinct.iter().any(|&(o, _)| o != m && o & m == m))
        .collect();

    let cover: Vec<u64> = maximal.iter().map(|&(m, _)| m).collect();
    let mut hitters = vec![Vec::new(); n];
    for (c, &m) in cover.iter().enumerate() {
        for i in ones(m) {
            hitters[i].push(c);
        }
    }
    if let Some(index) = hitters.iter().position(Vec::is_empty) {
        return Err(Error::Internal(format!("box {index} contains no grid point")));
    }

    let adj = intersection_masks(f);
    let all = if n == 64 { u64::MAX } else { bit(n) - 1 };
    let mut search = HittingSearch { cover: &cover, hitters: &hitters, adj: &adj, chosen: Vec::new(), failed: HashMap::new() };
    let start = greedy_packing(all, &adj).len();
    for budget in start..=n {
        if search.run(all, budget) {
            let witness: Vec<Point> = search.chosen.iter().map(|&c| grid[maximal[c].1].clone()).collect();
            return Ok(TauResult { tau: witness.len(), witness });
        }
        debug_assert!(search.chosen.is_empty());
    }
    Err(Error::Internal("no piercing set within n points".into()))
}

/// Common point of a pairwise-intersecting family: the per-axis maximum of
/// left endpoints, which lies in every box.
pub fn common_point(f: &BoxFamily) -> Result<Point> {
    if f.is_empty() {
        return Err(Error::EmptyFamily);
    }
    for i in 0..f.len() {
        for j in (i + 1)..f.len() {
            if !f.pair_intersects(i, j) {
                return Err(Error::NotPairwiseIntersecting { first: i, second: j });
            }
        }
    }
    let coords = (0..f.dim())
        .map(|axis| f.boxes().iter().map(|b| b.lo(axis)).max().expect("nonempty"))
        .collect();
    let p = Point::new(coords);
    if !f.unhit(std::slice::from_ref(&p))?.is_empty() {
        return Err(Error::Internal("Helly point misses a box".into()));
    }
    Ok(p)
}
