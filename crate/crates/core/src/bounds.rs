//! Upper-bound recurrences for `f(n, d)`, the largest piercing number of a
//! `d`-dimensional box family with packing number `n`.
//!
//! Integer rules are evaluated with exact integer dynamic programming. The
//! real-valued rules (`lemma1`, `h`) use `f64`.
//!
//! Shared bases: `f(0, d) = 0`, `f(1, d) = 1`, `f(n, 1) = n`.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, Result};

/// `log_{∛9}(x) = 3 ln x / ln 9`.
pub fn log_cbrt9(x: f64) -> f64 {
    3.0 * x.ln() / 9f64.ln()
}

/// Planar bound `h(n) = n log_{∛9} n + n`.
pub fn h(n: u64) -> Result<f64> {
    if n < 1 {
        return Err(Error::BelowDomain("h(n)"));
    }
    let n = n as f64;
    Ok(n * log_cbrt9(n) + n)
}

/// `log_{∛9} 2 ≈ 0.946395`, the leading constant of the `n log^{d-1} n` bound.
/// Its reciprocal (≈ 1.0566) is the improvement factor over `(1 + o(1))`.
pub fn asymptotic_constant() -> f64 {
    log_cbrt9(2.0)
}

/// Quadratic planar bound `n(n-1)/2`, with `f(1, 2) = 1` at `n = 1`.
///
/// Evaluated as written. Below `n = 4` it falls under known values
/// (`f(2, 2) = 3`, and `1.5n` in general), so it is kept out of the
/// combined table there.
pub fn bound_hadwiger2(n: u64) -> u64 {
    match n {
        0 => 0,
        1 => 1,
        _ => n * (n - 1) / 2,
    }
}

/// Three-way planar recurrence:
/// `P(n) = min_{k+l+m=n-2} P(k) + P(l) + P(m) + ⌊3n/2⌋`, `P(0)=0`, `P(1)=1`.
#[derive(Debug, Clone)]
pub struct Prop3Table {
    values: Vec<u64>,
    /// `pair[t] = min_{l+m=t} P(l) + P(m)`
    pair: Vec<u64>,
}

impl Prop3Table {
    pub fn up_to(max_n: usize) -> Self {
        let mut values = vec![0u64; max_n + 1];
        let mut pair = vec![0u64; max_n + 1];
        for n in 0..=max_n {
            values[n] = match n {
                0 => 0,
                1 => 1,
                _ => {
                    let s = n - 2;
                    let best = (0..=s).map(|k| values[k] + pair[s - k]).min().expect("nonempty");
                    best + (3 * n as u64) / 2
                }
            };
            pair[n] = (0..=n).map(|l| values[l] + values[n - l]).min().expect("nonempty");
        }
        Self { values, pair }
    }

    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> u64 {
        self.values[n]
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Lexicographically smallest `(k, l, m)` with `k + l + m = n - 2`
    /// attaining the minimum. Requires `n >= 2`.
    pub fn best_split(&self, n: usize) -> (usize, usize, usize) {
        assert!(n >= 2 && n <= self.max_n());
        let s = n - 2;
        let mut best = (u64::MAX, (0, 0, 0));
        for k in 0..=s {
            if self.values[k] + self.pair[s - k] >= best.0 {
                continue;
            }
            for l in 0..=(s - k) {
                let v = self.values[k] + self.values[l] + self.values[s - k - l];
                if v < best.0 {
                    best = (v, (k, l, s - k - l));
                }
            }
        }
        best.1
    }
}

pub fn bound_prop3(n: u64) -> u64 {
    Prop3Table::up_to(n as usize).get(n as usize)
}

/// Which column the hyperplane-split recurrence consumes for `d - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowerColumn {
    /// The recurrence's own `d - 1` column, all the way down to `d = 1`.
    Pure,
    /// What the piercing algorithms realize: the three-way table at `d = 2`,
    /// the recurrence itself above.
    Constructive,
    /// Minimum over every applicable rule.
    BestKnown,
}

/// Hyperplane-split recurrence, for `n >= 2`, `d >= 2`:
/// `F(n, d) = min_{0<=k<=n-2} F(k, d) + F(n-k-1, d) + F(n, d-1)`.
#[derive(Debug, Clone)]
pub struct Prop1Table {
    /// `cols[d - 1][n]`
    cols: Vec<Vec<u64>>,
    column: LowerColumn,
}

impl Prop1Table {
    pub fn build(max_n: usize, max_d: usize, column: LowerColumn) -> Self {
        assert!(max_d >= 1);
        let prop3 = Prop3Table::up_to(max_n);
        let mut cols: Vec<Vec<u64>> = vec![(0..=max_n as u64).collect()];
        for d in 2..=max_d {
            let lower: Vec<u64> = match (column, d) {
                (LowerColumn::Pure, _) => cols[d - 2].clone(),
                (LowerColumn::Constructive, 2) => cols[0].clone(),
                (LowerColumn::Constructive, 3) => prop3.values().to_vec(),
                (LowerColumn::Constructive, _) => cols[d - 2].clone(),
                (LowerColumn::BestKnown, _) => cols[d - 2].clone(),
            };
            let mut col = vec![0u64; max_n + 1];
            // min_{l+m=t} col[l] + col[m], for the three-way rule in BestKnown
            let mut pair = vec![0u64; max_n + 1];
            for n in 0..=max_n {
                col[n] = match n {
                    0 => 0,
                    1 => 1,
                    _ => {
                        let split = (0..=n - 2).map(|k| col[k] + col[n - k - 1]).min().expect("nonempty");
                        split + lower[n]
                    }
                };
                if column == LowerColumn::BestKnown && d == 2 {
                    if n >= 2 {
                        let s = n - 2;
                        let three = (0..=s).map(|k| col[k] + pair[s - k]).min().expect("nonempty");
                        col[n] = col[n].min(three + (3 * n as u64) / 2);
                    }
                    if n >= 4 {
                        col[n] = col[n].min(bound_hadwiger2(n as u64));
                    }
                    pair[n] = (0..=n).map(|l| col[l] + col[n - l]).min().expect("nonempty");
                }
            }
            cols.push(col);
        }
        Self { cols, column }
    }

    pub fn column_kind(&self) -> LowerColumn {
        self.column
    }

    pub fn max_n(&self) -> usize {
        self.cols[0].len() - 1
    }

    pub fn max_d(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, n: usize, d: usize) -> u64 {
        self.cols[d - 1][n]
    }

    /// Smallest `k` in `0..=n-2` minimizing `F(k, d) + F(n-k-1, d)`.
    pub fn best_split(&self, n: usize, d: usize) -> usize {
        assert!(n >= 2);
        let col = &self.cols[d - 1];
        (0..=n - 2).min_by_key(|&k| (col[k] + col[n - k - 1], k)).expect("nonempty")
    }
}

/// Hyperplane-split bound. At `d = 2` this is the recurrence over `f(n, 1) = n`
/// (so `(5, 2) -> 11`); for `d >= 3` the `d - 1` column is the one the
/// piercing algorithms actually achieve (the three-way table at `d = 2`).
pub fn bound_prop1(n: u64, d: usize) -> u64 {
    Prop1Table::build(n as usize, d.max(1), LowerColumn::Constructive).get(n as usize, d.max(1))
}

/// Hyperplane-split bound over its own lower columns only.
pub fn bound_prop1_pure(n: u64, d: usize) -> u64 {
    Prop1Table::build(n as usize, d.max(1), LowerColumn::Pure).get(n as usize, d.max(1))
}

/// Best of all integer rules at each `(n, d)`.
pub fn bound_best_known(n: u64, d: usize) -> u64 {
    Prop1Table::build(n as usize, d.max(1), LowerColumn::BestKnown).get(n as usize, d.max(1))
}

/// Halving bound `n + log2(n) * base(n, d-1)` with `base(n, 1) = n`,
/// `base(n, 2)` the three-way table, and this rule itself above.
pub fn bound_lemma1(n: u64, d: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::BelowDomain("bound_lemma1"));
    }
    if d < 2 {
        return Err(Error::Precondition(format!("bound_lemma1 needs d >= 2, got {d}")));
    }
    let base = match d - 1 {
        1 => n as f64,
        2 => bound_prop3(n) as f64,
        lower => bound_lemma1(n, lower)?,
    };
    Ok(n as f64 + (n as f64).log2() * base)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundRule {
    Prop1,
    Prop1Pure,
    Prop3,
    Lemma1,
    Hadwiger2,
    H,
    BestKnown,
}

impl BoundRule {
    pub const ALL: [BoundRule; 7] = [
        BoundRule::Prop1,
        BoundRule::Prop1Pure,
        BoundRule::Prop3,
        BoundRule::Lemma1,
        BoundRule::Hadwiger2,
        BoundRule::H,
        BoundRule::BestKnown,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundRule::Prop1 => "prop1",
            BoundRule::Prop1Pure => "prop1pure",
            BoundRule::Prop3 => "prop3",
            BoundRule::Lemma1 => "lemma1",
            BoundRule::Hadwiger2 => "hadwiger2",
            BoundRule::H => "h",
            BoundRule::BestKnown => "bestknown",
        }
    }

    /// Rules that only make sense in the plane.
    pub fn planar_only(self) -> bool {
        matches!(self, BoundRule::Prop3 | BoundRule::Hadwiger2 | BoundRule::H)
    }

    pub fn is_integer(self) -> bool {
        !matches!(self, BoundRule::Lemma1 | BoundRule::H)
    }
}

impl fmt::Display for BoundRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundRule::ALL
            .into_iter()
            .find(|r| r.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Precondition(format!("unknown bound rule {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundValue {
    Int(u64),
    Real(f64),
}

impl BoundValue {
    pub fn as_f64(self) -> f64 {
        match self {
            BoundValue::Int(v) => v as f64,
            BoundValue::Real(v) => v,
        }
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Int(v) => write!(f, "{v}"),
            BoundValue::Real(v) => write!(f, "{v:.6}"),
        }
    }
}

/// All values of one rule for `0 <= n <= max_n` and the dimensions where the
/// rule applies (`d = 2` only for planar rules).
#[derive(Debug, Clone)]
pub struct BoundTable {
    pub rule: BoundRule,
    pub max_n: usize,
    pub max_d: usize,
    pub values: BTreeMap<(usize, usize), BoundValue>,
}

impl BoundTable {
    pub fn build(rule: BoundRule, max_n: usize, max_d: usize) -> Result<Self> {
        if max_d < 1 {
            return Err(Error::ZeroDimension);
        }
        let mut values = BTreeMap::new();
        let dims: Vec<usize> = if rule.planar_only() {
            if max_d >= 2 { vec![2] } else { Vec::new() }
        } else {
            (1..=max_d).collect()
        };
        match rule {
            BoundRule::Prop1 | BoundRule::Prop1Pure | BoundRule::BestKnown => {
                let column = match rule {
                    BoundRule::Prop1 => LowerColumn::Constructive,
                    BoundRule::Prop1Pure => LowerColumn::Pure,
                    _ => LowerColumn::BestKnown,
                };
                let t = Prop1Table::build(max_n, max_d, column);
                for &d in &dims {
                    for n in 0..=max_n {
                        values.insert((n, d), BoundValue::Int(t.get(n, d)));
                    }
                }
            }
            BoundRule::Prop3 => {
                let t = Prop3Table::up_to(max_n);
                for &d in &dims {
                    for n in 0..=max_n {
                        values.insert((n, d), BoundValue::Int(t.get(n)));
                    }
                }
            }
            BoundRule::Hadwiger2 => {
                for &d in &dims {
                    for n in 0..=max_n {
                        values.insert((n, d), BoundValue::Int(bound_hadwiger2(n as u64)));
                    }
                }
            }
            BoundRule::H => {
                for &d in &dims {
                    values.insert((0, d), BoundValue::Real(0.0));
                    for n in 1..=max_n {
                        values.insert((n, d), BoundValue::Real(h(n as u64)?));
                    }
                }
            }
            BoundRule::Lemma1 => {
                for &d in &dims {
                    for n in 0..=max_n {
                        let v = match (n, d) {
                            (0, _) => BoundValue::Real(0.0),
                            (_, 1) => BoundValue::Real(n as f64),
                            _ => BoundValue::Real(bound_lemma1(n as u64, d)?),
                        };
                        values.insert((n, d), v);
                    }
                }
            }
        }
        Ok(Self { rule, max_n, max_d, values })
    }

    pub fn get(&self, n: usize, d: usize) -> Option<BoundValue> {
        self.values.get(&(n, d)).copied()
    }

    /// `(n, d)` cells where the value drops as `n` grows.
    pub fn monotonicity_violations(&self) -> Vec<(usize, usize)> {
        self.values
            .iter()
            .filter_map(|(&(n, d), v)| {
                let next = self.values.get(&(n + 1, d))?;
                (next.as_f64() < v.as_f64()).then_some((n + 1, d))
            })
            .collect()
    }

    /// `rule,n,d,value` rows ordered by `d`, then `n`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("rule,n,d,value\n");
        let mut cells: Vec<_> = self.values.iter().collect();
        cells.sort_by_key(|(&(n, d), _)| (d, n));
        for ((n, d), v) in cells {
            writeln!(out, "{},{},{},{}", self.rule, n, d, v).expect("write to String");
        }
        out
    }
}
