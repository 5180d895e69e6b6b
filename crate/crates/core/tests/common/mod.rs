//! Brute-force oracles, independent of the library's search code.
#![allow(dead_code)]

use boxpierce::{BoxFamily, Coord, Point};

/// Closed-box overlap by pairwise interval check.
fn disjoint(f: &BoxFamily, i: usize, j: usize) -> bool {
    f.get(i).sides().iter().zip(f.get(j).sides()).any(|(a, b)| a.hi() < b.lo() || b.hi() < a.lo())
}

/// ν by enumerating all 2^n subsets.
pub fn brute_nu(f: &BoxFamily) -> usize {
    let n = f.len();
    assert!(n <= 16, "brute force is for tiny families");
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if members.len() <= best {
            continue;
        }
        let ok = members.iter().enumerate().all(|(a, &i)| members[a + 1..].iter().all(|&j| disjoint(f, i, j)));
        if ok {
            best = members.len();
        }
    }
    best
}

/// Every integer point in the bounding box of the family. Endpoints are
/// integers, so flooring any piercing point keeps it inside the same boxes.
pub fn lattice(f: &BoxFamily) -> Vec<Point> {
    let mut pts: Vec<Vec<Coord>> = vec![Vec::new()];
    for axis in 0..f.dim() {
        let lo = f.boxes().iter().map(|b| b.lo(axis)).min().unwrap();
        let hi = f.boxes().iter().map(|b| b.hi(axis)).max().unwrap();
        pts = pts
            .into_iter()
            .flat_map(|p| (lo..=hi).map(move |x| {
                let mut q = p.clone();
                q.push(x);
                q
            }))
            .collect();
    }
    pts.into_iter().map(Point::new).collect()
}

fn coverage(f: &BoxFamily, pts: &[Point]) -> Vec<u32> {
    let mut masks: Vec<u32> = pts
        .iter()
        .map(|p| {
            (0..f.len())
                .filter(|&i| f.get(i).sides().iter().zip(p.coords()).all(|(iv, &x)| iv.lo() <= x && x <= iv.hi()))
                .fold(0u32, |m, i| m | 1 << i)
        })
        .collect();
    masks.sort_unstable();
    masks.dedup();
    masks
}

/// τ by breadth-first search over covered-box sets, one lattice point per
/// step. Exhaustive over all lattice subsets.
pub fn brute_tau(f: &BoxFamily) -> usize {
    let n = f.len();
    assert!(n <= 16);
    if n == 0 {
        return 0;
    }
    let masks = coverage(f, &lattice(f));
    let full = (1u32 << n) - 1;
    let mut dist = vec![usize::MAX; 1 << n];
    dist[0] = 0;
    let mut frontier = vec![0u32];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in frontier {
            for &m in &masks {
                let t = s | m;
                if dist[t as usize] == usize::MAX {
                    dist[t as usize] = dist[s as usize] + 1;
                    if t == full {
                        return dist[t as usize];
                    }
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    unreachable!("lattice points pierce every box")
}

/// Smallest `t <= 3` such that some `t` lattice points pierce the family, by
/// plain subset enumeration; `None` when no such subset exists.
pub fn brute_tau_upto3(f: &BoxFamily) -> Option<usize> {
    let n = f.len();
    if n == 0 {
        return Some(0);
    }
    let full = (1u32 << n) - 1;
    let m = coverage(f, &lattice(f));
    if m.contains(&full) {
        return Some(1);
    }
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            if m[i] | m[j] == full {
                return Some(2);
            }
        }
    }
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            for k in j + 1..m.len() {
                if m[i] | m[j] | m[k] == full {
                    return Some(3);
                }
            }
        }
    }
    None
}

/// Every box contains at least one point.
pub fn pierces(f: &BoxFamily, pts: &[Point]) -> bool {
    f.boxes()
        .iter()
        .all(|b| pts.iter().any(|p| b.sides().iter().zip(p.coords()).all(|(iv, &x)| iv.lo() <= x && x <= iv.hi())))
}
