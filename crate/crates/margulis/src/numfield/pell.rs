//! Solutions of r² − 2s² = ±1.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PellSolution {
    pub r: i64,
    pub s: i64,
    /// r² − 2s², either +1 or −1.
    pub sign: i8,
}

impl PellSolution {
    pub fn new(r: i64, s: i64) -> Option<PellSolution> {
        let v = (r as i128) * (r as i128) - 2 * (s as i128) * (s as i128);
        match v {
            1 => Some(PellSolution { r, s, sign: 1 }),
            -1 => Some(PellSolution { r, s, sign: -1 }),
            _ => None,
        }
    }
}

fn sort_key(p: &PellSolution) -> (u64, u64, bool, bool) {
    (p.s.unsigned_abs(), p.r.unsigned_abs(), p.r < 0, p.s < 0)
}

/// All solutions with |s| ≤ s_bound, ordered by |s|, |r|, then sign pattern.
///
/// The nonnegative solutions form the orbit of (1, 0) under
/// (r, s) ↦ (r + 2s, r + s); the rest follow by sign symmetry.
pub fn pell_solutions(s_bound: u64) -> Vec<PellSolution> {
    let mut out = Vec::new();
    let (mut r, mut s): (i64, i64) = (1, 0);
    while s.unsigned_abs() <= s_bound {
        for (sr, ss) in [(1, 1), (-1, 1), (1, -1), (-1, -1)] {
            if let Some(p) = PellSolution::new(sr * r, ss * s) {
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        let next = (r.checked_add(2 * s), r.checked_add(s));
        match next {
            (Some(nr), Some(ns)) => (r, s) = (nr, ns),
            _ => break,
        }
    }
    out.sort_by_key(sort_key);
    out
}

/// Exhaustive scan over |s| ≤ s_bound, for cross-checking.
pub fn pell_bruteforce(s_bound: u64) -> Vec<PellSolution> {
    let mut out = Vec::new();
    let b = s_bound as i64;
    for s in -b..=b {
        for t in [2 * (s as i128) * (s as i128) + 1, 2 * (s as i128) * (s as i128) - 1] {
            if t < 0 {
                continue;
            }
            let r = isqrt(t);
            if r * r == t {
                for r in [r as i64, -(r as i64)] {
                    if let Some(p) = PellSolution::new(r, s) {
                        if !out.contains(&p) {
                            out.push(p);
                        }
                    }
                }
            }
        }
    }
    out.sort_by_key(sort_key);
    out
}

fn isqrt(n: i128) -> i128 {
    let mut x = (n as f64).sqrt() as i128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}
