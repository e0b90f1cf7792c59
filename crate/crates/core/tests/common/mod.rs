//! Brute-force oracles shared by the integration suites. None of these go
//! through the library's tree machinery.

#![allow(dead_code)]

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};

/// Catalan numbers from `C(n+1) = sum_i C(i) C(n-i)`.
pub fn catalan_table(max: usize) -> Vec<BigUint> {
    let mut c = vec![BigUint::from(1u32)];
    for n in 0..max {
        let next = (0..=n).map(|i| &c[i] * &c[n - i]).sum();
        c.push(next);
    }
    c
}

/// Naive `O(n^3)` scan for a 132 pattern.
pub fn contains_132(w: &[u32]) -> bool {
    let n = w.len();
    (0..n).any(|i| (i + 1..n).any(|j| (j + 1..n).any(|k| w[i] < w[k] && w[k] < w[j])))
}

/// Counts increasing length-`k` subsequences by scanning all `k`-subsets.
pub fn increasing_by_subsets(w: &[u32], k: usize) -> u64 {
    w.iter()
        .combinations(k)
        .filter(|c| c.windows(2).all(|p| p[0] < p[1]))
        .count() as u64
}

/// All 132-avoiders of length `n` by filtering the `n!` permutations.
pub fn avoiders(n: usize) -> Vec<Vec<u32>> {
    (1..=n as u32)
        .permutations(n)
        .filter(|w| !contains_132(w))
        .collect()
}

/// `sum q^r` over 132-avoiders, `r` = number of increasing length-`k`
/// patterns. Uses the subset scan when `subset_scan` is set, otherwise a
/// straightforward quadratic dynamic program written here.
pub fn avoider_polynomial(n: usize, k: usize, subset_scan: bool) -> BTreeMap<u64, BigInt> {
    let mut poly = BTreeMap::new();
    for w in (1..=n as u32).permutations(n) {
        if contains_132(&w) {
            continue;
        }
        let r = if subset_scan { increasing_by_subsets(&w, k) } else { increasing_dp(&w, k) };
        *poly.entry(r).or_insert_with(|| BigInt::from(0)) += 1;
    }
    poly
}

pub fn increasing_dp(w: &[u32], k: usize) -> u64 {
    let mut ending = vec![1u64; w.len()];
    for _ in 1..k {
        ending = (0..w.len())
            .map(|i| (0..i).filter(|&h| w[h] < w[i]).map(|h| ending[h]).sum())
            .collect();
    }
    ending.iter().sum()
}

/// Dyck words of semilength `n` over `b'E'`/`b'N'`, by filtering all
/// `C(2n, n)` arrangements of the steps.
pub fn dyck_words(n: usize) -> Vec<Vec<u8>> {
    (0..2 * n)
        .combinations(n)
        .map(|east| {
            let mut w = vec![b'N'; 2 * n];
            for i in east {
                w[i] = b'E';
            }
            w
        })
        .filter(|w| {
            let mut h = 0i64;
            w.iter().all(|&s| {
                h += if s == b'E' { 1 } else { -1 };
                h >= 0
            })
        })
        .collect()
}

/// Area between a lattice path and the x-axis by the shoelace formula on
/// the polygon path + (n,n) -> (n,0) -> (0,0).
pub fn column_area(w: &[u8]) -> u64 {
    let mut pts = vec![(0i64, 0i64)];
    for &s in w {
        let (x, y) = *pts.last().unwrap();
        pts.push(if s == b'E' { (x + 1, y) } else { (x, y + 1) });
    }
    let (x_end, _) = *pts.last().unwrap();
    pts.push((x_end, 0));
    let twice: i64 = pts
        .iter()
        .zip(pts.iter().cycle().skip(1))
        .map(|(a, b)| a.0 * b.1 - b.0 * a.1)
        .sum();
    (twice.abs() / 2) as u64
}

pub fn area_poly(n: usize) -> BTreeMap<u64, BigInt> {
    let mut poly = BTreeMap::new();
    for w in dyck_words(n) {
        *poly.entry(column_area(&w)).or_insert_with(|| BigInt::from(0)) += 1;
    }
    poly
}

/// Levels of the non-root vertices of the tree encoded by a balanced
/// parentheses string, read straight off the nesting depth.
pub fn levels_of_encoding(s: &str) -> Vec<u32> {
    let mut depth = 0u32;
    let mut out = Vec::new();
    for c in s.chars() {
        if c == '(' {
            depth += 1;
            out.push(depth);
        } else {
            depth -= 1;
        }
    }
    out
}

/// Binomial via the multiplicative formula (independent of the library's
/// Pascal rows).
pub fn choose(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
