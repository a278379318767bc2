//! Naive oracles, independent of the engine's kernels: literal nested-loop
//! enumeration of h-term sums and linear scans for the statistics.

#![allow(dead_code)] // each test target uses a different slice of these oracles

use std::collections::BTreeSet;

/// Sums of exactly h not-necessarily-distinct elements, by enumerating all
/// nondecreasing index tuples.
pub fn naive_h_fold(a: &[i64], h: u32) -> BTreeSet<i64> {
    let mut out = BTreeSet::new();
    fn rec(a: &[i64], from: usize, left: u32, sum: i64, out: &mut BTreeSet<i64>) {
        if left == 0 {
            out.insert(sum);
            return;
        }
        for i in from..a.len() {
            rec(a, i, left - 1, sum + a[i], out);
        }
    }
    rec(a, 0, h, 0, &mut out);
    out
}

pub fn naive_ell(a: &[i64], h: u32) -> Option<i64> {
    let sums = naive_h_fold(a, h);
    if !sums.contains(&0) {
        return None;
    }
    let mut n = 0;
    while sums.contains(&(n + 1)) {
        n += 1;
    }
    Some(n)
}

/// (length, start) of the leftmost longest run of consecutive sums, if any
/// run has length ≥ 1.
pub fn naive_ell_sharp(a: &[i64], h: u32) -> Option<(i64, i64)> {
    let sums: Vec<i64> = naive_h_fold(a, h).into_iter().collect();
    let mut best: Option<(i64, i64)> = None;
    let mut start = sums[0];
    let mut prev = sums[0];
    let close = |start: i64, prev: i64, best: &mut Option<(i64, i64)>| {
        let len = prev - start;
        if len >= 1 && best.is_none_or(|(l, _)| len > l) {
            *best = Some((len, start));
        }
    };
    for &x in &sums[1..] {
        if x != prev + 1 {
            close(start, prev, &mut best);
            start = x;
        }
        prev = x;
    }
    close(start, prev, &mut best);
    best
}
