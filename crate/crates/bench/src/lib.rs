//! Input generators shared by the benchmark targets.

use sumbasis_core::IntSet;

/// Triangular numbers 0, 1, 3, 6, … — a mid-density base that keeps the
/// dense kernel busy without degenerating into an interval.
pub fn triangular_set(k: usize) -> IntSet {
    let elems: Vec<i64> = (0..k as i64).map(|i| i * (i + 1) / 2).collect();
    IntSet::new(elems).expect("strictly increasing")
}

/// A fixed perfect-difference-family Sidon set for separation benches.
pub fn sidon_set() -> IntSet {
    IntSet::new(vec![1, 2, 5, 11, 22, 33, 57, 72, 91, 116, 137, 150]).expect("sorted")
}
