//! h-fold sumsets and their two interval statistics.
//!
//! The kernel builds `hA` as an offset dense bitmask over
//! `[h·min(A), h·max(A)]` using h−1 shifted-OR convolutions: each fold adds
//! one more copy of `A`. The interval statistics need run structure anyway,
//! and run extraction over a dense mask is linear. When the range is wider
//! than the configured cap (geometric sets blow it up fast), a sorted-merge
//! sparse fallback computes the same set.
//!
//! The initial-run statistic is keyed to `0 ∈ hA`, not `0 ∈ A`: for
//! nonnegative sets the two coincide, and the former is the only consistent
//! reading once negative elements are allowed.

use serde::{Deserialize, Serialize};

use crate::bits::BitRow;
use crate::error::{Error, Result};
use crate::limits::SearchLimits;
use crate::set::{IntSet, Interval};

/// The best run in a sumset: its length and the leftmost interval
/// attaining it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunWitness {
    pub length: i64,
    pub interval: Interval,
}

/// An h-fold sumset bundled with its run decomposition and statistics.
///
/// `ell` is present iff `0 ∈ sums`; it is the largest `n ≥ 0` with
/// `[0,n] ⊆ sums`. `ell_sharp` is present iff some maximal run has length
/// ≥ 1; it reports the maximum run length and the leftmost run attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumsetProfile {
    pub h: u32,
    pub base: IntSet,
    pub sums: IntSet,
    pub runs: Vec<Interval>,
    pub ell: Option<i64>,
    pub ell_sharp: Option<RunWitness>,
}

enum Repr {
    Dense { row: BitRow, offset: i64 },
    Sparse(Vec<i64>),
}

fn validate(a: &IntSet, h: u32) -> Result<()> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    if h == 0 {
        return Err(Error::InvalidParameter("h must be at least 1".into()));
    }
    Ok(())
}

fn compute_repr(a: &IntSet, h: u32, limits: &SearchLimits) -> Result<Repr> {
    validate(a, h)?;
    let min = a.min_element()?;
    let max = a.max_element()?;
    let lo = (min as i128) * (h as i128);
    let hi = (max as i128) * (h as i128);
    if lo < i64::MIN as i128 || hi > i64::MAX as i128 {
        return Err(Error::Overflow("h-fold sumset range"));
    }
    // Every intermediate j-fold sum lies between j·min and j·max, which the
    // bounds above envelope, so unchecked adds below cannot wrap.
    let width = hi - lo + 1;
    if width <= limits.dense_width_cap as i128 {
        Ok(Repr::Dense {
            row: dense_fold(a, h, min, width as usize),
            offset: lo as i64,
        })
    } else {
        Ok(Repr::Sparse(sparse_fold(a, h, limits)?))
    }
}

fn dense_fold(a: &IntSet, h: u32, min: i64, width: usize) -> BitRow {
    let shifts: Vec<usize> = a.iter().map(|x| (x - min) as usize).collect();
    let mut cur = BitRow::zeros(width);
    for &s in &shifts {
        cur.set(s);
    }
    let mut next = BitRow::zeros(width);
    for _ in 1..h {
        next.clear();
        for &s in &shifts {
            next.or_shifted(&cur, s);
        }
        std::mem::swap(&mut cur, &mut next);
    }
    cur
}

fn sparse_fold(a: &IntSet, h: u32, limits: &SearchLimits) -> Result<Vec<i64>> {
    let projected = multiset_count(a.len() as u64, h as u64);
    if projected > limits.tuple_cap as u128 {
        return Err(Error::TupleCap {
            needed: projected,
            cap: limits.tuple_cap,
        });
    }
    let base: Vec<i64> = a.iter().collect();
    let mut cur = base.clone();
    for _ in 1..h {
        let mut next = Vec::with_capacity(cur.len() * base.len());
        for &x in &cur {
            for &b in &base {
                next.push(x + b);
            }
        }
        next.sort_unstable();
        next.dedup();
        cur = next;
    }
    Ok(cur)
}

/// Multisets of size h over n symbols: C(n + h − 1, h), saturating.
pub(crate) fn multiset_count(n: u64, h: u64) -> u128 {
    binomial(n as u128 + h as u128 - 1, h as u128)
}

pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

impl Repr {
    fn values(&self) -> IntSet {
        match self {
            Repr::Dense { row, offset } => {
                let mut out = Vec::with_capacity(row.count_ones());
                row.for_each_one(|i| out.push(offset + i as i64));
                IntSet::from_sorted_unchecked(out)
            }
            Repr::Sparse(v) => IntSet::from_sorted_unchecked(v.clone()),
        }
    }

    fn runs(&self) -> Vec<Interval> {
        match self {
            Repr::Dense { row, offset } => row
                .runs()
                .into_iter()
                .map(|(s, e)| {
                    Interval::new(offset + s as i64, offset + e as i64)
                        .expect("run bounds are ordered")
                })
                .collect(),
            Repr::Sparse(v) => IntSet::from_sorted_unchecked(v.clone())
                .maximal_runs()
                .expect("sparse sumset is nonempty"),
        }
    }

    fn ell(&self) -> Option<i64> {
        match self {
            Repr::Dense { row, offset } => {
                if *offset > 0 {
                    return None;
                }
                let idx0 = (-offset) as usize;
                if !row.get(idx0) {
                    return None;
                }
                match row.first_zero_from(idx0) {
                    Some(fz) => Some((fz - idx0 - 1) as i64),
                    None => Some((row.nbits() - 1 - idx0) as i64),
                }
            }
            Repr::Sparse(v) => {
                let mut pos = v.binary_search(&0).ok()?;
                let mut n = 0i64;
                while pos + 1 < v.len() && v[pos + 1] == v[pos] + 1 {
                    pos += 1;
                    n += 1;
                }
                Some(n)
            }
        }
    }
}

fn best_run(runs: &[Interval]) -> Option<RunWitness> {
    let mut best: Option<RunWitness> = None;
    for r in runs {
        let len = r.len();
        if len >= 1 && best.is_none_or(|b| len > b.length) {
            best = Some(RunWitness {
                length: len,
                interval: *r,
            });
        }
    }
    best
}

/// The set of all sums of exactly `h` not necessarily distinct elements
/// of `a`.
pub fn h_fold_sumset(a: &IntSet, h: u32) -> Result<IntSet> {
    h_fold_sumset_with(a, h, &SearchLimits::default())
}

pub fn h_fold_sumset_with(a: &IntSet, h: u32, limits: &SearchLimits) -> Result<IntSet> {
    Ok(compute_repr(a, h, limits)?.values())
}

/// Largest `n ≥ 0` with `[0,n] ⊆ hA`, absent when `0 ∉ hA`.
pub fn ell(a: &IntSet, h: u32) -> Result<Option<i64>> {
    ell_with(a, h, &SearchLimits::default())
}

pub fn ell_with(a: &IntSet, h: u32, limits: &SearchLimits) -> Result<Option<i64>> {
    Ok(compute_repr(a, h, limits)?.ell())
}

/// Maximum run length of `hA` with its leftmost witness, absent when every
/// element of `hA` is isolated.
pub fn ell_sharp(a: &IntSet, h: u32) -> Result<Option<RunWitness>> {
    ell_sharp_with(a, h, &SearchLimits::default())
}

pub fn ell_sharp_with(a: &IntSet, h: u32, limits: &SearchLimits) -> Result<Option<RunWitness>> {
    Ok(best_run(&compute_repr(a, h, limits)?.runs()))
}

/// Compute the sumset once and bundle every statistic.
pub fn profile(a: &IntSet, h: u32) -> Result<SumsetProfile> {
    profile_with(a, h, &SearchLimits::default())
}

pub fn profile_with(a: &IntSet, h: u32, limits: &SearchLimits) -> Result<SumsetProfile> {
    let repr = compute_repr(a, h, limits)?;
    let runs = repr.runs();
    Ok(SumsetProfile {
        h,
        base: a.clone(),
        sums: repr.values(),
        ell: repr.ell(),
        ell_sharp: best_run(&runs),
        runs,
    })
}

/// Incremental fold stack for the enumerations and searches: maintains the
/// masks of j-fold sums for j = 1..=h of a growing set, with snapshot and
/// restore. Row j holds values offset by j·lo, so pushing element b shifts
/// every row by b − lo.
pub(crate) struct SumStack {
    h: usize,
    lo: i64,
    rows: Vec<BitRow>,
    saved: Vec<Vec<BitRow>>,
}

impl SumStack {
    /// `lo` is the smallest element value that will ever be pushed
    /// (must be ≤ 0 so that the value 0 is representable in row h);
    /// `capacity` is the row width in bits.
    pub fn new(h: u32, lo: i64, capacity: usize) -> Self {
        let h = h as usize;
        let mut rows = vec![BitRow::zeros(capacity); h + 1];
        rows[0].set(0);
        SumStack {
            h,
            lo,
            rows,
            saved: Vec::new(),
        }
    }

    /// Add one element to the set, updating every fold.
    pub fn push(&mut self, b: i64) {
        debug_assert!(b >= self.lo);
        let shift = (b - self.lo) as usize;
        for j in 1..=self.h {
            let (lower, upper) = self.rows.split_at_mut(j);
            let src = &lower[j - 1];
            upper[0].or_shifted(src, shift);
        }
    }

    pub fn save(&mut self) {
        self.saved.push(self.rows[1..].to_vec());
    }

    pub fn restore(&mut self) {
        let snap = self.saved.pop().expect("restore without save");
        for (row, s) in self.rows[1..].iter_mut().zip(snap) {
            *row = s;
        }
    }

    fn zero_index(&self) -> usize {
        debug_assert!(self.lo <= 0);
        (-(self.lo) as usize) * self.h
    }

    /// ℓ of the current h-fold mask.
    pub fn ell(&self) -> Option<i64> {
        let row = &self.rows[self.h];
        let idx0 = self.zero_index();
        if !row.get(idx0) {
            return None;
        }
        match row.first_zero_from(idx0) {
            Some(fz) => Some((fz - idx0 - 1) as i64),
            None => Some((row.nbits() - 1 - idx0) as i64),
        }
    }

    /// Best run of the current h-fold mask: (length, start value).
    pub fn ell_sharp(&self) -> Option<(i64, i64)> {
        let row = &self.rows[self.h];
        let offset = self.lo * self.h as i64;
        let mut best: Option<(i64, i64)> = None;
        for (s, e) in row.runs() {
            let len = (e - s) as i64;
            if len >= 1 && best.is_none_or(|(l, _)| len > l) {
                best = Some((len, offset + s as i64));
            }
        }
        best
    }
}
