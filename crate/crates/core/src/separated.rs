//! The separation hierarchy: h-fold separation of sums, level checks across
//! folds, and the subset-sum criterion, plus the geometric witness sets.
//!
//! Two inequivalent readings of "distinct sums" coexist in this area:
//! multisets (sorted index tuples differing in some coordinate) and plain
//! subsets. The h-fold and level checks use multisets; the subset-sum check
//! uses subsets. Both are exposed so discrepancies between them can be
//! recorded rather than papered over: for g = 2 the cross-level multiset
//! condition already fails at 2+2 vs 4 while all distinct subset sums of
//! the powers of two stay 1 apart.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::SearchLimits;
use crate::set::IntSet;
use crate::sumset::multiset_count;

/// Which separation condition to test.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum SeparationCheck {
    /// Sums of exactly h elements (with repetition) pairwise ≥ Δ apart.
    HFold { h: u32 },
    /// `HFold` for every h ≤ max_h, plus cross-fold separation between
    /// different fold counts.
    Level { max_h: u32 },
    /// All 2^|A| subset sums pairwise ≥ Δ apart (empty subset included).
    SubsetSums,
}

/// A separation question: is `set` Δ-separated under `check`?
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationQuery {
    pub set: IntSet,
    pub delta: i64,
    #[serde(flatten)]
    pub check: SeparationCheck,
}

/// Two element selections whose sums come closer than Δ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumPair {
    pub left: Vec<i64>,
    pub right: Vec<i64>,
    pub left_sum: i64,
    pub right_sum: i64,
    pub gap: i64,
}

impl SumPair {
    fn new(left: Vec<i64>, right: Vec<i64>) -> Self {
        let left_sum: i64 = left.iter().sum();
        let right_sum: i64 = right.iter().sum();
        SumPair {
            gap: (left_sum - right_sum).abs(),
            left,
            right,
            left_sum,
            right_sum,
        }
    }
}

/// Outcome of a separation check. `pass` is false iff a violation is
/// recorded; re-summing the violation's selections reproduces the gap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationReport {
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub violation: Option<SumPair>,
}

impl SeparationReport {
    fn pass() -> Self {
        SeparationReport {
            pass: true,
            violation: None,
        }
    }

    fn fail(violation: SumPair) -> Self {
        SeparationReport {
            pass: false,
            violation: Some(violation),
        }
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.to_string()))
    }
}

/// All sorted h-tuples of elements (multisets with repetition), each with
/// its sum, in lexicographic tuple order.
fn multisets(a: &IntSet, h: u32, limits: &SearchLimits) -> Result<Vec<(i64, Vec<i64>)>> {
    let needed = multiset_count(a.len() as u64, h as u64);
    if needed > limits.tuple_cap as u128 {
        return Err(Error::TupleCap {
            needed,
            cap: limits.tuple_cap,
        });
    }
    let elems = a.elements();
    let mut out = Vec::with_capacity(needed as usize);
    let mut tuple: Vec<usize> = Vec::with_capacity(h as usize);
    fn rec(
        elems: &[i64],
        h: usize,
        from: usize,
        tuple: &mut Vec<usize>,
        sum: i128,
        out: &mut Vec<(i64, Vec<i64>)>,
    ) -> Result<()> {
        if tuple.len() == h {
            let s = i64::try_from(sum).map_err(|_| Error::Overflow("multiset sum"))?;
            out.push((s, tuple.iter().map(|&i| elems[i]).collect()));
            return Ok(());
        }
        for i in from..elems.len() {
            tuple.push(i);
            rec(elems, h, i, tuple, sum + elems[i] as i128, out)?;
            tuple.pop();
        }
        Ok(())
    }
    rec(elems, h as usize, 0, &mut tuple, 0, &mut out)?;
    Ok(out)
}

/// Does `a` have a Δ-separated h-fold sumset: do all pairs of distinct
/// sorted index h-tuples produce sums at least Δ apart?
pub fn check_bh(a: &IntSet, h: u32, delta: i64) -> Result<SeparationReport> {
    check_bh_with(a, h, delta, &SearchLimits::default())
}

pub fn check_bh_with(
    a: &IntSet,
    h: u32,
    delta: i64,
    limits: &SearchLimits,
) -> Result<SeparationReport> {
    require(!a.is_empty(), "set must be nonempty")?;
    require(h >= 1, "h must be at least 1")?;
    require(delta >= 1, "delta must be at least 1")?;
    let mut sums = multisets(a, h, limits)?;
    sums.sort();
    // every entry is a distinct tuple, so any close pair shows up adjacent
    for pair in sums.windows(2) {
        if pair[1].0 - pair[0].0 < delta {
            return Ok(SeparationReport::fail(SumPair::new(
                pair[0].1.clone(),
                pair[1].1.clone(),
            )));
        }
    }
    Ok(SeparationReport::pass())
}

/// Is `a` Δ-separated of level `max_h`: separated within every fold count
/// h ≤ max_h and between any two distinct fold counts?
pub fn check_level(a: &IntSet, max_h: u32, delta: i64) -> Result<SeparationReport> {
    check_level_with(a, max_h, delta, &SearchLimits::default())
}

pub fn check_level_with(
    a: &IntSet,
    max_h: u32,
    delta: i64,
    limits: &SearchLimits,
) -> Result<SeparationReport> {
    require(!a.is_empty(), "set must be nonempty")?;
    require(max_h >= 1, "level must be at least 1")?;
    require(delta >= 1, "delta must be at least 1")?;

    let mut per_level: Vec<Vec<(i64, Vec<i64>)>> = Vec::with_capacity(max_h as usize);
    for h in 1..=max_h {
        let report = check_bh_with(a, h, delta, limits)?;
        if !report.pass {
            return Ok(report);
        }
        let mut sums = multisets(a, h, limits)?;
        sums.sort();
        sums.dedup_by(|b, a| a.0 == b.0); // keep the lex-first tuple per sum
        per_level.push(sums);
    }

    for h1 in 0..per_level.len() {
        for h2 in h1 + 1..per_level.len() {
            let (xs, ys) = (&per_level[h1], &per_level[h2]);
            let (mut i, mut j) = (0usize, 0usize);
            while i < xs.len() && j < ys.len() {
                let gap = (xs[i].0 - ys[j].0).abs();
                if gap < delta {
                    return Ok(SeparationReport::fail(SumPair::new(
                        xs[i].1.clone(),
                        ys[j].1.clone(),
                    )));
                }
                if xs[i].0 <= ys[j].0 {
                    i += 1;
                } else {
                    j += 1;
                }
            }
        }
    }
    Ok(SeparationReport::pass())
}

/// Are all 2^|A| subset sums of `a` pairwise at least Δ apart? The empty
/// subset contributes the sum 0.
pub fn check_subset_sums(a: &IntSet, delta: i64) -> Result<SeparationReport> {
    check_subset_sums_with(a, delta, &SearchLimits::default())
}

pub fn check_subset_sums_with(
    a: &IntSet,
    delta: i64,
    limits: &SearchLimits,
) -> Result<SeparationReport> {
    require(delta >= 1, "delta must be at least 1")?;
    let m = a.len();
    if m as u32 > limits.subset_cap {
        return Err(Error::SubsetCap {
            size: m,
            cap: limits.subset_cap,
        });
    }
    let elems = a.elements();
    let mut sums: Vec<(i64, u32)> = Vec::with_capacity(1 << m);
    for mask in 0u32..(1u32 << m) {
        let mut s: i128 = 0;
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            s += elems[i] as i128;
            rest &= rest - 1;
        }
        let s = i64::try_from(s).map_err(|_| Error::Overflow("subset sum"))?;
        sums.push((s, mask));
    }
    sums.sort_unstable();
    let decode = |mask: u32| -> Vec<i64> {
        (0..m)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| elems[i])
            .collect()
    };
    for pair in sums.windows(2) {
        if pair[1].0 - pair[0].0 < delta {
            return Ok(SeparationReport::fail(SumPair::new(
                decode(pair[0].1),
                decode(pair[1].1),
            )));
        }
    }
    Ok(SeparationReport::pass())
}

/// The powers g, g², …, g^count.
pub fn geometric_set(g: i64, count: u32) -> Result<IntSet> {
    if g < 2 {
        return Err(Error::InvalidParameter("g must be at least 2".into()));
    }
    if count == 0 {
        return Err(Error::InvalidParameter("count must be at least 1".into()));
    }
    let mut elems = Vec::with_capacity(count as usize);
    let mut p: i64 = 1;
    for _ in 0..count {
        p = p.checked_mul(g).ok_or(Error::Overflow("geometric power"))?;
        elems.push(p);
    }
    Ok(IntSet::from_sorted_unchecked(elems))
}

/// Dispatch a [`SeparationQuery`] to the matching check.
pub fn run_check(query: &SeparationQuery, limits: &SearchLimits) -> Result<SeparationReport> {
    match query.check {
        SeparationCheck::HFold { h } => check_bh_with(&query.set, h, query.delta, limits),
        SeparationCheck::Level { max_h } => {
            check_level_with(&query.set, max_h, query.delta, limits)
        }
        SeparationCheck::SubsetSums => check_subset_sums_with(&query.set, query.delta, limits),
    }
}
