//! Enumeration of achievable-statistic spectra and basis counting.
//!
//! For the nonnegative ground set the enumeration is certified complete by a
//! truncation argument: a sum that reaches a value ≤ n+1 over nonnegative
//! elements uses only elements ≤ n+1, so the initial-run statistic of A
//! depends only on A ∩ [0, ℓ+1], and ℓ ≤ n_h(k) for |A| ≤ k. Enumerating
//! A ⊆ [0, n_h(k)+1] with 0 ∈ A and |A| ≤ k therefore sees every achievable
//! value; sets smaller than k are padded by distant elements that cannot
//! disturb the statistic. No such completeness theorem exists for signed
//! windows or for the best-run spectra, so those results are labeled
//! uncertified lower approximations with their windows recorded.
//!
//! Enumeration partitions the subset space by the second-smallest element;
//! partitions run independently and merge their value sets, so the result is
//! independent of the partition count. The evaluation budget is reserved per
//! partition up front, which keeps truncation points deterministic.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extremal;
use crate::limits::SearchLimits;
use crate::set::{GroundSet, IntSet, Interval};
use crate::sumset::{binomial, SumStack};

/// Which statistic a spectrum collects.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum SpectrumStatistic {
    #[serde(rename = "ell")]
    Ell,
    #[serde(rename = "ell_sharp")]
    EllSharp,
}

/// A computed spectrum: the set of statistic values achievable by k-element
/// subsets of the ground set, plus the bound that certifies (or merely
/// delimits) the enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spectrum {
    pub ground: GroundSet,
    pub h: u32,
    pub k: u32,
    pub values: IntSet,
    pub certified: bool,
    /// Largest element considered during enumeration.
    pub enumeration_bound: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub window: Option<Interval>,
    pub statistic: SpectrumStatistic,
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.to_string()))
    }
}

fn check_capacity(bits: i128, limits: &SearchLimits) -> Result<usize> {
    if bits > limits.dense_width_cap as i128 {
        return Err(Error::InvalidParameter(format!(
            "enumeration needs {bits} mask bits, dense width cap is {}",
            limits.dense_width_cap
        )));
    }
    Ok(bits as usize)
}

/// Subsets of an m-element pool with size ≤ cap, including the empty one.
fn subsets_up_to(m: u64, cap: u64) -> u128 {
    (0..=cap.min(m))
        .map(|j| binomial(m as u128, j as u128))
        .sum()
}

/// Visit every subset of `[from, hi]` with at most `slots` elements,
/// lexicographically, calling `visit` at every node (including the current
/// one before any extension).
fn enumerate_up_to(
    stack: &mut SumStack,
    from: i64,
    hi: i64,
    slots: u32,
    visit: &mut impl FnMut(&SumStack),
) {
    visit(stack);
    if slots == 0 {
        return;
    }
    for b in from..=hi {
        stack.save();
        stack.push(b);
        enumerate_up_to(stack, b + 1, hi, slots - 1, visit);
        stack.restore();
    }
}

/// Exact, certified L spectrum over the nonnegative ground set.
pub fn spectrum_nonneg(h: u32, k: u32) -> Result<Spectrum> {
    spectrum_nonneg_with(h, k, &SearchLimits::default())
}

pub fn spectrum_nonneg_with(h: u32, k: u32, limits: &SearchLimits) -> Result<Spectrum> {
    require(h >= 1, "h must be at least 1")?;
    require(k >= 1, "k must be at least 1")?;
    let n_max = extremal::n_basis_with(h, k, limits)?.value;
    let m = n_max + 1;
    let capacity = check_capacity((h as i128) * (m as i128) + 2, limits)?;

    // partition 0 is the bare {0}; partition s ≥ 1 holds the sets whose
    // smallest nonzero element is s
    let mut charged: Vec<i64> = Vec::new();
    let mut truncated = false;
    if limits.charge(1).is_err() {
        truncated = true;
    }
    if !truncated && k >= 2 {
        for s in 1..=m {
            let count = subsets_up_to((m - s) as u64, (k - 2) as u64);
            if limits.charge(count.min(u64::MAX as u128) as u64).is_err() {
                truncated = true;
                break;
            }
            charged.push(s);
        }
    }

    let mut values: BTreeSet<i64> = if truncated && charged.is_empty() {
        BTreeSet::new()
    } else {
        [0i64].into_iter().collect() // ℓ({0}) = 0
    };
    let partition_values: Vec<BTreeSet<i64>> = charged
        .par_iter()
        .map(|&s| {
            let mut local = BTreeSet::new();
            let mut stack = SumStack::new(h, 0, capacity);
            stack.push(0);
            stack.push(s);
            enumerate_up_to(&mut stack, s + 1, m, k - 2, &mut |st| {
                local.insert(st.ell().expect("0 is in every candidate"));
            });
            local
        })
        .collect();
    for part in partition_values {
        values.extend(part);
    }

    let spectrum = Spectrum {
        ground: GroundSet::NonNegatives,
        h,
        k,
        values: IntSet::from_sorted_unchecked(values.into_iter().collect()),
        certified: !truncated,
        enumeration_bound: m,
        window: None,
        statistic: SpectrumStatistic::Ell,
    };
    if truncated {
        return Err(Error::Budget {
            spent: limits.spent(),
            partial: Some(Box::new(spectrum)),
        });
    }
    Ok(spectrum)
}

/// Uncertified L spectrum over k-element subsets of a signed window; a lower
/// approximation of the full signed spectrum.
pub fn spectrum_int(h: u32, k: u32, window: Interval) -> Result<Spectrum> {
    spectrum_int_with(h, k, window, &SearchLimits::default())
}

pub fn spectrum_int_with(
    h: u32,
    k: u32,
    window: Interval,
    limits: &SearchLimits,
) -> Result<Spectrum> {
    require(h >= 1, "h must be at least 1")?;
    require(k >= 1, "k must be at least 1")?;
    require(
        window.lo() <= 0 && 0 <= window.hi(),
        "window must contain 0",
    )?;
    let (lo, hi) = (window.lo(), window.hi());
    require((k as i64) <= hi - lo + 1, "window too small for k elements")?;
    let capacity = check_capacity((h as i128) * ((hi - lo) as i128) + 2, limits)?;

    let mut charged: Vec<i64> = Vec::new();
    let mut truncated = false;
    for s in lo..=hi - (k as i64 - 1) {
        let count = binomial((hi - s) as u128, (k - 1) as u128);
        if limits.charge(count.min(u64::MAX as u128) as u64).is_err() {
            truncated = true;
            break;
        }
        charged.push(s);
    }

    let partition_values: Vec<BTreeSet<i64>> = charged
        .par_iter()
        .map(|&s| {
            let mut local = BTreeSet::new();
            let mut stack = SumStack::new(h, lo, capacity);
            stack.push(s);
            enumerate_leaves(&mut stack, s + 1, hi, k - 1, &mut |st| {
                if let Some(l) = st.ell() {
                    local.insert(l);
                }
            });
            local
        })
        .collect();
    let mut values = BTreeSet::new();
    for part in partition_values {
        values.extend(part);
    }

    let spectrum = Spectrum {
        ground: GroundSet::AllIntegers,
        h,
        k,
        values: IntSet::from_sorted_unchecked(values.into_iter().collect()),
        certified: false,
        enumeration_bound: hi,
        window: Some(window),
        statistic: SpectrumStatistic::Ell,
    };
    if truncated {
        return Err(Error::Budget {
            spent: limits.spent(),
            partial: Some(Box::new(spectrum)),
        });
    }
    Ok(spectrum)
}

/// Visit every extension of the stack to exactly `slots` more elements from
/// `[from, hi]`, calling `visit` only on the full-size leaves.
fn enumerate_leaves(
    stack: &mut SumStack,
    from: i64,
    hi: i64,
    slots: u32,
    visit: &mut impl FnMut(&SumStack),
) {
    if slots == 0 {
        visit(stack);
        return;
    }
    let mut b = from;
    while hi - b >= slots as i64 - 1 {
        stack.save();
        stack.push(b);
        enumerate_leaves(stack, b + 1, hi, slots - 1, visit);
        stack.restore();
        b += 1;
    }
}

/// Uncertified L# spectrum: best-run lengths achievable by k-element subsets
/// of `[0, bound]`. Translation invariance of the best-run statistic lets the
/// enumeration fix min(A) = 0 without changing the value set.
pub fn spectrum_sharp(h: u32, k: u32, bound: i64) -> Result<Spectrum> {
    spectrum_sharp_with(h, k, bound, &SearchLimits::default())
}

pub fn spectrum_sharp_with(h: u32, k: u32, bound: i64, limits: &SearchLimits) -> Result<Spectrum> {
    require(h >= 1, "h must be at least 1")?;
    require(k >= 1, "k must be at least 1")?;
    require(bound >= 1, "bound must be at least 1")?;
    require(k as i64 <= bound + 1, "bound too small for k elements")?;
    let capacity = check_capacity((h as i128) * (bound as i128) + 2, limits)?;

    let mut charged: Vec<i64> = Vec::new();
    let mut truncated = false;
    if k == 1 {
        if limits.charge(1).is_err() {
            truncated = true;
        }
    } else {
        for s in 1..=bound - (k as i64 - 2) {
            let count = binomial((bound - s) as u128, (k - 2) as u128);
            if limits.charge(count.min(u64::MAX as u128) as u64).is_err() {
                truncated = true;
                break;
            }
            charged.push(s);
        }
    }

    // for k = 1 the single candidate {0} has a singleton sumset and no run,
    // so the value set stays empty
    let mut values: BTreeSet<i64> = BTreeSet::new();
    let partition_values: Vec<BTreeSet<i64>> = charged
        .par_iter()
        .map(|&s| {
            let mut local = BTreeSet::new();
            let mut stack = SumStack::new(h, 0, capacity);
            stack.push(0);
            stack.push(s);
            enumerate_leaves(&mut stack, s + 1, bound, k - 2, &mut |st| {
                if let Some((len, _)) = st.ell_sharp() {
                    local.insert(len);
                }
            });
            local
        })
        .collect();
    for part in partition_values {
        values.extend(part);
    }

    let spectrum = Spectrum {
        ground: GroundSet::NonNegatives,
        h,
        k,
        values: IntSet::from_sorted_unchecked(values.into_iter().collect()),
        certified: false,
        enumeration_bound: bound,
        window: None,
        statistic: SpectrumStatistic::EllSharp,
    };
    if truncated {
        return Err(Error::Budget {
            spent: limits.spent(),
            partial: Some(Box::new(spectrum)),
        });
    }
    Ok(spectrum)
}

/// Number of subsets of `[0,n]` whose h-fold sums cover `[0,n]`.
pub fn count_bases(h: u32, n: i64) -> Result<u64> {
    count_bases_with(h, n, &SearchLimits::default())
}

pub fn count_bases_with(h: u32, n: i64, limits: &SearchLimits) -> Result<u64> {
    require(h >= 1, "h must be at least 1")?;
    require(n >= 0, "n must be nonnegative")?;
    if n == 0 {
        limits.charge(1)?;
        return Ok(1); // only {0} covers [0,0]
    }
    // a qualifying set must contain 0 (to represent 0) and 1 (to represent 1)
    let capacity = check_capacity((h as i128) * (n as i128) + 2, limits)?;
    limits.charge(1)?;
    let mut charged: Vec<i64> = Vec::new();
    for s in 2..=n {
        let count = subsets_up_to((n - s) as u64, (n - s) as u64);
        limits.charge(count.min(u64::MAX as u128) as u64)?;
        charged.push(s);
    }

    let mut total = 0u64;
    {
        let mut stack = SumStack::new(h, 0, capacity);
        stack.push(0);
        stack.push(1);
        if stack.ell().expect("0 covered") >= n {
            total += 1; // {0,1} itself
        }
    }
    let counts: Vec<u64> = charged
        .par_iter()
        .map(|&s| {
            let mut local = 0u64;
            let mut stack = SumStack::new(h, 0, capacity);
            stack.push(0);
            stack.push(1);
            stack.push(s);
            enumerate_up_to(&mut stack, s + 1, n, (n - s) as u32, &mut |st| {
                if st.ell().expect("0 covered") >= n {
                    local += 1;
                }
            });
            local
        })
        .collect();
    total += counts.iter().sum::<u64>();
    Ok(total)
}
