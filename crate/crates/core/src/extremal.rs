//! The four extremal functions and the dual function, with witnesses and
//! explicit certificate status.
//!
//! `n_basis` and `k_dual` are exact: their search spaces provably contain an
//! optimizer. For a nonnegative set containing 0, any element above
//! ℓ_h(prefix)+1 can never extend the initial run, so an optimal set may be
//! assumed to satisfy `a(i+1) ≤ ℓ_h({a1..ai}) + 1`; that yields a finite DFS
//! tree without an a-priori global bound. The branch-and-bound completion
//! bound iterates `L ← h·(L+1)` once per remaining slot, which dominates the
//! true reachable statistic because a new maximum element b bounds the new
//! statistic by h·b ≤ h·(L+1).
//!
//! The signed and best-run variants have no comparable truncation theorem;
//! their explored bounds are explicit inputs and their results are labeled
//! `LowerBound`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::SearchLimits;
use crate::set::{IntSet, Interval};
use crate::sumset::{self, SumStack};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum ExtremalKind {
    #[serde(rename = "n")]
    N,
    #[serde(rename = "n_sharp")]
    NSharp,
    #[serde(rename = "m")]
    M,
    #[serde(rename = "m_sharp")]
    MSharp,
    #[serde(rename = "k_dual")]
    KDual,
}

impl fmt::Display for ExtremalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ExtremalKind::N => "n",
            ExtremalKind::NSharp => "n_sharp",
            ExtremalKind::M => "m",
            ExtremalKind::MSharp => "m_sharp",
            ExtremalKind::KDual => "k_dual",
        };
        write!(f, "{s}")
    }
}

/// Whether the explored space provably contains an optimizer.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Certificate {
    Exact,
    LowerBound,
}

/// Value of one extremal function with the set attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalResult {
    pub kind: ExtremalKind,
    pub h: u32,
    /// k for the four size-indexed functions, n for the dual function.
    pub k_or_n: i64,
    pub value: i64,
    pub witness: IntSet,
    pub certificate: Certificate,
    /// Human-readable description of the explored space.
    pub search_bound: String,
    /// For the signed best-run function: the residue r ∈ [0, h−1] of the
    /// witness run start after translation normalization.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub normalization: Option<i64>,
}

impl ExtremalResult {
    /// Re-run the sumset engine on the witness and confirm it attains the
    /// recorded value.
    pub fn revalidate(&self, limits: &SearchLimits) -> Result<bool> {
        let ok = match self.kind {
            ExtremalKind::N | ExtremalKind::M => {
                self.witness.len() as i64 == self.k_or_n
                    && sumset::ell_with(&self.witness, self.h, limits)? == Some(self.value)
            }
            ExtremalKind::NSharp | ExtremalKind::MSharp => {
                self.witness.len() as i64 == self.k_or_n
                    && sumset::ell_sharp_with(&self.witness, self.h, limits)?.map(|w| w.length)
                        == Some(self.value)
            }
            ExtremalKind::KDual => {
                self.witness.len() as i64 == self.value
                    && sumset::ell_with(&self.witness, self.h, limits)?
                        .is_some_and(|l| l >= self.k_or_n)
            }
        };
        Ok(ok)
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.to_string()))
    }
}

/// Upper bound on the statistic reachable from a prefix with statistic
/// `l` and `slots` elements still to place.
fn completion_bound(h: u32, l: i64, slots: u32) -> i64 {
    let h = h as i128;
    let mut cur = l as i128;
    for _ in 0..slots {
        cur = h * (cur + 1);
        if cur > i64::MAX as i128 / 2 {
            return i64::MAX / 2;
        }
    }
    cur as i64
}

/// Mask capacity that provably exceeds any statistic the DFS can reach.
fn dfs_capacity(h: u32, k: u32, limits: &SearchLimits) -> Result<usize> {
    let bound = completion_bound(h, 0, k.saturating_sub(1));
    let bits = bound as u128 + 2;
    if bits > limits.dense_width_cap as u128 {
        return Err(Error::InvalidParameter(format!(
            "search bound needs {bits} mask bits, dense width cap is {}",
            limits.dense_width_cap
        )));
    }
    Ok(bits as usize)
}

struct DfsBest {
    value: i64,
    witness: Vec<i64>,
}

fn n_basis_dfs(
    stack: &mut SumStack,
    elems: &mut Vec<i64>,
    h: u32,
    k: u32,
    limits: &SearchLimits,
    best: &mut DfsBest,
) -> Result<()> {
    let l = stack.ell().expect("0 is always in the prefix sumset");
    if elems.len() == k as usize {
        if l > best.value {
            best.value = l;
            best.witness = elems.clone();
        }
        return Ok(());
    }
    let slots = k - elems.len() as u32;
    if completion_bound(h, l, slots) <= best.value {
        return Ok(());
    }
    let last = *elems.last().expect("prefix starts at {0}");
    for b in last + 1..=l + 1 {
        limits.charge(1)?;
        stack.save();
        stack.push(b);
        elems.push(b);
        let r = n_basis_dfs(stack, elems, h, k, limits, best);
        elems.pop();
        stack.restore();
        r?;
    }
    Ok(())
}

/// Exact n_h(k): the largest n such that some k-element set of nonnegative
/// integers covers `[0,n]` with its h-fold sums.
pub fn n_basis(h: u32, k: u32) -> Result<ExtremalResult> {
    n_basis_with(h, k, &SearchLimits::default())
}

pub fn n_basis_with(h: u32, k: u32, limits: &SearchLimits) -> Result<ExtremalResult> {
    require(h >= 1, "h must be at least 1")?;
    require(k >= 1, "k must be at least 1")?;
    let capacity = dfs_capacity(h, k, limits)?;
    let mut stack = SumStack::new(h, 0, capacity);
    limits.charge(1)?;
    stack.push(0);
    let mut elems = vec![0i64];
    let mut best = DfsBest {
        value: -1,
        witness: Vec::new(),
    };
    n_basis_dfs(&mut stack, &mut elems, h, k, limits, &mut best)?;
    Ok(ExtremalResult {
        kind: ExtremalKind::N,
        h,
        k_or_n: k as i64,
        value: best.value,
        witness: IntSet::from_sorted_unchecked(best.witness),
        certificate: Certificate::Exact,
        search_bound: format!("A ⊆ N0, 0 ∈ A, |A| = {k}, DFS with a(i+1) ≤ ell(prefix)+1"),
        normalization: None,
    })
}

fn k_dual_dfs(
    stack: &mut SumStack,
    elems: &mut Vec<i64>,
    h: u32,
    k: u32,
    n: i64,
    limits: &SearchLimits,
    found: &mut Option<Vec<i64>>,
) -> Result<()> {
    if found.is_some() {
        return Ok(());
    }
    let l = stack.ell().expect("0 is always in the prefix sumset");
    if elems.len() == k as usize {
        if l >= n {
            *found = Some(elems.clone());
        }
        return Ok(());
    }
    let slots = k - elems.len() as u32;
    if completion_bound(h, l, slots) < n {
        return Ok(());
    }
    let last = *elems.last().expect("prefix starts at {0}");
    for b in last + 1..=(l + 1).min(n) {
        limits.charge(1)?;
        stack.save();
        stack.push(b);
        elems.push(b);
        let r = k_dual_dfs(stack, elems, h, k, n, limits, found);
        elems.pop();
        stack.restore();
        r?;
        if found.is_some() {
            return Ok(());
        }
    }
    Ok(())
}

/// Exact k_h(n): the smallest k such that some k-element subset of `[0,n]`
/// covers `[0,n]` with its h-fold sums. Elements above n never appear in
/// sums ≤ n over nonnegative sets, so the space `[0,n]` is complete.
pub fn k_dual(h: u32, n: i64) -> Result<ExtremalResult> {
    k_dual_with(h, n, &SearchLimits::default())
}

pub fn k_dual_with(h: u32, n: i64, limits: &SearchLimits) -> Result<ExtremalResult> {
    require(h >= 1, "h must be at least 1")?;
    require(n >= 0, "n must be nonnegative")?;
    let capacity: usize = {
        let bits = (h as i128) * (n as i128) + 2;
        if bits > limits.dense_width_cap as i128 {
            return Err(Error::InvalidParameter(format!(
                "n = {n} needs {bits} mask bits, dense width cap is {}",
                limits.dense_width_cap
            )));
        }
        bits as usize
    };
    let mut result = None;
    for k in 1..=(n as u32 + 1) {
        let mut stack = SumStack::new(h, 0, capacity);
        limits.charge(1)?;
        stack.push(0);
        let mut elems = vec![0i64];
        let mut found = None;
        k_dual_dfs(&mut stack, &mut elems, h, k, n, limits, &mut found)?;
        if let Some(witness) = found {
            result = Some((k, witness));
            break;
        }
    }
    let (k, witness) = result.expect("A = [0,n] always covers [0,n]");
    Ok(ExtremalResult {
        kind: ExtremalKind::KDual,
        h,
        k_or_n: n,
        value: k as i64,
        witness: IntSet::from_sorted_unchecked(witness),
        certificate: Certificate::Exact,
        search_bound: format!("A ⊆ [0,{n}], smallest |A| with [0,{n}] covered"),
        normalization: None,
    })
}

/// Best candidate from a bounded enumeration: value and witness elements.
type Incumbent = Option<(i64, Vec<i64>)>;

/// Shared enumerator for the best-run maxima over `{0} ∪ S`, `S ⊆ [1, M]`,
/// `|S| = k−1`. Returns `(best, truncated)`.
fn max_ell_sharp_min0(
    h: u32,
    k: u32,
    max_element: i64,
    limits: &SearchLimits,
) -> Result<(Incumbent, bool)> {
    let capacity = ((h as i128) * (max_element as i128) + 2) as usize;
    if capacity as u128 > limits.dense_width_cap as u128 {
        return Err(Error::InvalidParameter(format!(
            "max_element = {max_element} needs {capacity} mask bits, cap is {}",
            limits.dense_width_cap
        )));
    }
    let mut best: Incumbent = None;
    let mut truncated = false;

    if k == 1 {
        limits.charge(1)?;
        let mut stack = SumStack::new(h, 0, capacity);
        stack.push(0);
        if let Some((len, _)) = stack.ell_sharp() {
            best = Some((len, vec![0]));
        }
        return Ok((best, false));
    }

    // partition by the smallest nonzero element
    'outer: for s in 1..=max_element - (k as i64 - 2) {
        let rest = (max_element - s) as u64;
        let leaves = sumset::binomial(rest as u128, (k - 2) as u128);
        if limits.charge(leaves.min(u64::MAX as u128) as u64).is_err() {
            truncated = true;
            break 'outer;
        }
        let mut stack = SumStack::new(h, 0, capacity);
        stack.push(0);
        stack.push(s);
        let mut elems = vec![0i64, s];
        enumerate_exact(
            &mut stack,
            &mut elems,
            s + 1,
            max_element,
            k as usize,
            &mut |stack, elems| {
                if let Some((len, _)) = stack.ell_sharp() {
                    if best.as_ref().is_none_or(|(b, _)| len > *b) {
                        best = Some((len, elems.to_vec()));
                    }
                }
            },
        );
    }
    Ok((best, truncated))
}

/// Visit every extension of the current stack by elements from
/// `[from, hi]` up to exactly `target` total elements, lexicographically.
fn enumerate_exact(
    stack: &mut SumStack,
    elems: &mut Vec<i64>,
    from: i64,
    hi: i64,
    target: usize,
    visit: &mut impl FnMut(&SumStack, &[i64]),
) {
    if elems.len() == target {
        visit(stack, elems);
        return;
    }
    let need = (target - elems.len()) as i64;
    let mut b = from;
    while hi - b >= need - 1 {
        stack.save();
        stack.push(b);
        elems.push(b);
        enumerate_exact(stack, elems, b + 1, hi, target, visit);
        elems.pop();
        stack.restore();
        b += 1;
    }
}

/// Largest best-run statistic over k-element subsets of `[0, max_element]`
/// with minimum 0. No truncation theorem bounds the optimal diameter, so
/// the certificate is always `LowerBound`.
pub fn n_sharp(h: u32, k: u32, max_element: i64) -> Result<ExtremalResult> {
    n_sharp_with(h, k, max_element, &SearchLimits::default())
}

pub fn n_sharp_with(
    h: u32,
    k: u32,
    max_element: i64,
    limits: &SearchLimits,
) -> Result<ExtremalResult> {
    require(h >= 1, "h must be at least 1")?;
    require(k >= 1, "k must be at least 1")?;
    require(
        max_element >= k as i64 - 1,
        "max_element must be at least k-1",
    )?;
    let (best, truncated) = max_ell_sharp_min0(h, k, max_element, limits)?;
    let (value, witness) = best.ok_or(Error::NoInterval)?;
    let mut search_bound = format!("A ⊆ [0,{max_element}], min(A) = 0, |A| = {k}");
    if truncated {
        search_bound.push_str(" (budget-truncated)");
    }
    Ok(ExtremalResult {
        kind: ExtremalKind::NSharp,
        h,
        k_or_n: k as i64,
        value,
        witness: IntSet::from_sorted_unchecked(witness),
        certificate: Certificate::LowerBound,
        search_bound,
        normalization: None,
    })
}

/// Signed best-run maximum on the same explored bound. Translating any
/// signed witness so its minimum is 0 preserves the best-run length, so the
/// search space coincides with `n_sharp`'s; the result additionally records
/// the residue of the witness run start after translation normalization.
pub fn m_sharp(h: u32, k: u32, max_element: i64) -> Result<ExtremalResult> {
    m_sharp_with(h, k, max_element, &SearchLimits::default())
}

pub fn m_sharp_with(
    h: u32,
    k: u32,
    max_element: i64,
    limits: &SearchLimits,
) -> Result<ExtremalResult> {
    let base = n_sharp_with(h, k, max_element, limits)?;
    let run = sumset::ell_sharp_with(&base.witness, h, limits)?
        .expect("witness attains a defined best run");
    let r = run.interval.lo().rem_euclid(h as i64);
    let mut search_bound = base.search_bound.clone();
    search_bound.push_str("; signed optima translate into this space");
    Ok(ExtremalResult {
        kind: ExtremalKind::MSharp,
        normalization: Some(r),
        search_bound,
        ..base
    })
}

/// Largest initial-run statistic over k-element subsets of a signed window.
/// No finite-window completeness theorem exists; the window is an explicit
/// input and the certificate is `LowerBound`.
pub fn m_basis(h: u32, k: u32, window: Interval) -> Result<ExtremalResult> {
    m_basis_with(h, k, window, &SearchLimits::default())
}

pub fn m_basis_with(
    h: u32,
    k: u32,
    window: Interval,
    limits: &SearchLimits,
) -> Result<ExtremalResult> {
    require(h >= 1, "h must be at least 1")?;
    require(k >= 1, "k must be at least 1")?;
    require(
        window.lo() <= 0 && 0 <= window.hi(),
        "window must contain 0",
    )?;
    let (lo, hi) = (window.lo(), window.hi());
    require((k as i64) <= hi - lo + 1, "window too small for k elements")?;
    let capacity = ((h as i128) * ((hi - lo) as i128) + 2) as usize;
    if capacity as u128 > limits.dense_width_cap as u128 {
        return Err(Error::InvalidParameter(format!(
            "window {window} needs {capacity} mask bits, cap is {}",
            limits.dense_width_cap
        )));
    }

    let mut best: Incumbent = None;
    let mut truncated = false;
    'outer: for s in lo..=hi - (k as i64 - 1) {
        let rest = (hi - s) as u64;
        let leaves = sumset::binomial(rest as u128, (k - 1) as u128);
        if limits.charge(leaves.min(u64::MAX as u128) as u64).is_err() {
            truncated = true;
            break 'outer;
        }
        let mut stack = SumStack::new(h, lo, capacity);
        stack.push(s);
        let mut elems = vec![s];
        enumerate_exact(
            &mut stack,
            &mut elems,
            s + 1,
            hi,
            k as usize,
            &mut |stack, elems| {
                if let Some(l) = stack.ell() {
                    if best.as_ref().is_none_or(|(b, _)| l > *b) {
                        best = Some((l, elems.to_vec()));
                    }
                }
            },
        );
    }
    let (value, witness) =
        best.ok_or_else(|| Error::InvalidParameter("no candidate has 0 in its sumset".into()))?;
    let mut search_bound = format!("A ⊆ [{lo},{hi}], |A| = {k}");
    if truncated {
        search_bound.push_str(" (budget-truncated)");
    }
    Ok(ExtremalResult {
        kind: ExtremalKind::M,
        h,
        k_or_n: k as i64,
        value,
        witness: IntSet::from_sorted_unchecked(witness),
        certificate: Certificate::LowerBound,
        search_bound,
        normalization: None,
    })
}

/// n_h(k) for k = 1..=k_max, failing if the sequence ever fails to increase
/// strictly.
pub fn strictness_scan(h: u32, k_max: u32) -> Result<Vec<(u32, i64)>> {
    strictness_scan_with(h, k_max, &SearchLimits::default())
}

pub fn strictness_scan_with(h: u32, k_max: u32, limits: &SearchLimits) -> Result<Vec<(u32, i64)>> {
    require(k_max >= 2, "k_max must be at least 2")?;
    let mut out = Vec::with_capacity(k_max as usize);
    for k in 1..=k_max {
        let r = n_basis_with(h, k, limits)?;
        if let Some(&(pk, prev)) = out.last() {
            if r.value <= prev {
                return Err(Error::NotStrictlyIncreasing {
                    kind: "n_h",
                    k: pk + 1,
                    prev,
                    next: r.value,
                });
            }
        }
        out.push((k, r.value));
    }
    Ok(out)
}
