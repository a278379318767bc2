//! Construction and machine verification of interval 2-bases whose sumset
//! contains one designated interval and otherwise only isolated, widely
//! separated elements.
//!
//! The built set is `A = {c+j+a_j : j ∈ [0,n]} ∪ {−a_j : j ∈ [0,n]}` with
//! `a_j = g^(j+1)` for `g = Δ+1` and `Δ = max(4, 2|c| + d + 2n)`. The
//! diagonal sums `(c+j+a_j) + (−a_j) = c+j` cover `[c, c+n]`; the growth
//! condition `a_j > 2a_{j−1} + |c| + n` together with the separation of the
//! base sequence pushes every other pair of sums at least d apart. The
//! certificate is recomputed from the set alone, so the verifier, not the
//! formula, is the source of truth.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::SearchLimits;
use crate::separated::{check_level_with, check_subset_sums_with};
use crate::set::{IntSet, Interval};
use crate::sumset::{self, RunWitness};

/// Parameters and derived data of one built interval 2-basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionSpec {
    pub c: i64,
    pub n: i64,
    pub d: i64,
    pub delta: i64,
    pub g: i64,
    pub a_seq: Vec<i64>,
}

/// One reason a certificate property failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificateViolation {
    /// Property (i): a value of the designated interval is missing from 2A.
    MissingFromInterval { value: i64 },
    /// Property (ii): two sumset elements, at least one outside the
    /// designated interval, are closer than d.
    PairTooClose { x: i64, y: i64, gap: i64 },
    /// Property (iii): the best run is not the designated interval.
    RunMismatch {
        expected_length: i64,
        found: Option<RunWitness>,
    },
    /// An element outside the designated interval sits inside a run.
    ExteriorNotIsolated { value: i64 },
}

/// Recomputable proof that a set satisfies the three construction
/// properties plus full exterior isolation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionCertificate {
    /// `[c, c+n] ⊆ 2A`.
    pub property_i: bool,
    /// Pairwise gaps ≥ d whenever one endpoint lies outside `[c, c+n]`.
    pub property_ii: bool,
    /// The best run of 2A is exactly `[c, c+n]`.
    pub property_iii: bool,
    /// Every element of 2A outside `[c, c+n]` is isolated in 2A.
    pub exterior_isolated: bool,
    pub counterexamples: Vec<CertificateViolation>,
}

impl ConstructionCertificate {
    pub fn all_pass(&self) -> bool {
        self.property_i && self.property_ii && self.property_iii && self.exterior_isolated
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.to_string()))
    }
}

/// Build the 2n+2-element set whose 2-fold sumset contains `[c, c+n]`,
/// keeps everything else d-separated, and has best run exactly `[c, c+n]`.
pub fn build_interval_2basis(c: i64, n: i64, d: i64) -> Result<(IntSet, ConstructionSpec)> {
    build_interval_2basis_with(c, n, d, &SearchLimits::default())
}

pub fn build_interval_2basis_with(
    c: i64,
    n: i64,
    d: i64,
    limits: &SearchLimits,
) -> Result<(IntSet, ConstructionSpec)> {
    require(n >= 1, "n must be at least 1")?;
    require(d >= 2, "d must be at least 2")?;
    let abs_c = c.checked_abs().ok_or(Error::Overflow("construction"))?;
    let delta = 4.max(
        abs_c
            .checked_mul(2)
            .and_then(|t| t.checked_add(d))
            .and_then(|t| t.checked_add(2 * n))
            .ok_or(Error::Overflow("construction"))?,
    );
    let g = delta + 1;

    let mut a_seq = Vec::with_capacity(n as usize + 1);
    let mut p: i64 = g;
    for j in 0..=n {
        a_seq.push(p);
        if j < n {
            p = p.checked_mul(g).ok_or(Error::Overflow("geometric power"))?;
        }
    }
    require(a_seq[0] >= d, "base sequence must start at d or above")?;
    for j in 1..=n as usize {
        let floor = a_seq[j - 1]
            .checked_mul(2)
            .and_then(|t| t.checked_add(abs_c))
            .and_then(|t| t.checked_add(n))
            .ok_or(Error::Overflow("construction"))?;
        require(a_seq[j] > floor, "base sequence grows too slowly")?;
    }

    // the proof needs the base sequence separated at level 3 (multisets)
    // and under subset sums; a failed check aborts the build
    let base = IntSet::new(a_seq.clone())?;
    for report in [
        check_level_with(&base, 3, delta, limits)?,
        check_subset_sums_with(&base, delta, limits)?,
    ] {
        if !report.pass {
            return Err(Error::SeparationPrecondition {
                report: Box::new(report),
            });
        }
    }

    let mut elems = Vec::with_capacity(2 * (n as usize + 1));
    for (j, &aj) in a_seq.iter().enumerate() {
        let pos = c
            .checked_add(j as i64)
            .and_then(|t| t.checked_add(aj))
            .ok_or(Error::Overflow("construction"))?;
        elems.push(pos);
        elems.push(-aj);
    }
    elems.sort_unstable();
    elems.dedup();
    require(
        elems.len() == 2 * (n as usize + 1),
        "construction produced colliding elements",
    )?;

    Ok((
        IntSet::from_sorted_unchecked(elems),
        ConstructionSpec {
            c,
            n,
            d,
            delta,
            g,
            a_seq,
        },
    ))
}

/// Recompute 2A and check the three properties plus exterior isolation,
/// collecting every violation found.
pub fn verify_construction(a: &IntSet, c: i64, n: i64, d: i64) -> Result<ConstructionCertificate> {
    verify_construction_with(a, c, n, d, &SearchLimits::default())
}

pub fn verify_construction_with(
    a: &IntSet,
    c: i64,
    n: i64,
    d: i64,
    limits: &SearchLimits,
) -> Result<ConstructionCertificate> {
    require(!a.is_empty(), "set must be nonempty")?;
    require(n >= 1, "n must be at least 1")?;
    let hi = c.checked_add(n).ok_or(Error::Overflow("interval end"))?;
    let interval = Interval::new(c, hi)?;

    let twoa = sumset::profile_with(a, 2, limits)?;
    let mut counterexamples = Vec::new();

    let mut property_i = true;
    for x in c..=hi {
        if !twoa.sums.contains(x) {
            property_i = false;
            counterexamples.push(CertificateViolation::MissingFromInterval { value: x });
        }
    }

    let mut property_ii = true;
    let sums = twoa.sums.elements();
    for pair in sums.windows(2) {
        let (x, y) = (pair[0], pair[1]);
        if y - x < d && (!interval.contains(x) || !interval.contains(y)) {
            property_ii = false;
            counterexamples.push(CertificateViolation::PairTooClose { x, y, gap: y - x });
        }
    }

    let property_iii = match twoa.ell_sharp {
        Some(w) if w.length == n && w.interval == interval => true,
        found => {
            counterexamples.push(CertificateViolation::RunMismatch {
                expected_length: n,
                found,
            });
            false
        }
    };

    let mut exterior_isolated = true;
    for run in &twoa.runs {
        if run.len() == 0 {
            continue;
        }
        for x in run.lo()..=run.hi() {
            if !interval.contains(x) {
                exterior_isolated = false;
                counterexamples.push(CertificateViolation::ExteriorNotIsolated { value: x });
            }
        }
    }

    Ok(ConstructionCertificate {
        property_i,
        property_ii,
        property_iii,
        exterior_isolated,
        counterexamples,
    })
}

/// Translate so the best-run witness starts at its residue mod h: writes the
/// run start as `h·c0 + r` with `r ∈ [0, h−1]` and returns `(A − c0, r)`.
pub fn normalize_translation(a: &IntSet, h: u32) -> Result<(IntSet, i64)> {
    let run = sumset::ell_sharp(a, h)?.ok_or(Error::NoInterval)?;
    let start = run.interval.lo();
    let c0 = start.div_euclid(h as i64);
    let r = start.rem_euclid(h as i64);
    Ok((a.translate(-c0)?, r))
}

/// Translate so the minimum is nonnegative: returns `(A + a0, a0)` with
/// `a0 = max(0, −min(A))`.
pub fn shift_to_nonneg(a: &IntSet) -> Result<(IntSet, i64)> {
    let a0 = (-a.min_element()?).max(0);
    Ok((a.translate(a0)?, a0))
}
