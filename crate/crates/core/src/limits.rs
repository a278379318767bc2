//! Resource limits shared across searches and enumerations.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

/// Caps on the work a single run may perform.
///
/// The profile budget counts candidate-set evaluations across one run and is
/// shared (atomically) by all enumeration partitions. The remaining fields
/// cap individual combinatorial blowups.
#[derive(Debug)]
pub struct SearchLimits {
    budget: AtomicU64,
    initial_budget: u64,
    /// Widest dense bitmask the sumset kernel will allocate, in bits.
    pub dense_width_cap: u64,
    /// Most index multisets a separation check will enumerate.
    pub tuple_cap: u64,
    /// Largest set size accepted by the subset-sum separation check.
    pub subset_cap: u32,
}

pub const DEFAULT_PROFILE_BUDGET: u64 = 1_000_000_000;
pub const DEFAULT_DENSE_WIDTH_CAP: u64 = 1 << 26;
pub const DEFAULT_TUPLE_CAP: u64 = 2_000_000;
pub const DEFAULT_SUBSET_CAP: u32 = 20;

impl Default for SearchLimits {
    fn default() -> Self {
        Self::with_budget(DEFAULT_PROFILE_BUDGET)
    }
}

impl Clone for SearchLimits {
    fn clone(&self) -> Self {
        SearchLimits {
            budget: AtomicU64::new(self.budget.load(Ordering::Relaxed)),
            initial_budget: self.initial_budget,
            dense_width_cap: self.dense_width_cap,
            tuple_cap: self.tuple_cap,
            subset_cap: self.subset_cap,
        }
    }
}

impl SearchLimits {
    pub fn with_budget(budget: u64) -> Self {
        SearchLimits {
            budget: AtomicU64::new(budget),
            initial_budget: budget,
            dense_width_cap: DEFAULT_DENSE_WIDTH_CAP,
            tuple_cap: DEFAULT_TUPLE_CAP,
            subset_cap: DEFAULT_SUBSET_CAP,
        }
    }

    pub fn dense_width_cap(mut self, bits: u64) -> Self {
        self.dense_width_cap = bits;
        self
    }

    pub fn tuple_cap(mut self, cap: u64) -> Self {
        self.tuple_cap = cap;
        self
    }

    pub fn subset_cap(mut self, cap: u32) -> Self {
        self.subset_cap = cap;
        self
    }

    /// Reserve `n` evaluations, failing once the budget is exhausted.
    pub fn charge(&self, n: u64) -> Result<()> {
        let mut cur = self.budget.load(Ordering::Relaxed);
        loop {
            if cur < n {
                return Err(Error::Budget {
                    spent: self.spent(),
                    partial: None,
                });
            }
            match self.budget.compare_exchange_weak(
                cur,
                cur - n,
                Ordering::Relaxed,
                Ordering::Relaxed,
            ) {
                Ok(_) => return Ok(()),
                Err(seen) => cur = seen,
            }
        }
    }

    /// Evaluations consumed so far.
    pub fn spent(&self) -> u64 {
        self.initial_budget - self.budget.load(Ordering::Relaxed)
    }

    pub fn remaining(&self) -> u64 {
        self.budget.load(Ordering::Relaxed)
    }

    pub fn exhausted(&self) -> bool {
        self.remaining() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charge_counts_down_and_errors_out() {
        let limits = SearchLimits::with_budget(10);
        assert!(limits.charge(4).is_ok());
        assert!(limits.charge(6).is_ok());
        assert_eq!(limits.spent(), 10);
        assert!(limits.exhausted());
        let err = limits.charge(1).unwrap_err();
        assert!(matches!(err, Error::Budget { spent: 10, .. }));
    }

    #[test]
    fn clone_snapshots_remaining() {
        let limits = SearchLimits::with_budget(5);
        limits.charge(2).unwrap();
        let snap = limits.clone();
        assert_eq!(snap.remaining(), 3);
    }
}
