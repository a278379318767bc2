//! Error type shared by every module of the engine.

use crate::separated::SeparationReport;
use crate::spectrum::Spectrum;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes of the engine.
///
/// Resource limits ([`Budget`](Error::Budget), [`TupleCap`](Error::TupleCap),
/// [`SubsetCap`](Error::SubsetCap)) are ordinary outcomes of bounded searches,
/// not bugs; callers decide whether to retry with larger limits.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("operation requires a nonempty set")]
    EmptySet,

    #[error("invalid set literal: {0}")]
    Parse(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    /// The profile-evaluation budget ran out. For spectrum enumerations the
    /// values collected so far are attached, marked uncertified.
    #[error("evaluation budget exhausted after {spent} profile evaluations")]
    Budget {
        spent: u64,
        partial: Option<Box<Spectrum>>,
    },

    #[error("multiset enumeration needs {needed} tuples, cap is {cap}")]
    TupleCap { needed: u128, cap: u64 },

    #[error("subset-sum check capped at {cap} elements, set has {size}")]
    SubsetCap { size: usize, cap: u32 },

    /// The h-fold sumset consists of isolated elements only, so the
    /// best-run statistic is undefined.
    #[error("h-fold sumset contains no interval")]
    NoInterval,

    #[error("{kind} is not strictly increasing at k = {k}: {prev} followed by {next}")]
    NotStrictlyIncreasing {
        kind: &'static str,
        k: u32,
        prev: i64,
        next: i64,
    },

    /// A construction aborted because its base sequence failed the
    /// separation precondition; the failing report is attached.
    #[error("base sequence is not sufficiently separated")]
    SeparationPrecondition { report: Box<SeparationReport> },
}
