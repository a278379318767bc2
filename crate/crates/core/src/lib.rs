//! A computational engine for finite additive bases.
//!
//! The crate computes h-fold sumsets of finite integer sets together with
//! their interval structure, enumerates the spectra of achievable
//! initial-run and best-run statistics, searches for the extremal functions
//! of the postage stamp family with witnesses and explicit certificate
//! status, verifies separation conditions on sums, and builds interval
//! 2-bases whose sumsets are verified property by property.
//!
//! All values are immutable and all operations are pure, so everything here
//! is safe to call from any number of concurrent contexts. Searches that
//! could run away are governed by [`SearchLimits`].

pub mod construction;
pub mod error;
pub mod extremal;
pub mod limits;
pub mod separated;
pub mod set;
pub mod spectrum;
pub mod sumset;

mod bits;

pub use error::{Error, Result};
pub use limits::SearchLimits;
pub use set::{GroundSet, IntSet, Interval};
pub use sumset::{RunWitness, SumsetProfile};
