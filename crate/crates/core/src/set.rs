//! Finite integer sets, intervals, runs, and the ground-set tag.
//!
//! [`IntSet`] is the universal input type of the engine: a strictly
//! increasing sequence of 64-bit integers. All arithmetic is checked;
//! overflow is an explicit error, never wraparound.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite set of integers, stored strictly increasing.
///
/// The canonical textual form is a comma-separated increasing list in
/// braces, e.g. `{0,1,3}`. Parsers reject duplicates and unsorted input
/// rather than normalizing silently, so caller bugs surface early.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntSet {
    elems: Vec<i64>,
}

impl IntSet {
    /// Build a set from an already sorted, duplicate-free vector.
    pub fn new(elems: Vec<i64>) -> Result<Self> {
        for pair in elems.windows(2) {
            if pair[0] >= pair[1] {
                return Err(Error::Parse(format!(
                    "elements must be strictly increasing: {} then {}",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(IntSet { elems })
    }

    pub fn singleton(x: i64) -> Self {
        IntSet { elems: vec![x] }
    }

    /// Skip validation; callers guarantee strict ascending order.
    pub(crate) fn from_sorted_unchecked(elems: Vec<i64>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        IntSet { elems }
    }

    pub fn elements(&self) -> &[i64] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.elems.iter().copied()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    pub fn min_element(&self) -> Result<i64> {
        self.elems.first().copied().ok_or(Error::EmptySet)
    }

    pub fn max_element(&self) -> Result<i64> {
        self.elems.last().copied().ok_or(Error::EmptySet)
    }

    /// max(A) − min(A).
    pub fn diameter(&self) -> Result<i64> {
        let lo = self.min_element()?;
        let hi = self.max_element()?;
        hi.checked_sub(lo).ok_or(Error::Overflow("diameter"))
    }

    /// The unique partition into maximal runs of consecutive integers,
    /// in increasing order. Singleton runs have length 0.
    pub fn maximal_runs(&self) -> Result<Vec<Interval>> {
        if self.elems.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut runs = Vec::new();
        let mut start = self.elems[0];
        let mut prev = start;
        for &x in &self.elems[1..] {
            if x != prev + 1 {
                runs.push(Interval {
                    lo: start,
                    hi: prev,
                });
                start = x;
            }
            prev = x;
        }
        runs.push(Interval {
            lo: start,
            hi: prev,
        });
        Ok(runs)
    }

    /// Elements with neither predecessor nor successor in the set.
    pub fn isolated_elements(&self) -> Result<IntSet> {
        let runs = self.maximal_runs()?;
        let elems = runs
            .into_iter()
            .filter(|r| r.lo == r.hi)
            .map(|r| r.lo)
            .collect();
        Ok(IntSet { elems })
    }

    /// {a + t : a ∈ A}, with checked arithmetic.
    pub fn translate(&self, t: i64) -> Result<IntSet> {
        let elems = self
            .elems
            .iter()
            .map(|&a| a.checked_add(t).ok_or(Error::Overflow("translate")))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntSet { elems })
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for IntSet {
    type Err = Error;

    /// Parse `{a1,a2,...}`. Whitespace around elements is tolerated;
    /// `{}` parses as the empty set (operations that need elements
    /// reject it separately).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("expected {{a,b,...}}, got `{s}`")))?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(IntSet { elems: Vec::new() });
        }
        let mut elems = Vec::new();
        for part in inner.split(',') {
            let p = part.trim();
            let v: i64 = p
                .parse()
                .map_err(|_| Error::Parse(format!("not an integer: `{p}`")))?;
            if let Some(&last) = elems.last() {
                if v == last {
                    return Err(Error::Parse(format!("duplicate element {v}")));
                }
                if v < last {
                    return Err(Error::Parse(format!(
                        "elements must be increasing: {last} then {v}"
                    )));
                }
            }
            elems.push(v);
        }
        Ok(IntSet { elems })
    }
}

impl Serialize for IntSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for IntSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An inclusive integer interval `[lo, hi]`.
///
/// Length-0 (singleton) intervals are representable: they stand for
/// isolated elements in run decompositions and for a zero initial-run
/// statistic. Outward-facing best-run answers only ever report runs of
/// length ≥ 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interval {
    lo: i64,
    hi: i64,
}

impl Interval {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidParameter(format!(
                "interval bounds out of order: [{lo},{hi}]"
            )));
        }
        if (hi as i128) - (lo as i128) > i64::MAX as i128 {
            return Err(Error::Overflow("interval length"));
        }
        Ok(Interval { lo, hi })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    /// hi − lo; the number of integers in the interval is `len() + 1`.
    /// An interval is never empty, so there is no `is_empty`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> i64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: i64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Which infinite ground set a spectrum ranges over.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum GroundSet {
    #[serde(rename = "N0")]
    NonNegatives,
    #[serde(rename = "Z")]
    AllIntegers,
}

impl fmt::Display for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroundSet::NonNegatives => write!(f, "N0"),
            GroundSet::AllIntegers => write!(f, "Z"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[i64]) -> IntSet {
        IntSet::new(xs.to_vec()).unwrap()
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(set(&[0, 3, 7]).diameter().unwrap(), 7);
        assert_eq!(set(&[5]).diameter().unwrap(), 0);
        assert_eq!(set(&[-4, 0, 9]).diameter().unwrap(), 13);
        assert!(matches!(
            IntSet::new(vec![]).unwrap().diameter(),
            Err(Error::EmptySet)
        ));
    }

    #[test]
    fn maximal_runs_examples() {
        let runs = set(&[1, 2, 5, 7, 8]).maximal_runs().unwrap();
        let expect = [(1, 2), (5, 5), (7, 8)];
        assert_eq!(runs.len(), 3);
        for (r, (lo, hi)) in runs.iter().zip(expect) {
            assert_eq!((r.lo(), r.hi()), (lo, hi));
        }
        assert_eq!(
            set(&[0, 1, 2, 3]).maximal_runs().unwrap(),
            vec![Interval { lo: 0, hi: 3 }]
        );
        assert_eq!(
            set(&[4]).maximal_runs().unwrap(),
            vec![Interval { lo: 4, hi: 4 }]
        );
    }

    #[test]
    fn isolated_examples() {
        assert_eq!(
            set(&[1, 2, 5, 7, 8]).isolated_elements().unwrap(),
            set(&[5])
        );
        assert!(set(&[0, 1]).isolated_elements().unwrap().is_empty());
        assert_eq!(
            set(&[3, 6, 9]).isolated_elements().unwrap(),
            set(&[3, 6, 9])
        );
    }

    #[test]
    fn translate_examples() {
        assert_eq!(set(&[-3, 0, 2]).translate(3).unwrap(), set(&[0, 3, 5]));
        assert_eq!(set(&[0, 1]).translate(0).unwrap(), set(&[0, 1]));
        assert_eq!(set(&[5, 9]).translate(-5).unwrap(), set(&[0, 4]));
        assert!(matches!(
            set(&[i64::MAX]).translate(1),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn parse_and_display_round_trip() {
        let a: IntSet = "{0,1,3}".parse().unwrap();
        assert_eq!(a, set(&[0, 1, 3]));
        assert_eq!(a.to_string(), "{0,1,3}");
        let b: IntSet = " { -4 , 0 , 9 } ".parse().unwrap();
        assert_eq!(b, set(&[-4, 0, 9]));
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!("0,1".parse::<IntSet>(), Err(Error::Parse(_))));
        assert!(matches!("{0,0}".parse::<IntSet>(), Err(Error::Parse(_))));
        assert!(matches!("{3,1}".parse::<IntSet>(), Err(Error::Parse(_))));
        assert!(matches!("{a}".parse::<IntSet>(), Err(Error::Parse(_))));
        assert!("{}".parse::<IntSet>().unwrap().is_empty());
    }

    #[test]
    fn interval_validation() {
        assert!(Interval::new(3, 2).is_err());
        let i = Interval::new(-2, 5).unwrap();
        assert_eq!(i.len(), 7);
        assert!(i.contains(0));
        assert!(!i.contains(6));
        assert_eq!(Interval::new(4, 4).unwrap().len(), 0);
    }

    #[test]
    fn serde_uses_literal_form() {
        let a = set(&[0, 1, 3]);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, "\"{0,1,3}\"");
        let back: IntSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
    }
}
