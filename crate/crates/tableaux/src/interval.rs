use std::fmt;

use crate::TableauError;

/// A closed integer interval `[lo, hi]` of positive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    /// Panics unless `1 <= lo <= hi`; see [`Interval::try_new`].
    pub fn new(lo: usize, hi: usize) -> Self {
        Self::try_new(lo, hi).expect("interval bounds")
    }

    pub fn try_new(lo: usize, hi: usize) -> Result<Self, TableauError> {
        if lo >= 1 && lo <= hi {
            Ok(Interval { lo, hi })
        } else {
            Err(TableauError::BadInterval { lo, hi })
        }
    }

    /// The interval `[i, i+2m]`.
    pub fn centered(i: usize, m: usize) -> Self {
        Interval::new(i, i + 2 * m)
    }

    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_odd(&self) -> bool {
        self.len() % 2 == 1
    }

    /// `m` for an interval `[i, i+2m]`.
    pub fn half(&self) -> usize {
        (self.len() - 1) / 2
    }

    /// The midpoint `k = i + m`.
    pub fn mid(&self) -> usize {
        self.lo + self.half()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }

    /// `[n+1-hi, n+1-lo]`.
    pub fn reflect(&self, n: usize) -> Interval {
        Interval::new(n + 1 - self.hi, n + 1 - self.lo)
    }

    /// Shift both ends down by `d`; `None` if the result leaves the positives.
    pub fn shift_down(&self, d: usize) -> Option<Interval> {
        (self.lo > d).then(|| Interval::new(self.lo - d, self.hi - d))
    }

    pub fn shift_up(&self, d: usize) -> Interval {
        Interval::new(self.lo + d, self.hi + d)
    }

    /// `[lo+a, hi-b]` as signed offsets; `None` if empty or non-positive.
    pub fn adjust(&self, dlo: isize, dhi: isize) -> Option<Interval> {
        let lo = self.lo as isize + dlo;
        let hi = self.hi as isize + dhi;
        (lo >= 1 && lo <= hi).then(|| Interval::new(lo as usize, hi as usize))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}
