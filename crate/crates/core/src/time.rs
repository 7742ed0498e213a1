//! Discrete time at day granularity.

use std::fmt;

use chrono::{Datelike, Months, NaiveDate};

const UNIX_EPOCH_CE_DAYS: i64 = 719_163;

/// A discrete instant, counted in days since 1970-01-01.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TimeInstant(pub i64);

impl TimeInstant {
    pub const fn new(days: i64) -> Self {
        TimeInstant(days)
    }

    pub const fn days(self) -> i64 {
        self.0
    }

    pub fn from_date(date: NaiveDate) -> Self {
        TimeInstant(date.num_days_from_ce() as i64 - UNIX_EPOCH_CE_DAYS)
    }

    pub fn from_ymd(year: i32, month: u32, day: u32) -> Option<Self> {
        NaiveDate::from_ymd_opt(year, month, day).map(Self::from_date)
    }

    /// Parses an ISO `YYYY-MM-DD` date.
    pub fn parse_iso(s: &str) -> Option<Self> {
        NaiveDate::parse_from_str(s.trim(), "%Y-%m-%d").ok().map(Self::from_date)
    }

    pub fn to_date(self) -> NaiveDate {
        NaiveDate::from_num_days_from_ce_opt((self.0 + UNIX_EPOCH_CE_DAYS) as i32)
            .expect("instant outside the supported calendar range")
    }

    pub fn succ(self) -> Self {
        TimeInstant(self.0 + 1)
    }

    pub fn plus_days(self, days: i64) -> Self {
        TimeInstant(self.0 + days)
    }

    pub fn plus_months(self, months: u32) -> Self {
        Self::from_date(self.to_date() + Months::new(months))
    }

    pub fn year(self) -> i32 {
        self.to_date().year()
    }
}

impl fmt::Display for TimeInstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_date().format("%Y-%m-%d"))
    }
}

/// Upper end of a presence interval; `Infinity` is the open-ended sentinel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    At(TimeInstant),
    Infinity,
}

impl End {
    pub fn clamp_to(self, limit: TimeInstant) -> TimeInstant {
        match self {
            End::At(t) => t.min(limit),
            End::Infinity => limit,
        }
    }

    pub fn is_after(self, t: TimeInstant) -> bool {
        match self {
            End::At(end) => end > t,
            End::Infinity => true,
        }
    }
}

/// Half-open interval `[start, end)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub start: TimeInstant,
    pub end: End,
}

impl Interval {
    /// Returns `None` for an empty interval.
    pub fn new(start: TimeInstant, end: TimeInstant) -> Option<Self> {
        (start < end).then_some(Interval { start, end: End::At(end) })
    }

    pub fn from(start: TimeInstant) -> Self {
        Interval { start, end: End::Infinity }
    }

    pub fn contains(&self, t: TimeInstant) -> bool {
        self.start <= t && self.end.is_after(t)
    }

    /// Whether `[self.start, self.end)` meets `[from, to)`.
    pub fn intersects(&self, from: TimeInstant, to: TimeInstant) -> bool {
        self.start < to && self.end.is_after(from) && from < to
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.end {
            End::At(end) => write!(f, "[{}, {})", self.start, end),
            End::Infinity => write!(f, "[{}, inf)", self.start),
        }
    }
}

/// Sorted, disjoint presence intervals of one relation.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PresenceIntervalSet {
    intervals: Vec<Interval>,
}

impl PresenceIntervalSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts an interval, merging it with any overlapping or adjacent ones.
    pub fn insert(&mut self, interval: Interval) {
        let mut merged = interval;
        let mut kept = Vec::with_capacity(self.intervals.len() + 1);
        for iv in self.intervals.drain(..) {
            let touches = iv.start <= end_as_bound(merged.end) && merged.start <= end_as_bound(iv.end);
            if touches {
                merged.start = merged.start.min(iv.start);
                merged.end = merged.end.max(iv.end);
            } else {
                kept.push(iv);
            }
        }
        let pos = kept.partition_point(|iv| iv.start < merged.start);
        kept.insert(pos, merged);
        self.intervals = kept;
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, t: TimeInstant) -> bool {
        let idx = self.intervals.partition_point(|iv| iv.start <= t);
        idx > 0 && self.intervals[idx - 1].contains(t)
    }

    /// Whether any instant of `[from, to)` lies inside the set, with open ends
    /// clamped to `horizon`.
    pub fn meets(&self, from: TimeInstant, to: TimeInstant, horizon: TimeInstant) -> bool {
        self.intervals.iter().any(|iv| {
            let end = iv.end.clamp_to(horizon);
            iv.start < to && end > from && iv.start < end
        })
    }

    /// Earliest instant `>= t` at which the set is present, searching below `horizon`.
    pub fn next_present(&self, t: TimeInstant, horizon: TimeInstant) -> Option<TimeInstant> {
        self.intervals.iter().find_map(|iv| {
            let end = iv.end.clamp_to(horizon);
            let candidate = iv.start.max(t);
            (candidate < end).then_some(candidate)
        })
    }

    pub fn first_start(&self) -> Option<TimeInstant> {
        self.intervals.first().map(|iv| iv.start)
    }
}

fn end_as_bound(end: End) -> TimeInstant {
    match end {
        End::At(t) => t,
        End::Infinity => TimeInstant(i64::MAX),
    }
}

impl FromIterator<Interval> for PresenceIntervalSet {
    fn from_iter<I: IntoIterator<Item = Interval>>(iter: I) -> Self {
        let mut set = PresenceIntervalSet::new();
        for iv in iter {
            set.insert(iv);
        }
        set
    }
}
