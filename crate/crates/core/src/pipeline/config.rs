use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use chrono::Datelike;

use super::PipelineError;
use crate::ingest::{CorpusSource, ParseMode};
use crate::time::TimeInstant;
use crate::tvg::{Lifetime, NodeScope};

/// Window length used to cut a lifetime into consecutive windows.
///
/// Year and month cadences are aligned on calendar boundaries counted from
/// January of the lifetime's first year; the first and last windows may be
/// partial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cadence {
    Years(u32),
    Months(u32),
    Days(u32),
}

impl Default for Cadence {
    fn default() -> Self {
        Cadence::Years(1)
    }
}

impl FromStr for Cadence {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (digits, unit) = match s.char_indices().find(|(_, c)| !c.is_ascii_digit()) {
            Some((i, _)) => s.split_at(i),
            None => (s, "d"),
        };
        let n: u32 = digits.parse().map_err(|_| format!("bad window length `{s}`"))?;
        if n == 0 {
            return Err("window length must be positive".into());
        }
        match unit {
            "y" => Ok(Cadence::Years(n)),
            "m" => Ok(Cadence::Months(n)),
            "d" => Ok(Cadence::Days(n)),
            _ => Err(format!("bad window unit in `{s}` (expected y, m or d)")),
        }
    }
}

impl fmt::Display for Cadence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cadence::Years(n) => write!(f, "{n}y"),
            Cadence::Months(n) => write!(f, "{n}m"),
            Cadence::Days(n) => write!(f, "{n}d"),
        }
    }
}

impl Cadence {
    fn step(self, t: TimeInstant) -> TimeInstant {
        match self {
            Cadence::Years(n) => t.plus_months(12 * n),
            Cadence::Months(n) => t.plus_months(n),
            Cadence::Days(n) => t.plus_days(n as i64),
        }
    }

    fn origin(self, start: TimeInstant) -> TimeInstant {
        match self {
            Cadence::Years(_) | Cadence::Months(_) => {
                TimeInstant::from_ymd(start.to_date().year(), 1, 1).expect("valid date")
            }
            Cadence::Days(_) => start,
        }
    }

    /// Calendar boundaries `b` with `b <= t`, the latest one.
    fn boundary_at_or_before(self, t: TimeInstant) -> TimeInstant {
        let mut b = self.origin(t);
        loop {
            let next = self.step(b);
            if next > t {
                return b;
            }
            b = next;
        }
    }

    /// Cut points `lifetime.start, b1, b2, ..., lifetime.end`.
    pub fn cuts(self, lifetime: Lifetime) -> Vec<TimeInstant> {
        let mut cuts = vec![lifetime.start];
        let mut b = self.step(self.boundary_at_or_before(lifetime.start));
        while b < lifetime.end {
            cuts.push(b);
            b = self.step(b);
        }
        cuts.push(lifetime.end);
        cuts
    }

    /// `anchor, anchor + step, ...` up to and including `end`.
    pub fn dates_from(self, anchor: TimeInstant, end: TimeInstant) -> Vec<TimeInstant> {
        let mut out = Vec::new();
        let mut t = anchor;
        while t <= end {
            out.push(t);
            t = self.step(t);
        }
        out
    }

    /// Label of a window starting at `start`: its year, `YYYY-MM`, or the ISO date.
    pub fn label(self, start: TimeInstant) -> String {
        match self {
            Cadence::Years(_) => self.boundary_at_or_before(start).year().to_string(),
            Cadence::Months(_) => self.boundary_at_or_before(start).to_date().format("%Y-%m").to_string(),
            Cadence::Days(_) => start.to_string(),
        }
    }

    pub fn labels(self, cuts: &[TimeInstant]) -> Vec<String> {
        cuts[..cuts.len().saturating_sub(1)].iter().map(|&c| self.label(c)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    Canonical,
    HepTh,
}

/// Every knob of an analysis run. Settable from a `key=value` file and from
/// command-line flags through [`AnalysisConfig::set`].
#[derive(Clone, Debug, PartialEq)]
pub struct AnalysisConfig {
    pub format: Option<InputFormat>,
    pub records: Option<PathBuf>,
    pub edges: Option<PathBuf>,
    pub dates: Option<PathBuf>,
    pub abstracts: Option<PathBuf>,
    pub window: Cadence,
    pub threshold: u64,
    pub seed: u64,
    pub scope: NodeScope,
    pub output_dir: PathBuf,
    pub mode: ParseMode,
    pub snapshot_window: Cadence,
    pub snapshot_start: Option<TimeInstant>,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            format: None,
            records: None,
            edges: None,
            dates: None,
            abstracts: None,
            window: Cadence::Years(1),
            threshold: 150,
            seed: 1,
            scope: NodeScope::ActiveNodes,
            output_dir: PathBuf::from("out"),
            mode: ParseMode::Lenient,
            snapshot_window: Cadence::Months(6),
            snapshot_start: None,
        }
    }
}

impl AnalysisConfig {
    pub const KEYS: [&'static str; 13] = [
        "format",
        "records",
        "edges",
        "dates",
        "abstracts",
        "window",
        "threshold",
        "seed",
        "scope",
        "out",
        "mode",
        "snapshot_window",
        "snapshot_start",
    ];

    pub fn set(&mut self, key: &str, value: &str) -> Result<(), PipelineError> {
        let bad = |what: &str| PipelineError::Config(format!("bad value `{value}` for `{key}`: {what}"));
        let value = value.trim();
        match key {
            "format" => {
                self.format = Some(match value {
                    "canonical" => InputFormat::Canonical,
                    "hepth" | "hep-th" => InputFormat::HepTh,
                    _ => return Err(bad("expected canonical or hepth")),
                })
            }
            "records" => self.records = Some(value.into()),
            "edges" => self.edges = Some(value.into()),
            "dates" => self.dates = Some(value.into()),
            "abstracts" => self.abstracts = Some(value.into()),
            "window" => self.window = value.parse().map_err(|e: String| bad(&e))?,
            "threshold" => self.threshold = value.parse().map_err(|_| bad("expected a non-negative integer"))?,
            "seed" => self.seed = value.parse().map_err(|_| bad("expected a non-negative integer"))?,
            "scope" => self.scope = value.parse().map_err(|e: String| bad(&e))?,
            "out" | "output_dir" => self.output_dir = value.into(),
            "mode" => {
                self.mode = match value {
                    "strict" => ParseMode::Strict,
                    "lenient" => ParseMode::Lenient,
                    _ => return Err(bad("expected strict or lenient")),
                }
            }
            "snapshot_window" => self.snapshot_window = value.parse().map_err(|e: String| bad(&e))?,
            "snapshot_start" => {
                self.snapshot_start = Some(TimeInstant::parse_iso(value).ok_or_else(|| bad("expected YYYY-MM-DD"))?)
            }
            _ => return Err(PipelineError::Config(format!("unknown configuration key `{key}`"))),
        }
        Ok(())
    }

    /// Applies `key=value` lines; `#` starts a comment line.
    pub fn apply_text(&mut self, text: &str) -> Result<(), PipelineError> {
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| PipelineError::Config(format!("config line {}: expected key=value", i + 1)))?;
            self.set(k.trim(), v)?;
        }
        Ok(())
    }

    pub fn from_text(text: &str) -> Result<Self, PipelineError> {
        let mut c = AnalysisConfig::default();
        c.apply_text(text)?;
        Ok(c)
    }

    pub fn source(&self) -> Result<CorpusSource, PipelineError> {
        let format =
            self.format.unwrap_or(if self.records.is_some() { InputFormat::Canonical } else { InputFormat::HepTh });
        match format {
            InputFormat::Canonical => match &self.records {
                Some(records) => Ok(CorpusSource::Canonical { records: records.clone() }),
                None => Err(PipelineError::Config("canonical input needs `records`".into())),
            },
            InputFormat::HepTh => match (&self.edges, &self.dates) {
                (Some(edges), Some(dates)) => Ok(CorpusSource::HepTh {
                    edges: edges.clone(),
                    dates: dates.clone(),
                    abstracts: self.abstracts.clone(),
                }),
                _ => Err(PipelineError::Config("no input: set `records`, or both `edges` and `dates`".into())),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> TimeInstant {
        TimeInstant::parse_iso(s).unwrap()
    }

    #[test]
    fn yearly_cuts_over_partial_last_year() {
        let lifetime = Lifetime::new(d("1992-01-01"), d("2003-06-01")).unwrap();
        let cuts = Cadence::Years(1).cuts(lifetime);
        assert_eq!(cuts.len() - 1, 12);
        assert_eq!(cuts[1], d("1993-01-01"));
        assert_eq!(*cuts.last().unwrap(), d("2003-06-01"));
        let labels = Cadence::Years(1).labels(&cuts);
        assert_eq!(labels.first().unwrap(), "1992");
        assert_eq!(labels.last().unwrap(), "2003");
    }

    #[test]
    fn semester_cuts_align_to_january_and_july() {
        let lifetime = Lifetime::new(d("1992-02-10"), d("1993-03-01")).unwrap();
        let cuts = Cadence::Months(6).cuts(lifetime);
        assert_eq!(cuts, vec![d("1992-02-10"), d("1992-07-01"), d("1993-01-01"), d("1993-03-01")]);
        assert_eq!(Cadence::Months(6).labels(&cuts), vec!["1992-01", "1992-07", "1993-01"]);
    }

    #[test]
    fn day_cadence_and_parsing() {
        let lifetime = Lifetime::new(TimeInstant(0), TimeInstant(25)).unwrap();
        let cuts: Vec<i64> = "10".parse::<Cadence>().unwrap().cuts(lifetime).iter().map(|t| t.days()).collect();
        assert_eq!(cuts, vec![0, 10, 20, 25]);
        assert_eq!("6m".parse::<Cadence>(), Ok(Cadence::Months(6)));
        assert_eq!("1y".parse::<Cadence>(), Ok(Cadence::Years(1)));
        assert!("0y".parse::<Cadence>().is_err());
        assert!("3w".parse::<Cadence>().is_err());
    }

    #[test]
    fn snapshot_dates_include_end() {
        let dates = Cadence::Months(6).dates_from(d("2000-04-01"), d("2003-04-01"));
        assert_eq!(dates.len(), 7);
    }

    #[test]
    fn config_text_and_overrides() {
        let mut c = AnalysisConfig::from_text("# run\nrecords = toy.tsv\nwindow=6m\nthreshold=3\n").unwrap();
        assert_eq!(c.window, Cadence::Months(6));
        assert_eq!(c.threshold, 3);
        c.set("threshold", "5").unwrap();
        assert_eq!(c.threshold, 5);
        assert!(matches!(c.source().unwrap(), CorpusSource::Canonical { .. }));
        assert!(AnalysisConfig::from_text("bogus=1").is_err());
        assert!(AnalysisConfig::from_text("threshold=-1").is_err());
        assert!(AnalysisConfig::default().source().is_err());
    }
}
