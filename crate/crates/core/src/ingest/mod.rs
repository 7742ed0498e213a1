//! Publication-corpus ingestion.
//!
//! Two input layouts are supported: the canonical line-delimited record file
//! (see [`canonical`]) and the public hep-th layout (citation edge list, dates
//! file and per-paper abstract metadata, see [`hepth`]). Both feed a
//! [`CorpusBuilder`], which applies the quarantine and dangling-reference rules
//! and produces a [`Corpus`] with an [`IngestReport`].

mod authors;
pub mod canonical;
pub mod hepth;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::time::TimeInstant;
use crate::tvg::Lifetime;

pub use authors::{normalize_authors, AuthorName};
pub use canonical::{load_canonical, parse_canonical_records, write_canonical};
pub use hepth::{normalize_hepth_id, parse_abstract_metadata, parse_citation_edges, parse_dates, AbstractMetadata};

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("read error: {0}")]
    Read(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("configuration error: {0}")]
    Config(String),
    #[error("corpus is empty after quarantine")]
    EmptyCorpus,
    #[error("unknown paper {0}")]
    UnknownPaper(String),
}

/// Whether malformed lines abort parsing or are counted and skipped.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ParseMode {
    Strict,
    #[default]
    Lenient,
}

/// A line that could not be parsed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineError {
    pub line: usize,
    pub message: String,
}

impl LineError {
    pub(crate) fn handle(self, mode: ParseMode, sink: &mut Vec<LineError>) -> Result<(), IngestError> {
        match mode {
            ParseMode::Strict => Err(IngestError::Line { line: self.line, message: self.message }),
            ParseMode::Lenient => {
                sink.push(self);
                Ok(())
            }
        }
    }
}

/// Warning and quarantine counters, keyed by name.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IngestReport {
    counts: BTreeMap<String, u64>,
}

impl IngestReport {
    pub fn add(&mut self, key: &str, n: u64) {
        *self.counts.entry(key.to_owned()).or_insert(0) += n;
    }

    pub fn set(&mut self, key: &str, n: u64) {
        self.counts.insert(key.to_owned(), n);
    }

    pub fn get(&self, key: &str) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<String, u64> {
        &self.counts
    }

    /// `key=value` lines in key order.
    pub fn to_flat_text(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.counts {
            let _ = writeln!(s, "{k}={v}");
        }
        s
    }

    pub fn from_flat_text(text: &str) -> Option<Self> {
        let mut report = IngestReport::default();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let (k, v) = line.split_once('=')?;
            report.set(k.trim(), v.trim().parse().ok()?);
        }
        Some(report)
    }
}

pub mod report_keys {
    pub const PAPERS_IN: &str = "papers_in";
    pub const PAPERS_KEPT: &str = "papers_kept";
    pub const PAPERS_QUARANTINED: &str = "papers_quarantined";
    pub const CITATIONS: &str = "citations";
    pub const SELF_CITATIONS: &str = "self_citations";
    pub const DISTINCT_AUTHORS: &str = "distinct_authors";
    pub const DANGLING_REFERENCES: &str = "dangling_references";
    pub const DUPLICATE_REFERENCES: &str = "duplicate_references";
    pub const DUPLICATE_EDGES: &str = "duplicate_edges";
    pub const DUPLICATE_DATES: &str = "duplicate_dates";
    pub const DUPLICATE_RECORDS: &str = "duplicate_records";
    pub const MALFORMED_LINES: &str = "malformed_lines";
    pub const MISSING_METADATA: &str = "missing_metadata";
    pub const QUARANTINE_NO_AUTHORS: &str = "quarantine_no_authors";
    pub const QUARANTINE_NO_DATE: &str = "quarantine_no_date";
}
use report_keys as keys;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reference {
    pub id: String,
    /// False for dangling references to papers outside the corpus.
    pub in_corpus: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaperRecord {
    pub id: String,
    pub date: TimeInstant,
    pub authors: Vec<AuthorName>,
    pub references: Vec<Reference>,
}

impl PaperRecord {
    /// References that resolve to another paper of the corpus.
    pub fn internal_references(&self) -> impl Iterator<Item = &str> {
        self.references.iter().filter(move |r| r.in_corpus && r.id != self.id).map(|r| r.id.as_str())
    }
}

/// A paper excluded from the corpus, with the reason.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quarantined {
    pub id: String,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct Corpus {
    papers: BTreeMap<String, PaperRecord>,
    lifetime: Lifetime,
    report: IngestReport,
    quarantined: Vec<Quarantined>,
}

impl PartialEq for Corpus {
    /// Equal papers and lifetime; ingest reports may differ by input layout.
    fn eq(&self, other: &Self) -> bool {
        self.papers == other.papers && self.lifetime == other.lifetime
    }
}

impl Corpus {
    pub fn papers(&self) -> impl Iterator<Item = &PaperRecord> {
        self.papers.values()
    }

    pub fn paper_count(&self) -> usize {
        self.papers.len()
    }

    pub fn get(&self, id: &str) -> Option<&PaperRecord> {
        self.papers.get(id)
    }

    pub fn lifetime(&self) -> Lifetime {
        self.lifetime
    }

    pub fn report(&self) -> &IngestReport {
        &self.report
    }

    pub fn quarantined(&self) -> &[Quarantined] {
        &self.quarantined
    }

    /// Number of within-corpus citations, self-citations excluded.
    pub fn citation_count(&self) -> usize {
        self.papers.values().map(|p| p.internal_references().count()).sum()
    }

    /// Distinct author identities mapped to their display names.
    pub fn authors(&self) -> BTreeMap<&str, &str> {
        self.papers.values().flat_map(|p| p.authors.iter()).map(|a| (a.key.as_str(), a.display.as_str())).collect()
    }

    /// Citing papers of every cited paper, in citing-id order.
    pub fn citers(&self) -> HashMap<&str, Vec<&PaperRecord>> {
        let mut out: HashMap<&str, Vec<&PaperRecord>> = HashMap::new();
        for p in self.papers.values() {
            for r in p.internal_references() {
                out.entry(r).or_default().push(p);
            }
        }
        out
    }

    /// Citations received by each paper, uncited papers included with 0.
    pub fn citation_counts(&self) -> BTreeMap<&str, usize> {
        let citers = self.citers();
        self.papers.keys().map(|id| (id.as_str(), citers.get(id.as_str()).map_or(0, Vec::len))).collect()
    }
}

/// A paper as read from an input layout, before validation.
#[derive(Clone, Debug, Default)]
pub struct RawRecord {
    pub id: String,
    pub date: Option<TimeInstant>,
    /// `None` when no author metadata exists for the paper at all.
    pub authors: Option<Vec<AuthorName>>,
    pub references: Vec<String>,
}

/// Assembles a [`Corpus`], applying quarantine and dangling-reference rules.
#[derive(Debug, Default)]
pub struct CorpusBuilder {
    records: BTreeMap<String, RawRecord>,
    quarantined: Vec<Quarantined>,
    report: IngestReport,
}

impl CorpusBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn report_mut(&mut self) -> &mut IngestReport {
        &mut self.report
    }

    /// Adds a record; a repeated id keeps the first record and is counted.
    pub fn add(&mut self, record: RawRecord) {
        self.report.add(keys::PAPERS_IN, 1);
        if self.records.contains_key(&record.id) {
            self.report.add(keys::DUPLICATE_RECORDS, 1);
            self.report.add(keys::PAPERS_QUARANTINED, 1);
            self.quarantined.push(Quarantined { id: record.id, reason: "duplicate_record".into() });
            return;
        }
        self.records.insert(record.id.clone(), record);
    }

    /// Records a paper rejected before it became a [`RawRecord`].
    pub fn quarantine(&mut self, id: impl Into<String>, reason: &str) {
        self.report.add(keys::PAPERS_IN, 1);
        self.report.add(keys::PAPERS_QUARANTINED, 1);
        self.quarantined.push(Quarantined { id: id.into(), reason: reason.into() });
    }

    pub fn finish(mut self) -> Result<Corpus, IngestError> {
        let mut kept: Vec<RawRecord> = Vec::with_capacity(self.records.len());
        for (id, rec) in std::mem::take(&mut self.records) {
            let reason = if rec.date.is_none() {
                Some(keys::QUARANTINE_NO_DATE)
            } else if rec.authors.as_ref().is_some_and(Vec::is_empty) {
                Some(keys::QUARANTINE_NO_AUTHORS)
            } else {
                None
            };
            match reason {
                Some(reason) => {
                    self.report.add(reason, 1);
                    self.report.add(keys::PAPERS_QUARANTINED, 1);
                    self.quarantined.push(Quarantined { id, reason: reason.into() });
                }
                None => kept.push(rec),
            }
        }
        if kept.is_empty() {
            return Err(IngestError::EmptyCorpus);
        }

        let ids: BTreeSet<String> = kept.iter().map(|r| r.id.clone()).collect();
        let mut display_of: HashMap<String, String> = HashMap::new();
        let mut papers = BTreeMap::new();
        let (mut citations, mut self_cites, mut dangling, mut dup_refs, mut missing_meta) = (0, 0, 0, 0, 0);
        for rec in kept {
            let authors = match rec.authors {
                Some(list) => list
                    .into_iter()
                    .map(|a| {
                        let display = display_of.entry(a.key.clone()).or_insert_with(|| a.display.clone()).clone();
                        AuthorName { key: a.key, display }
                    })
                    .collect(),
                None => {
                    missing_meta += 1;
                    Vec::new()
                }
            };
            let mut seen = BTreeSet::new();
            let mut references = Vec::with_capacity(rec.references.len());
            for r in rec.references {
                if !seen.insert(r.clone()) {
                    dup_refs += 1;
                    continue;
                }
                let in_corpus = ids.contains(&r);
                if !in_corpus {
                    dangling += 1;
                } else if r == rec.id {
                    self_cites += 1;
                } else {
                    citations += 1;
                }
                references.push(Reference { id: r, in_corpus });
            }
            let date = rec.date.expect("dated records only");
            papers.insert(rec.id.clone(), PaperRecord { id: rec.id, date, authors, references });
        }

        let first = papers.values().map(|p| p.date).min().expect("non-empty");
        let last = papers.values().map(|p| p.date).max().expect("non-empty");
        let lifetime = Lifetime { start: first, end: last.succ() };

        let r = &mut self.report;
        r.set(keys::PAPERS_KEPT, papers.len() as u64);
        r.set(keys::CITATIONS, citations);
        r.set(keys::SELF_CITATIONS, self_cites);
        r.set(keys::DANGLING_REFERENCES, dangling);
        r.set(keys::DUPLICATE_REFERENCES, dup_refs);
        r.set(keys::MISSING_METADATA, missing_meta);
        r.set(keys::DISTINCT_AUTHORS, display_of.len() as u64);
        r.add(keys::PAPERS_QUARANTINED, 0);
        Ok(Corpus { papers, lifetime, report: self.report, quarantined: self.quarantined })
    }
}

/// Where a corpus comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusSource {
    Canonical { records: PathBuf },
    HepTh { edges: PathBuf, dates: PathBuf, abstracts: Option<PathBuf> },
}

pub fn load_corpus(source: &CorpusSource, mode: ParseMode) -> Result<Corpus, IngestError> {
    match source {
        CorpusSource::Canonical { records } => {
            let file = open(records)?;
            canonical::load_canonical(file, mode)
        }
        CorpusSource::HepTh { edges, dates, abstracts } => {
            hepth::load_hepth(open(edges)?, open(dates)?, abstracts.as_deref(), mode)
        }
    }
}

fn open(path: &Path) -> Result<std::io::BufReader<std::fs::File>, IngestError> {
    if !path.exists() {
        return Err(IngestError::Config(format!("missing input file {}", path.display())));
    }
    std::fs::File::open(path)
        .map(std::io::BufReader::new)
        .map_err(|source| IngestError::Io { path: path.to_owned(), source })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(id: &str, day: i64, authors: &[&str], refs: &[&str]) -> RawRecord {
        RawRecord {
            id: id.into(),
            date: Some(TimeInstant(day)),
            authors: Some(authors.iter().filter_map(|a| AuthorName::parse(a)).collect()),
            references: refs.iter().map(|s| s.to_string()).collect(),
        }
    }

    #[test]
    fn quarantine_and_dangling_accounting() {
        let mut b = CorpusBuilder::new();
        b.add(raw("p1", 10, &["A"], &["p2", "x", "p2", "p1"]));
        b.add(raw("p2", 12, &["B", "a"], &[]));
        b.add(raw("p3", 11, &[], &["p1"]));
        b.add(RawRecord { id: "p4".into(), date: None, authors: None, references: vec![] });
        let c = b.finish().unwrap();
        let r = c.report();
        assert_eq!(r.get(keys::PAPERS_IN), 4);
        assert_eq!(r.get(keys::PAPERS_KEPT), 2);
        assert_eq!(r.get(keys::PAPERS_QUARANTINED), 2);
        assert_eq!(r.get(keys::CITATIONS), 1);
        assert_eq!(r.get(keys::SELF_CITATIONS), 1);
        assert_eq!(r.get(keys::DANGLING_REFERENCES), 1);
        assert_eq!(r.get(keys::DUPLICATE_REFERENCES), 1);
        assert_eq!(r.get(keys::DISTINCT_AUTHORS), 2);
        assert_eq!(c.citation_count(), 1);
        assert_eq!(c.lifetime(), Lifetime { start: TimeInstant(10), end: TimeInstant(13) });
        // "a" in p2 is the same identity as "A" from p1 and takes its display
        assert_eq!(c.get("p2").unwrap().authors[1].display, "A");
    }

    #[test]
    fn report_flat_text_roundtrip() {
        let mut r = IngestReport::default();
        r.add("b", 2);
        r.add("a", 1);
        assert_eq!(r.to_flat_text(), "a=1\nb=2\n");
        assert_eq!(IngestReport::from_flat_text(&r.to_flat_text()), Some(r));
    }

    #[test]
    fn empty_corpus_is_an_error() {
        let mut b = CorpusBuilder::new();
        b.add(raw("p", 1, &[], &[]));
        assert!(matches!(b.finish(), Err(IngestError::EmptyCorpus)));
    }

    #[test]
    fn missing_file_is_config_error() {
        let src = CorpusSource::Canonical { records: "/nonexistent/records.tsv".into() };
        assert!(matches!(load_corpus(&src, ParseMode::Strict), Err(IngestError::Config(_))));
    }
}
