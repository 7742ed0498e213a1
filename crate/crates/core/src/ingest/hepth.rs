//! Adapters for the public hep-th layout: a `#`-commented citation edge list,
//! a `paper_id date` file, and per-paper abstract files with a header block.
//!
//! Paper ids are normalized with [`normalize_hepth_id`] so that the three
//! sources agree: archive prefixes (`hep-th/`) and the `11` cross-listing
//! prefix of 9-digit ids are stripped, then leading zeros.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::io::BufRead;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use super::{keys, normalize_authors, Corpus, CorpusBuilder, IngestError, LineError, ParseMode, RawRecord};
use crate::time::TimeInstant;

const CROSS_LIST_PREFIX: &str = "11";

pub fn normalize_hepth_id(raw: &str) -> String {
    let mut id = raw.trim();
    if let Some((_, rest)) = id.rsplit_once('/') {
        id = rest;
    }
    if id.len() == 9 && id.bytes().all(|b| b.is_ascii_digit()) && id.starts_with(CROSS_LIST_PREFIX) {
        id = &id[CROSS_LIST_PREFIX.len()..];
    }
    if id.bytes().all(|b| b.is_ascii_digit()) && !id.is_empty() {
        let trimmed = id.trim_start_matches('0');
        return if trimmed.is_empty() { "0".into() } else { trimmed.into() };
    }
    id.to_owned()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeList {
    /// Raw ids in file order, duplicates removed.
    pub edges: Vec<(String, String)>,
    pub duplicates: usize,
    pub errors: Vec<LineError>,
}

/// Parses a whitespace-separated two-column edge list; `#` lines are comments.
pub fn parse_citation_edges<R: BufRead>(reader: R, mode: ParseMode) -> Result<EdgeList, IngestError> {
    let mut out = EdgeList::default();
    let mut seen = HashSet::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut parts = trimmed.split_whitespace();
        match (parts.next(), parts.next(), parts.next()) {
            (Some(a), Some(b), None) => {
                let edge = (a.to_owned(), b.to_owned());
                if seen.insert(edge.clone()) {
                    out.edges.push(edge);
                } else {
                    out.duplicates += 1;
                }
            }
            _ => LineError { line: i + 1, message: format!("expected two ids, got `{trimmed}`") }
                .handle(mode, &mut out.errors)?,
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DateTable {
    /// Normalized id to submission date.
    pub dates: BTreeMap<String, TimeInstant>,
    pub duplicates: usize,
    pub errors: Vec<LineError>,
}

/// Parses `paper_id YYYY-MM-DD` lines. A repeated id keeps the last date.
pub fn parse_dates<R: BufRead>(reader: R, mode: ParseMode) -> Result<DateTable, IngestError> {
    let mut out = DateTable::default();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut parts = trimmed.split_whitespace();
        let parsed = match (parts.next(), parts.next(), parts.next()) {
            (Some(id), Some(date), None) => TimeInstant::parse_iso(date)
                .map(|d| (normalize_hepth_id(id), d))
                .ok_or_else(|| format!("bad date `{date}`")),
            _ => Err(format!("expected `id date`, got `{trimmed}`")),
        };
        match parsed {
            Ok((id, date)) => {
                if out.dates.insert(id, date).is_some() {
                    out.duplicates += 1;
                }
            }
            Err(message) => LineError { line: i + 1, message }.handle(mode, &mut out.errors)?,
        }
    }
    Ok(out)
}

/// Header fields of one abstract file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractMetadata {
    /// Normalized id from the `Paper:` field, when present.
    pub paper_id: Option<String>,
    /// The `Authors:` field verbatim, continuation lines joined with a space.
    pub authors_raw: String,
    pub date: Option<TimeInstant>,
}

/// Why an abstract file could not provide author metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetadataQuarantine {
    pub paper_id: Option<String>,
    pub reason: String,
}

/// Reads the key-value header block. Lines starting with whitespace continue
/// the previous field. The block ends at the first `\\` line after a field.
pub fn parse_abstract_metadata<R: BufRead>(
    reader: R,
) -> Result<Result<AbstractMetadata, MetadataQuarantine>, IngestError> {
    let mut fields: Vec<(String, String)> = Vec::new();
    for line in reader.lines() {
        let line = line?;
        if line.trim() == "\\\\" {
            if fields.is_empty() {
                continue;
            }
            break;
        }
        if line.starts_with([' ', '\t']) {
            if let Some((_, value)) = fields.last_mut() {
                if !line.trim().is_empty() {
                    value.push(' ');
                    value.push_str(line.trim());
                }
            }
            continue;
        }
        if let Some((key, value)) = line.split_once(':') {
            let key = key.trim();
            if !key.is_empty() && !key.contains(' ') || key.starts_with("Date") {
                fields.push((key.to_owned(), value.trim().to_owned()));
            }
        }
    }
    let get = |name: &str| fields.iter().find(|(k, _)| k.eq_ignore_ascii_case(name)).map(|(_, v)| v.as_str());
    let paper_id = get("Paper").map(normalize_hepth_id);
    let date = get("Date").and_then(parse_loose_date);
    let authors = get("Authors").or_else(|| get("Author"));
    Ok(match authors {
        Some(a) if !a.trim().is_empty() => Ok(AbstractMetadata { paper_id, authors_raw: a.to_owned(), date }),
        _ => Err(MetadataQuarantine { paper_id, reason: "missing Authors field".into() }),
    })
}

const MONTHS: [&str; 12] = ["jan", "feb", "mar", "apr", "may", "jun", "jul", "aug", "sep", "oct", "nov", "dec"];

/// Accepts ISO dates and mail-style dates such as `Tue, 31 Dec 91 23:55:28 EST`.
pub fn parse_loose_date(s: &str) -> Option<TimeInstant> {
    let tokens: Vec<&str> = s.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).collect();
    if let Some(d) = tokens.first().and_then(|t| TimeInstant::parse_iso(t)) {
        return Some(d);
    }
    tokens.windows(3).find_map(|w| {
        let day: u32 = w[0].parse().ok().filter(|d| (1..=31).contains(d))?;
        let lower = w[1].to_ascii_lowercase();
        let month = MONTHS.iter().position(|m| lower.starts_with(m))? as u32 + 1;
        let year: i32 = match w[2].len() {
            2 => {
                let yy: i32 = w[2].parse().ok()?;
                if yy >= 50 {
                    1900 + yy
                } else {
                    2000 + yy
                }
            }
            4 => w[2].parse().ok()?,
            _ => return None,
        };
        TimeInstant::from_ymd(year, month, day)
    })
}

fn abstract_files(dir: &Path) -> Result<Vec<PathBuf>, IngestError> {
    let mut out = Vec::new();
    let mut stack = vec![dir.to_owned()];
    while let Some(d) = stack.pop() {
        let entries = std::fs::read_dir(&d).map_err(|source| IngestError::Io { path: d.clone(), source })?;
        for entry in entries {
            let path = entry?.path();
            if path.is_dir() {
                stack.push(path);
            } else if path.extension().is_some_and(|e| e == "abs") {
                out.push(path);
            }
        }
    }
    out.sort();
    Ok(out)
}

enum AbstractOutcome {
    Parsed(String, AbstractMetadata),
    Quarantined(String, String),
}

pub(crate) fn load_hepth<E: BufRead, D: BufRead>(
    edges: E,
    dates: D,
    abstracts: Option<&Path>,
    mode: ParseMode,
) -> Result<Corpus, IngestError> {
    let edge_list = parse_citation_edges(edges, mode)?;
    let date_table = parse_dates(dates, mode)?;

    let mut outcomes = Vec::new();
    if let Some(dir) = abstracts {
        if !dir.is_dir() {
            return Err(IngestError::Config(format!("abstract directory {} not found", dir.display())));
        }
        let files = abstract_files(dir)?;
        outcomes = files
            .par_iter()
            .map(|path| -> Result<AbstractOutcome, IngestError> {
                let file =
                    std::fs::File::open(path).map_err(|source| IngestError::Io { path: path.clone(), source })?;
                let stem = normalize_hepth_id(&path.file_stem().unwrap_or_default().to_string_lossy());
                Ok(match parse_abstract_metadata(std::io::BufReader::new(file))? {
                    Ok(meta) => AbstractOutcome::Parsed(meta.paper_id.clone().unwrap_or(stem), meta),
                    Err(q) => AbstractOutcome::Quarantined(q.paper_id.unwrap_or(stem), q.reason),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
    }

    let mut builder = CorpusBuilder::new();
    let report = builder.report_mut();
    report.add(keys::DUPLICATE_EDGES, edge_list.duplicates as u64);
    report.add(keys::DUPLICATE_DATES, date_table.duplicates as u64);
    report.add(keys::MALFORMED_LINES, (edge_list.errors.len() + date_table.errors.len()) as u64);

    let mut metadata: BTreeMap<String, AbstractMetadata> = BTreeMap::new();
    let mut bad_metadata: BTreeMap<String, String> = BTreeMap::new();
    for outcome in outcomes {
        match outcome {
            AbstractOutcome::Parsed(id, meta) => {
                metadata.insert(id, meta);
            }
            AbstractOutcome::Quarantined(id, reason) => {
                bad_metadata.insert(id, reason);
            }
        }
    }

    let mut references: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut ids: BTreeSet<String> = date_table.dates.keys().cloned().collect();
    for (from, to) in &edge_list.edges {
        let (from, to) = (normalize_hepth_id(from), normalize_hepth_id(to));
        ids.insert(from.clone());
        ids.insert(to.clone());
        references.entry(from).or_default().push(to);
    }
    ids.extend(metadata.keys().cloned());
    ids.extend(bad_metadata.keys().cloned());

    for id in ids {
        if let Some(reason) = bad_metadata.get(&id) {
            builder.report_mut().add(keys::QUARANTINE_NO_AUTHORS, 1);
            builder.quarantine(id, reason);
            continue;
        }
        let meta = metadata.get(&id);
        let date = date_table.dates.get(&id).copied().or_else(|| meta.and_then(|m| m.date));
        let authors = meta.map(|m| normalize_authors(&m.authors_raw));
        let refs = references.remove(&id).unwrap_or_default();
        builder.add(RawRecord { id, date, authors, references: refs });
    }
    builder.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_skip_comments_and_dedup() {
        let e = parse_citation_edges("# comment\n9907233 9301253\n".as_bytes(), ParseMode::Strict).unwrap();
        assert_eq!(e.edges, vec![("9907233".to_string(), "9301253".to_string())]);
        assert!(parse_citation_edges("".as_bytes(), ParseMode::Strict).unwrap().edges.is_empty());
        let d = parse_citation_edges("1 2\n1 2\n".as_bytes(), ParseMode::Strict).unwrap();
        assert_eq!((d.edges.len(), d.duplicates), (1, 1));
    }

    #[test]
    fn malformed_edge_line() {
        let text = "1 2\n3\n";
        assert!(matches!(
            parse_citation_edges(text.as_bytes(), ParseMode::Strict),
            Err(IngestError::Line { line: 2, .. })
        ));
        let lenient = parse_citation_edges(text.as_bytes(), ParseMode::Lenient).unwrap();
        assert_eq!(lenient.errors.len(), 1);
    }

    #[test]
    fn dates_parse_and_normalize() {
        let t = parse_dates("9203201 1992-03-01\n".as_bytes(), ParseMode::Strict).unwrap();
        assert_eq!(t.dates["9203201"], TimeInstant::from_ymd(1992, 3, 1).unwrap());
        let cross = parse_dates("119203201 1992-03-01\n0001001 2000-01-01\n".as_bytes(), ParseMode::Strict).unwrap();
        assert!(cross.dates.contains_key("9203201"));
        assert!(cross.dates.contains_key("1001"));
        let dup = parse_dates("1 1992-01-01\n1 1993-01-01\n".as_bytes(), ParseMode::Strict).unwrap();
        assert_eq!(dup.duplicates, 1);
        assert_eq!(dup.dates["1"].year(), 1993);
        assert!(parse_dates("1 1992-13-01\n".as_bytes(), ParseMode::Strict).is_err());
    }

    #[test]
    fn id_normalization() {
        assert_eq!(normalize_hepth_id("hep-th/9201001"), "9201001");
        assert_eq!(normalize_hepth_id("0001001"), "1001");
        assert_eq!(normalize_hepth_id("110001001"), "1001");
        assert_eq!(normalize_hepth_id("abc"), "abc");
    }

    const ABSTRACT: &str = "------------------------------------------------------------------------------\n\
\\\\\n\
Paper: hep-th/9201001\n\
From: someone@example.org\n\
Date: Tue, 31 Dec 91 23:55:28 EST   (9kb)\n\
\n\
Title: A title\n\
Authors: A. Author, B. Other and\n  C. Third\n\
Comments: 10 pages\n\
\\\\\n\
  Abstract text. Authors: not a header.\n\
\\\\\n";

    #[test]
    fn abstract_header_with_continuation() {
        let meta = parse_abstract_metadata(ABSTRACT.as_bytes()).unwrap().unwrap();
        assert_eq!(meta.paper_id.as_deref(), Some("9201001"));
        assert_eq!(meta.authors_raw, "A. Author, B. Other and C. Third");
        assert_eq!(meta.date, TimeInstant::from_ymd(1991, 12, 31));
    }

    #[test]
    fn abstract_without_authors_is_quarantined() {
        let text = "\\\\\nPaper: hep-th/9201002\nTitle: x\n\\\\\n";
        let q = parse_abstract_metadata(text.as_bytes()).unwrap().unwrap_err();
        assert_eq!(q.paper_id.as_deref(), Some("9201002"));
    }

    #[test]
    fn loose_dates() {
        assert_eq!(parse_loose_date("Mon, 6 Jan 1992 10:00:00 GMT"), TimeInstant::from_ymd(1992, 1, 6));
        assert_eq!(parse_loose_date("2001-05-04"), TimeInstant::from_ymd(2001, 5, 4));
        assert_eq!(parse_loose_date("sometime"), None);
    }

    #[test]
    fn hepth_corpus_from_edges_dates_and_abstracts() {
        let dir = tempfile::tempdir().unwrap();
        let sub = dir.path().join("1992");
        std::fs::create_dir(&sub).unwrap();
        std::fs::write(sub.join("9201001.abs"), ABSTRACT).unwrap();
        std::fs::write(sub.join("9201002.abs"), "\\\\\nPaper: hep-th/9201002\nTitle: x\n\\\\\n").unwrap();
        let edges = "# FromNodeId ToNodeId\n9201003 9201001\n9201003 9201002\n9201003 9999999\n";
        let dates = "9201001 1992-01-01\n9201002 1992-01-02\n119201003 1992-01-05\n";
        let c = load_hepth(edges.as_bytes(), dates.as_bytes(), Some(dir.path()), ParseMode::Strict).unwrap();
        let r = c.report();
        // 9201002 lacks authors; 9999999 has no date
        assert_eq!(r.get(keys::PAPERS_QUARANTINED), 2);
        assert_eq!(r.get(keys::PAPERS_KEPT), 2);
        assert_eq!(r.get(keys::CITATIONS), 1);
        assert_eq!(r.get(keys::DANGLING_REFERENCES), 2);
        assert_eq!(r.get(keys::MISSING_METADATA), 1);
        assert_eq!(r.get(keys::DISTINCT_AUTHORS), 3);
        assert_eq!(r.get(keys::PAPERS_IN), r.get(keys::PAPERS_KEPT) + r.get(keys::PAPERS_QUARANTINED));
    }
}
