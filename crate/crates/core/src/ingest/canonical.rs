//! Canonical record file: one paper per line,
//! `paper_id<TAB>YYYY-MM-DD<TAB>author;author;...<TAB>ref,ref,...`.
//!
//! The reference field may be empty or omitted. Blank lines are ignored.

use std::io::{BufRead, Write};

use super::{keys, AuthorName, Corpus, CorpusBuilder, IngestError, LineError, ParseMode, RawRecord};
use crate::time::TimeInstant;

/// Parses canonical records. Records without any author are returned with an
/// empty author list and quarantined later by the corpus builder.
pub fn parse_canonical_records<R: BufRead>(
    reader: R,
    mode: ParseMode,
) -> Result<(Vec<RawRecord>, Vec<LineError>), IngestError> {
    let mut records = Vec::new();
    let mut errors = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        match parse_line(&line) {
            Ok(rec) => records.push(rec),
            Err(message) => LineError { line: lineno, message }.handle(mode, &mut errors)?,
        }
    }
    Ok((records, errors))
}

fn parse_line(line: &str) -> Result<RawRecord, String> {
    let fields: Vec<&str> = line.split('\t').collect();
    if !(3..=4).contains(&fields.len()) {
        return Err(format!("expected 3 or 4 tab-separated fields, found {}", fields.len()));
    }
    let id = fields[0].trim();
    if id.is_empty() {
        return Err("empty paper id".into());
    }
    let date = TimeInstant::parse_iso(fields[1]).ok_or_else(|| format!("bad date `{}`", fields[1]))?;
    let mut authors: Vec<AuthorName> = Vec::new();
    for a in fields[2].split(';').filter_map(AuthorName::parse) {
        if !authors.iter().any(|x| x.key == a.key) {
            authors.push(a);
        }
    }
    let references = fields
        .get(3)
        .map(|f| f.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::to_owned).collect())
        .unwrap_or_default();
    Ok(RawRecord { id: id.to_owned(), date: Some(date), authors: Some(authors), references })
}

/// Parses a canonical record stream and validates it into a corpus.
pub fn load_canonical<R: BufRead>(reader: R, mode: ParseMode) -> Result<Corpus, IngestError> {
    let (records, errors) = parse_canonical_records(reader, mode)?;
    let mut builder = CorpusBuilder::new();
    builder.report_mut().add(keys::MALFORMED_LINES, errors.len() as u64);
    for rec in records {
        builder.add(rec);
    }
    builder.finish()
}

/// Writes the kept papers of `corpus` in canonical form, ordered by id.
pub fn write_canonical<W: Write>(corpus: &Corpus, mut out: W) -> std::io::Result<()> {
    for p in corpus.papers() {
        let authors: Vec<&str> = p.authors.iter().map(|a| a.display.as_str()).collect();
        let refs: Vec<&str> = p.references.iter().map(|r| r.id.as_str()).collect();
        writeln!(out, "{}\t{}\t{}\t{}", p.id, p.date, authors.join(";"), refs.join(","))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const THREE: &str = "p1\t1995-06-01\tA. Author;B. Other\tp2,p3\n\
                         p2\t1994-01-10\tC. Third\t\n\
                         p3\t1996-02-02\tA. Author\tp2,zz\n";

    #[test]
    fn three_papers_two_internal_citations() {
        let c = load_canonical(THREE.as_bytes(), ParseMode::Strict).unwrap();
        assert_eq!(c.paper_count(), 3);
        assert_eq!(c.report().get(keys::PAPERS_KEPT), 3);
        assert_eq!(c.report().get(keys::CITATIONS), 3);
        assert_eq!(c.report().get(keys::DANGLING_REFERENCES), 1);

        let two = "a\t2000-01-01\tX\tb\nb\t2000-01-02\tY\t\nc\t2000-01-03\tZ\tb,out\n";
        let c = load_canonical(two.as_bytes(), ParseMode::Strict).unwrap();
        assert_eq!(c.report().get(keys::PAPERS_IN), 3);
        assert_eq!(c.report().get(keys::CITATIONS), 2);
    }

    #[test]
    fn loading_twice_gives_identical_report() {
        let a = load_canonical(THREE.as_bytes(), ParseMode::Strict).unwrap();
        let b = load_canonical(THREE.as_bytes(), ParseMode::Strict).unwrap();
        assert_eq!(a.report().to_flat_text(), b.report().to_flat_text());
    }

    #[test]
    fn strict_rejects_bad_lines_lenient_counts_them() {
        let text = "p1\t1995-06-01\tA\t\np2\tnot-a-date\tB\t\n";
        match load_canonical(text.as_bytes(), ParseMode::Strict) {
            Err(IngestError::Line { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        let c = load_canonical(text.as_bytes(), ParseMode::Lenient).unwrap();
        assert_eq!(c.paper_count(), 1);
        assert_eq!(c.report().get(keys::MALFORMED_LINES), 1);
    }

    #[test]
    fn authorless_record_is_quarantined() {
        let text = "p1\t1995-06-01\tA\t\np2\t1995-06-02\t\t\n";
        let c = load_canonical(text.as_bytes(), ParseMode::Strict).unwrap();
        assert_eq!(c.paper_count(), 1);
        assert_eq!(c.report().get(keys::QUARANTINE_NO_AUTHORS), 1);
        assert_eq!(c.quarantined()[0].id, "p2");
    }

    #[test]
    fn write_then_reload_is_equal() {
        let c = load_canonical(THREE.as_bytes(), ParseMode::Strict).unwrap();
        let mut buf = Vec::new();
        write_canonical(&c, &mut buf).unwrap();
        let again = load_canonical(buf.as_slice(), ParseMode::Strict).unwrap();
        assert_eq!(c, again);
    }
}
