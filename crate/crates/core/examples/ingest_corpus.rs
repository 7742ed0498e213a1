//! Loads a canonical record file, shows the ingest report and quarantine list,
//! and writes the cleaned corpus back out.
//!
//! `cargo run --example ingest_corpus [records.tsv]`

use std::error::Error;
use std::io::Cursor;

use tvgraph::ingest::{load_canonical, load_corpus, write_canonical, Corpus, CorpusSource, ParseMode};

const SAMPLE: &str = "\
q1\t1994-05-02\tGross, D.;Witten, E.\t
q2\t1994-11-30\tWitten, E.;Seiberg, N.\tq1,q9
q3\t1995-01-17\tSeiberg, N.\tq1,q2,q3
q4\t1995-02-01\t\tq1
q5\tnot-a-date\tPolchinski, J.\tq2
";

pub fn summarize(corpus: &Corpus) {
    print!("{}", corpus.report().to_flat_text());
    for q in corpus.quarantined() {
        println!("quarantined {} ({})", q.id, q.reason);
    }
    println!("lifetime [{}, {})", corpus.lifetime().start, corpus.lifetime().end);
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let corpus = load_canonical(Cursor::new(SAMPLE), ParseMode::Lenient)?;
    summarize(&corpus);
    let mut out = Vec::new();
    write_canonical(&corpus, &mut out)?;
    print!("{}", String::from_utf8(out)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    match std::env::args().nth(1) {
        Some(path) => {
            let corpus = load_corpus(&CorpusSource::Canonical { records: path.into() }, ParseMode::Lenient)?;
            summarize(&corpus);
            Ok(())
        }
        None => run_example(),
    }
}
