//! End-to-end analysis of a corpus in the hep-th layout: ingest counts, the
//! graph measures for co-authorship and citations, the most cited paper's
//! citation trend, and the most-cited collaboration graph.
//!
//! `cargo run --release --example hepth_report -- <dir>` where `<dir>` holds
//! `cit-HepTh.txt`, `cit-HepTh-dates.txt` and optionally an `abstracts/` tree.
//! Without an argument a miniature corpus in that layout is generated.

use std::error::Error;
use std::fs;
use std::path::{Path, PathBuf};

use tvgraph::ingest::{load_corpus, CorpusSource, ParseMode};
use tvgraph::metrics::Metric;
use tvgraph::metrics::{average_clustering, detect_communities, diameter, modularity};
use tvgraph::pipeline::{citation_trend, locate_phase_transition, most_cited_paper, series_for, Cadence};
use tvgraph::transforms::{build_citation, build_coauthorship, build_interaction, filter_most_cited};
use tvgraph::tvg::NodeScope;

fn write_miniature(dir: &Path) -> std::io::Result<()> {
    fs::write(
        dir.join("cit-HepTh.txt"),
        "# FromNodeId\tToNodeId\n9402002\t9401001\n9403003\t9401001\n9403003\t9402002\n9501004\t9403003\n9501004\t11401001\n",
    )?;
    fs::write(
        dir.join("cit-HepTh-dates.txt"),
        "# paper\tdate\nhep-th/9401001\t1994-01-03\nhep-th/9402002\t1994-02-10\nhep-th/9403003\t1994-03-21\nhep-th/9501004\t1995-01-09\n",
    )?;
    let abs = dir.join("abstracts/1994");
    fs::create_dir_all(&abs)?;
    let papers = [
        ("9401001", "A. One and B. Two"),
        ("9402002", "B. Two, C. Three"),
        ("9403003", "A. One, C. Three and D. Four"),
        ("9501004", "D. Four"),
    ];
    for (id, authors) in papers {
        fs::write(
            abs.join(format!("{id}.abs")),
            format!("------------------------------------------------------------------------------\n\\\\\nPaper: hep-th/{id}\nFrom: someone\nDate: Mon, 3 Jan 1994 00:00:00 GMT\n\nTitle: A paper\nAuthors: {authors}\nComments: 10 pages\n\\\\\n  Abstract text.\n\\\\\n"),
        )?;
    }
    Ok(())
}

pub fn analyze(dir: &Path, threshold: u64) -> Result<(), Box<dyn Error>> {
    let abstracts = dir.join("abstracts");
    let source = CorpusSource::HepTh {
        edges: dir.join("cit-HepTh.txt"),
        dates: dir.join("cit-HepTh-dates.txt"),
        abstracts: abstracts.is_dir().then_some(abstracts),
    };
    let corpus = load_corpus(&source, ParseMode::Lenient)?;
    print!("{}", corpus.report().to_flat_text());

    for (name, g) in [("G_a", build_coauthorship(&corpus)), ("G_c", build_citation(&corpus))] {
        let p = detect_communities(&g, 1)?;
        println!(
            "{name}: v={} e={} diameter={} modularity={:.3} clustering={:.4}",
            g.node_count(),
            g.edge_count(),
            diameter(&g)?,
            modularity(&g, &p)?,
            average_clustering(&g)?
        );
    }

    if let Some((id, n)) = most_cited_paper(&corpus) {
        let trend = citation_trend(&corpus, &id, Cadence::Months(6))?;
        let values: Vec<String> =
            trend.points.iter().map(|p| format!("{}:{}", p.label, p.value.unwrap_or(0.0))).collect();
        println!("most cited {id} ({n}): {}", values.join(" "));
    }

    let gi = filter_most_cited(&build_interaction(&corpus), threshold);
    println!("G_i at threshold {threshold}: {} authors, {} pairs", gi.graph.node_count(), gi.graph.edge_count());
    let series = series_for(&gi.tvg, Cadence::Years(1), NodeScope::ActiveNodes, &[Metric::Clustering], 1)?;
    if let Ok(t) = locate_phase_transition(&series[0]) {
        println!("G_i clustering: largest change {} -> {} ({:+.4})", t.before_label, t.after_label, t.change);
    }
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dir = tempfile::tempdir()?;
    write_miniature(dir.path())?;
    analyze(dir.path(), 1)
}

fn main() -> Result<(), Box<dyn Error>> {
    match std::env::args().nth(1) {
        Some(dir) => analyze(&PathBuf::from(dir), 150),
        None => run_example(),
    }
}
