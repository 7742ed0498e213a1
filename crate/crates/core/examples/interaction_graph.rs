//! The cited-collaboration graph: author pairs weighted by the citations their
//! joint papers received over time, and its most-cited subgraph.

use std::error::Error;
use std::io::Cursor;

use tvgraph::ingest::{load_canonical, ParseMode};
use tvgraph::time::TimeInstant;
use tvgraph::transforms::{build_interaction, filter_most_cited};

const RECORDS: &str = "\
x1\t2000-01-10\tKim;Lee\t
x2\t2000-03-05\tLee;Moe;Ned\t
x3\t2000-07-22\tOla\tx1,x2
x4\t2001-02-14\tKim;Ola\tx1,x2
x5\t2001-09-30\tPia;Ned\tx1,x4
x6\t2002-04-01\tPia\tx2,x4,x5
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let corpus = load_canonical(Cursor::new(RECORDS), ParseMode::Strict)?;
    let gcc = build_interaction(&corpus);
    let probe = TimeInstant::from_ymd(2001, 1, 1).unwrap();
    for (_, rec) in gcc.tvg.relations() {
        let s = rec.strength.as_ref().expect("interaction relations carry strength");
        println!(
            "{:>3}-{:<3} strength at {probe}: {}  final: {}",
            gcc.tvg.entity_name(rec.relation.a),
            gcc.tvg.entity_name(rec.relation.b),
            s.at(probe),
            s.final_value()
        );
    }
    println!("citations of single-author papers left out: {}", gcc.excluded_solo_citations);
    for threshold in [0, 1, 2, 3] {
        let gi = filter_most_cited(&gcc, threshold);
        println!("threshold {threshold}: {} authors, {} pairs", gi.graph.node_count(), gi.graph.edge_count());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
