//! Writes a temporal co-authorship graph as GraphML, DOT and an edge list,
//! then reads the GraphML back.

use std::error::Error;
use std::io::Cursor;

use tvgraph::ingest::{load_canonical, ParseMode};
use tvgraph::pipeline::{export_tvg, read_graphml, ExportFormat};
use tvgraph::transforms::{build_interaction, filter_most_cited};
use tvgraph::tvg::NodeScope;

const RECORDS: &str = "\
g1\t2010-01-04\tRuiz;Sato\t
g2\t2010-05-11\tSato;Tan;Ueda\tg1
g3\t2011-02-20\tVoss\tg1,g2
g4\t2011-08-08\tRuiz & Co;Voss\tg2,g3
g5\t2012-01-09\tTan\tg4
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let corpus = load_canonical(Cursor::new(RECORDS), ParseMode::Strict)?;
    let gi = filter_most_cited(&build_interaction(&corpus), 1);

    for format in [ExportFormat::EdgeList, ExportFormat::Dot, ExportFormat::GraphMl] {
        let mut buf = Vec::new();
        export_tvg(&gi.tvg, format, &mut buf)?;
        println!("--- .{}\n{}", format.extension(), String::from_utf8(buf)?);
    }

    let mut xml = Vec::new();
    export_tvg(&gi.tvg, ExportFormat::GraphMl, &mut xml)?;
    let back = read_graphml(Cursor::new(xml))?;
    assert_eq!(back.edge_name_set(), gi.tvg.lifetime_footprint(NodeScope::ActiveNodes).edge_name_set());
    println!("GraphML round trip: {} nodes, {} edges", back.node_count(), back.edge_count());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
