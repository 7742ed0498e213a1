//! Static and temporal co-authorship and citation graphs from one corpus,
//! with the clustering, density, modularity and diameter of each.

use std::error::Error;
use std::io::Cursor;

use tvgraph::graph::StaticGraph;
use tvgraph::ingest::{load_canonical, ParseMode};
use tvgraph::metrics::{average_clustering, density, detect_communities, diameter, modularity};
use tvgraph::transforms::{build_citation, build_coauthorship, build_temporal_coauthorship};
use tvgraph::tvg::NodeScope;

const RECORDS: &str = "\
a1\t1992-02-01\tAbe;Bea;Cal\t
a2\t1992-08-01\tAbe;Dot\ta1
a3\t1993-03-01\tDot;Eli;Fay\ta1,a2
a4\t1993-09-01\tFay;Gus\ta3
a5\t1994-01-01\tGus;Hal;Abe\ta1,a3,a4
a6\t1994-06-01\tHal;Ivy\ta5,a2
";

fn describe(name: &str, g: &StaticGraph) -> Result<(), Box<dyn Error>> {
    let p = detect_communities(g, 1)?;
    println!(
        "{name}: v={} e={} clustering={:.4} density={:.4} diameter={} modularity={:.4} ({} communities)",
        g.node_count(),
        g.edge_count(),
        average_clustering(g)?,
        density(g)?,
        diameter(g)?,
        modularity(g, &p)?,
        p.community_count()
    );
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let corpus = load_canonical(Cursor::new(RECORDS), ParseMode::Strict)?;
    let ga = build_coauthorship(&corpus);
    let gc = build_citation(&corpus);
    describe("G_a", &ga)?;
    describe("G_c", &gc)?;

    let ga_t = build_temporal_coauthorship(&corpus);
    assert_eq!(ga_t.lifetime_footprint(NodeScope::ActiveNodes).edge_name_set(), ga.edge_name_set());
    for (_, rec) in ga_t.relations() {
        let r = &rec.relation;
        println!(
            "  {}-{} first seen {} via {:?}",
            ga_t.entity_name(r.a),
            ga_t.entity_name(r.b),
            rec.presence.first_start().expect("non-empty presence"),
            rec.sources
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
