//! Builds a small time-varying graph by hand and prints its yearly footprints.
//!
//! Run with `cargo run --example footprints`.

use std::error::Error;

use tvgraph::time::{Interval, TimeInstant};
use tvgraph::tvg::{NodeScope, TimeVaryingGraph};

fn day(y: i32, m: u32, d: u32) -> TimeInstant {
    TimeInstant::from_ymd(y, m, d).expect("valid date")
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut b = TimeVaryingGraph::builder(false);
    b.add_relation_named("ada", "bo", "coauthor", Interval::new(day(2001, 3, 1), day(2002, 6, 1)).unwrap());
    b.add_relation_named("bo", "cy", "coauthor", Interval::from(day(2002, 2, 1)));
    b.add_relation_named("cy", "dee", "coauthor", Interval::new(day(2003, 1, 1), day(2003, 2, 1)).unwrap());
    let tvg = b.build(tvgraph::tvg::Lifetime::new(day(2001, 1, 1), day(2004, 1, 1))?)?;

    let cuts: Vec<_> = (2001..=2004).map(|y| day(y, 1, 1)).collect();
    for scope in [NodeScope::ActiveNodes, NodeScope::AllEntities] {
        println!("scope {scope:?}");
        for fp in tvg.footprint_sequence(&cuts, scope)? {
            let edges: Vec<String> = fp.graph.edge_name_set().into_iter().map(|(a, b)| format!("{a}-{b}")).collect();
            println!("  [{}, {}) nodes={} edges={:?}", fp.window.start, fp.window.end, fp.graph.node_count(), edges);
        }
    }
    let cumulative = tvg.cumulative_footprints(&cuts, NodeScope::ActiveNodes)?;
    let last = cumulative.last().expect("three windows");
    assert_eq!(last.graph.edge_count(), tvg.lifetime_footprint(NodeScope::ActiveNodes).edge_count());
    println!("cumulative footprint over the lifetime has {} edges", last.graph.edge_count());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
