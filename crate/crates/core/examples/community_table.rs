//! Cycle-structure indicators of the largest component, computed from counts
//! and printed at the customary precision, then checked on actual graphs.

use std::error::Error;

use tvgraph::graph::from_index_edges;
use tvgraph::metrics::{alpha_index, beta_index, cyclomatic_number, gamma_index};
use tvgraph::pipeline::{SnapshotRow, SnapshotTable};

/// A connected graph with `v` nodes and `e` edges: a path plus chords.
fn connected(v: usize, e: usize) -> tvgraph::graph::StaticGraph {
    let mut edges: Vec<(usize, usize)> = (1..v).map(|i| (i - 1, i)).collect();
    'fill: for gap in 2..v {
        for i in 0..v - gap {
            if edges.len() == e {
                break 'fill;
            }
            edges.push((i, i + gap));
        }
    }
    from_index_edges(v, false, &edges)
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let counts = [(51, 75), (65, 99), (66, 100), (67, 106), (70, 110), (72, 114)];
    let labels = ["2000-10", "2001-04", "2001-10", "2002-04", "2002-10", "2003-04"];
    let mut rows = Vec::new();
    for ((v, e), label) in counts.into_iter().zip(labels) {
        let g = connected(v, e);
        assert_eq!((g.node_count(), g.edge_count(), g.component_count()), (v, e, 1));
        println!(
            "{label}: mu={} alpha={:.6} beta={:.6} gamma={:.6}",
            cyclomatic_number(&g),
            alpha_index(&g)?,
            beta_index(&g)?,
            gamma_index(&g)?
        );
        rows.push(SnapshotRow::from_graph(label, &g));
    }
    let table = SnapshotTable { rows };
    print!("{}", table.to_csv());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
