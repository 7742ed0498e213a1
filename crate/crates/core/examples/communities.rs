//! Seeded community detection on a ring of cliques.

use std::error::Error;

use tvgraph::graph::from_index_edges;
use tvgraph::metrics::{detect_communities, modularity, Partition};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let (cliques, size) = (4usize, 5usize);
    let mut edges = Vec::new();
    for c in 0..cliques {
        let base = c * size;
        for i in 0..size {
            for j in i + 1..size {
                edges.push((base + i, base + j));
            }
        }
        edges.push((base, (base + size) % (cliques * size)));
    }
    let g = from_index_edges(cliques * size, false, &edges);

    let natural = Partition::from_assignment(&(0..g.node_count()).map(|i| i / size).collect::<Vec<_>>());
    println!("natural partition modularity {:.6}", modularity(&g, &natural)?);
    println!("single community modularity {:.6}", modularity(&g, &Partition::single(g.node_count()))?);

    for seed in [1, 7, 42] {
        let found = detect_communities(&g, seed)?;
        println!(
            "seed {seed:>2}: {} communities, modularity {:.6}, assignment {:?}",
            found.community_count(),
            modularity(&g, &found)?,
            found.assignment()
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
