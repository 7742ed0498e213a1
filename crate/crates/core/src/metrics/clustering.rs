use super::{undefined, MetricError};
use crate::graph::StaticGraph;

/// Local clustering of every node; nodes of degree < 2 get 0.
pub fn local_clustering(g: &StaticGraph) -> Vec<f64> {
    let n = g.node_count();
    let mut mark = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for u in 0..n as u32 {
        let nbrs = g.neighbors(u);
        let k = nbrs.len();
        if k < 2 {
            out.push(0.0);
            continue;
        }
        for &v in nbrs {
            mark[v as usize] = true;
        }
        let mut links = 0u64;
        for &v in nbrs {
            links += g.neighbors(v).iter().filter(|&&w| w > v && mark[w as usize]).count() as u64;
        }
        for &v in nbrs {
            mark[v as usize] = false;
        }
        out.push(2.0 * links as f64 / (k * (k - 1)) as f64);
    }
    out
}

/// Mean local clustering coefficient over all nodes.
pub fn average_clustering(g: &StaticGraph) -> Result<f64, MetricError> {
    if g.node_count() == 0 {
        return undefined("clustering of an empty graph");
    }
    let local = local_clustering(g);
    Ok(local.iter().sum::<f64>() / local.len() as f64)
}
