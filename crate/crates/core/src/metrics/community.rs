//! Modularity and greedy community detection (local moving plus aggregation).
//!
//! Graphs are read as undirected and unweighted at the first level; the
//! aggregated levels carry integer-valued weights in `f64`. Node visiting
//! order is a seeded shuffle, and all tie-breaks follow adjacency order, so a
//! fixed seed yields the same partition on every run.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{undefined, MetricError};
use crate::graph::StaticGraph;

const MIN_GAIN: f64 = 1e-12;

/// Community id per node, ids dense from 0 in order of first appearance.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    assignment: Vec<u32>,
}

impl Partition {
    /// Relabels arbitrary ids densely in order of first appearance.
    pub fn from_assignment<T: Copy + Eq + std::hash::Hash>(raw: &[T]) -> Self {
        let mut ids = std::collections::HashMap::new();
        let assignment = raw
            .iter()
            .map(|c| {
                let next = ids.len() as u32;
                *ids.entry(*c).or_insert(next)
            })
            .collect();
        Partition { assignment }
    }

    pub fn single(n: usize) -> Self {
        Partition { assignment: vec![0; n] }
    }

    pub fn singletons(n: usize) -> Self {
        Partition { assignment: (0..n as u32).collect() }
    }

    pub fn community_of(&self, node: u32) -> u32 {
        self.assignment[node as usize]
    }

    pub fn assignment(&self) -> &[u32] {
        &self.assignment
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn community_count(&self) -> usize {
        self.assignment.iter().max().map_or(0, |&m| m as usize + 1)
    }
}

/// `Q = sum_c (e_c / m - (d_c / 2m)^2)` on the underlying undirected graph.
pub fn modularity(g: &StaticGraph, partition: &Partition) -> Result<f64, MetricError> {
    let n = g.node_count();
    if partition.len() != n {
        return undefined(format!("partition covers {} nodes, graph has {n}", partition.len()));
    }
    let mut internal = vec![0u64; partition.community_count()];
    let mut degree_sum = vec![0u64; partition.community_count()];
    let mut m = 0u64;
    for u in 0..n as u32 {
        let cu = partition.community_of(u) as usize;
        degree_sum[cu] += g.degree(u) as u64;
        for &v in g.neighbors(u) {
            if v > u {
                m += 1;
                if partition.community_of(v) as usize == cu {
                    internal[cu] += 1;
                }
            }
        }
    }
    if m == 0 {
        return undefined("modularity of a graph without edges");
    }
    let m = m as f64;
    Ok(internal.iter().zip(&degree_sum).map(|(&e, &d)| e as f64 / m - (d as f64 / (2.0 * m)).powi(2)).sum())
}

struct Level {
    adj: Vec<Vec<(usize, f64)>>,
    /// Weight of edges folded inside each node, counted from both ends.
    loops: Vec<f64>,
}

impl Level {
    fn from_graph(g: &StaticGraph) -> Self {
        let n = g.node_count();
        let adj = (0..n as u32).map(|u| g.neighbors(u).iter().map(|&v| (v as usize, 1.0)).collect()).collect();
        Level { adj, loops: vec![0.0; n] }
    }

    fn strength(&self, i: usize) -> f64 {
        self.loops[i] + self.adj[i].iter().map(|&(_, w)| w).sum::<f64>()
    }

    /// Returns the community of every node and whether any node moved.
    fn local_moving(&self, order: &[usize], two_m: f64) -> (Vec<usize>, bool) {
        let n = self.adj.len();
        let strength: Vec<f64> = (0..n).map(|i| self.strength(i)).collect();
        let mut community: Vec<usize> = (0..n).collect();
        let mut total = strength.clone();
        let mut weight_to = vec![0.0; n];
        let mut touched: Vec<usize> = Vec::new();
        let mut is_touched = vec![false; n];
        let mut moved_any = false;
        loop {
            let mut moved = false;
            for &i in order {
                let own = community[i];
                let k = strength[i];
                total[own] -= k;
                touched.clear();
                touched.push(own);
                is_touched[own] = true;
                for &(j, w) in &self.adj[i] {
                    let c = community[j];
                    if !is_touched[c] {
                        is_touched[c] = true;
                        touched.push(c);
                    }
                    weight_to[c] += w;
                }
                let gain = |c: usize| weight_to[c] - total[c] * k / two_m;
                let mut best = own;
                let mut best_gain = gain(own);
                for &c in &touched[1..] {
                    let g = gain(c);
                    if g > best_gain + MIN_GAIN {
                        best = c;
                        best_gain = g;
                    }
                }
                for &c in &touched {
                    weight_to[c] = 0.0;
                    is_touched[c] = false;
                }
                total[best] += k;
                if best != own {
                    community[i] = best;
                    moved = true;
                    moved_any = true;
                }
            }
            if !moved {
                break;
            }
        }
        (community, moved_any)
    }

    fn aggregate(&self, dense: &[usize], count: usize) -> Level {
        let mut loops = vec![0.0; count];
        let mut maps: Vec<std::collections::BTreeMap<usize, f64>> = vec![Default::default(); count];
        for (i, nbrs) in self.adj.iter().enumerate() {
            let ci = dense[i];
            loops[ci] += self.loops[i];
            for &(j, w) in nbrs {
                let cj = dense[j];
                if ci == cj {
                    loops[ci] += w;
                } else {
                    *maps[ci].entry(cj).or_insert(0.0) += w;
                }
            }
        }
        Level { adj: maps.into_iter().map(|m| m.into_iter().collect()).collect(), loops }
    }
}

fn densify(community: &[usize]) -> (Vec<usize>, usize) {
    let mut id = vec![usize::MAX; community.len()];
    let mut next = 0;
    let dense = community
        .iter()
        .map(|&c| {
            if id[c] == usize::MAX {
                id[c] = next;
                next += 1;
            }
            id[c]
        })
        .collect();
    (dense, next)
}

/// Greedy modularity maximisation with a seeded, deterministic node order.
pub fn detect_communities(g: &StaticGraph, seed: u64) -> Result<Partition, MetricError> {
    let n = g.node_count();
    if n == 0 {
        return undefined("community detection on an empty graph");
    }
    let mut level = Level::from_graph(g);
    let two_m: f64 = (0..n).map(|i| level.strength(i)).sum();
    if two_m == 0.0 {
        return Ok(Partition::singletons(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut membership: Vec<usize> = (0..n).collect();
    loop {
        let mut order: Vec<usize> = (0..level.adj.len()).collect();
        order.shuffle(&mut rng);
        let (community, moved) = level.local_moving(&order, two_m);
        if !moved {
            break;
        }
        let (dense, count) = densify(&community);
        for m in membership.iter_mut() {
            *m = dense[*m];
        }
        level = level.aggregate(&dense, count);
    }
    let partition = Partition::from_assignment(&membership);
    if modularity(g, &partition)? < 0.0 {
        return Ok(Partition::single(n));
    }
    Ok(partition)
}
