use std::collections::VecDeque;

use rayon::prelude::*;

use super::{undefined, MetricError};
use crate::graph::StaticGraph;

/// How pairs are counted when reporting unreachable pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairCounting {
    Ordered,
    /// Halves the ordered count; meaningful for undirected graphs.
    Unordered,
}

/// Shortest-path summary over reachable ordered pairs `(u, v)`, `u != v`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PathStats {
    pub diameter: usize,
    pub average_path_length: f64,
    pub reachable_pairs: u64,
    pub unreachable_ordered_pairs: u64,
    /// Sum of all reachable-pair distances.
    pub total_distance: u64,
}

impl PathStats {
    pub fn unreachable_pairs(&self, counting: PairCounting) -> u64 {
        match counting {
            PairCounting::Ordered => self.unreachable_ordered_pairs,
            PairCounting::Unordered => self.unreachable_ordered_pairs / 2,
        }
    }
}

fn bfs(g: &StaticGraph, source: u32, dist: &mut [u32], queue: &mut VecDeque<u32>) -> (usize, u64, u64) {
    dist.fill(u32::MAX);
    dist[source as usize] = 0;
    queue.clear();
    queue.push_back(source);
    let (mut ecc, mut sum, mut reached) = (0usize, 0u64, 0u64);
    while let Some(u) = queue.pop_front() {
        let d = dist[u as usize];
        for &v in g.out_neighbors(u) {
            if dist[v as usize] == u32::MAX {
                dist[v as usize] = d + 1;
                ecc = ecc.max(d as usize + 1);
                sum += d as u64 + 1;
                reached += 1;
                queue.push_back(v);
            }
        }
    }
    (ecc, sum, reached)
}

/// All-pairs BFS, parallel over sources. Directed graphs follow edge direction.
pub fn path_stats(g: &StaticGraph) -> Result<PathStats, MetricError> {
    let n = g.node_count();
    if n == 0 {
        return undefined("path statistics of an empty graph");
    }
    let (diameter, total, reachable) = (0..n as u32)
        .into_par_iter()
        .map_init(|| (vec![u32::MAX; n], VecDeque::new()), |(dist, queue), s| bfs(g, s, dist, queue))
        .reduce(|| (0, 0, 0), |a, b| (a.0.max(b.0), a.1 + b.1, a.2 + b.2));
    if reachable == 0 {
        return undefined("no pair of nodes is connected");
    }
    let all_ordered = n as u64 * (n as u64 - 1);
    Ok(PathStats {
        diameter,
        average_path_length: total as f64 / reachable as f64,
        reachable_pairs: reachable,
        unreachable_ordered_pairs: all_ordered - reachable,
        total_distance: total,
    })
}

pub fn diameter(g: &StaticGraph) -> Result<usize, MetricError> {
    path_stats(g).map(|s| s.diameter)
}

pub fn average_path_length(g: &StaticGraph) -> Result<f64, MetricError> {
    path_stats(g).map(|s| s.average_path_length)
}
