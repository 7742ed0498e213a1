//! Counting indicators: density, degree ratios, and the cycle-based
//! cyclomatic, alpha, beta and gamma indices.
//!
//! Alpha normalizes the cyclomatic number by `(v-1)(v-2)/2`; gamma compares
//! the edge count with the planar maximum `3(v-2)`, as a percentage.

use super::{undefined, MetricError};
use crate::graph::StaticGraph;

/// Edges of the underlying undirected simple graph.
pub fn undirected_edge_count(g: &StaticGraph) -> usize {
    if g.is_directed() {
        (0..g.node_count() as u32).map(|u| g.degree(u)).sum::<usize>() / 2
    } else {
        g.edge_count()
    }
}

/// `2e / v(v-1)` undirected, `e / v(v-1)` directed.
pub fn density(g: &StaticGraph) -> Result<f64, MetricError> {
    let v = g.node_count() as f64;
    if g.node_count() < 2 {
        return undefined("density needs at least 2 nodes");
    }
    let e = g.edge_count() as f64;
    let factor = if g.is_directed() { 1.0 } else { 2.0 };
    Ok(factor * e / (v * (v - 1.0)))
}

/// `2e / v` undirected; mean out-degree `e / v` directed.
pub fn average_degree(g: &StaticGraph) -> Result<f64, MetricError> {
    if g.node_count() == 0 {
        return undefined("average degree of an empty graph");
    }
    let factor = if g.is_directed() { 1.0 } else { 2.0 };
    Ok(factor * g.edge_count() as f64 / g.node_count() as f64)
}

pub fn node_edge_ratio(g: &StaticGraph) -> Result<f64, MetricError> {
    if g.node_count() == 0 {
        return undefined("node/edge ratio of an empty graph");
    }
    Ok(g.edge_count() as f64 / g.node_count() as f64)
}

/// `mu = e - v + p`.
pub fn cyclomatic_from_counts(v: usize, e: usize, p: usize) -> i64 {
    e as i64 - v as i64 + p as i64
}

pub fn alpha_from_counts(v: usize, e: usize, p: usize) -> Result<f64, MetricError> {
    if v < 3 {
        return undefined("alpha index needs at least 3 nodes");
    }
    let max_cycles = ((v - 1) * (v - 2)) as f64 / 2.0;
    Ok(cyclomatic_from_counts(v, e, p) as f64 / max_cycles)
}

pub fn beta_from_counts(v: usize, e: usize) -> Result<f64, MetricError> {
    if v == 0 {
        return undefined("beta index of an empty graph");
    }
    Ok(e as f64 / v as f64)
}

pub fn gamma_from_counts(v: usize, e: usize) -> Result<f64, MetricError> {
    if v < 3 {
        return undefined("gamma index needs at least 3 nodes");
    }
    Ok(100.0 * e as f64 / (3 * (v - 2)) as f64)
}

pub fn cyclomatic_number(g: &StaticGraph) -> i64 {
    cyclomatic_from_counts(g.node_count(), undirected_edge_count(g), g.component_count())
}

pub fn alpha_index(g: &StaticGraph) -> Result<f64, MetricError> {
    alpha_from_counts(g.node_count(), undirected_edge_count(g), g.component_count())
}

pub fn beta_index(g: &StaticGraph) -> Result<f64, MetricError> {
    beta_from_counts(g.node_count(), undirected_edge_count(g))
}

pub fn gamma_index(g: &StaticGraph) -> Result<f64, MetricError> {
    gamma_from_counts(g.node_count(), undirected_edge_count(g))
}
