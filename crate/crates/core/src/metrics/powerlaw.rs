use std::collections::BTreeMap;

use super::{undefined, MetricError};
use crate::graph::StaticGraph;

/// Least-squares slope of `ln f(k)` against `ln k` over the degree histogram,
/// degrees >= 1. Needs at least two distinct positive degrees.
pub fn power_law_from_degrees<I: IntoIterator<Item = usize>>(degrees: I) -> Result<f64, MetricError> {
    let mut histogram: BTreeMap<usize, u64> = BTreeMap::new();
    for d in degrees.into_iter().filter(|&d| d >= 1) {
        *histogram.entry(d).or_insert(0) += 1;
    }
    if histogram.len() < 2 {
        return undefined("power-law fit needs at least two distinct positive degrees");
    }
    let points: Vec<(f64, f64)> = histogram.iter().map(|(&k, &f)| ((k as f64).ln(), (f as f64).ln())).collect();
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|(x, y)| (x - mean_x) * (y - mean_y)).sum();
    let sxx: f64 = points.iter().map(|(x, _)| (x - mean_x).powi(2)).sum();
    Ok(sxy / sxx)
}

/// Power-law exponent of the undirected degree distribution (a negative slope).
pub fn power_law_exponent(g: &StaticGraph) -> Result<f64, MetricError> {
    power_law_from_degrees((0..g.node_count() as u32).map(|u| g.degree(u)))
}
