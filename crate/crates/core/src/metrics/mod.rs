//! Static indicators over [`StaticGraph`]s and their per-window series.
//!
//! Metrics that are undefined for a graph (too few nodes, no edges, a
//! degenerate degree distribution) return [`MetricError::Undefined`] rather
//! than a fabricated zero. Directed graphs are read through their underlying
//! undirected simple graph, except for shortest paths, which follow edge
//! direction.

mod clustering;
mod community;
mod indices;
mod paths;
mod powerlaw;
mod series;

use thiserror::Error;

pub use clustering::{average_clustering, local_clustering};
pub use community::{detect_communities, modularity, Partition};
pub use indices::{
    alpha_from_counts, alpha_index, average_degree, beta_from_counts, beta_index, cyclomatic_from_counts,
    cyclomatic_number, density, gamma_from_counts, gamma_index, node_edge_ratio, undirected_edge_count,
};
pub use paths::{average_path_length, diameter, path_stats, PairCounting, PathStats};
pub use powerlaw::{power_law_exponent, power_law_from_degrees};
pub use series::{evaluate, metric_series, Metric, MetricSeries, SeriesPoint};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MetricError {
    #[error("metric undefined: {0}")]
    Undefined(String),
    #[error("unknown metric `{0}`")]
    UnknownMetric(String),
}

pub(crate) fn undefined<T>(why: impl Into<String>) -> Result<T, MetricError> {
    Err(MetricError::Undefined(why.into()))
}
