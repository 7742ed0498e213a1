use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::*;
use crate::graph::StaticGraph;
use crate::tvg::{Footprint, Window};

/// A named indicator that can be evaluated on any footprint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Metric {
    Nodes,
    Edges,
    Clustering,
    Density,
    Modularity,
    Diameter,
    AveragePathLength,
    AverageDegree,
    NodeEdgeRatio,
    PowerLaw,
    Cyclomatic,
    Alpha,
    Beta,
    Gamma,
}

impl Metric {
    pub const ALL: [Metric; 14] = [
        Metric::Nodes,
        Metric::Edges,
        Metric::Clustering,
        Metric::Density,
        Metric::Modularity,
        Metric::Diameter,
        Metric::AveragePathLength,
        Metric::AverageDegree,
        Metric::NodeEdgeRatio,
        Metric::PowerLaw,
        Metric::Cyclomatic,
        Metric::Alpha,
        Metric::Beta,
        Metric::Gamma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metric::Nodes => "nodes",
            Metric::Edges => "edges",
            Metric::Clustering => "clustering",
            Metric::Density => "density",
            Metric::Modularity => "modularity",
            Metric::Diameter => "diameter",
            Metric::AveragePathLength => "average_path_length",
            Metric::AverageDegree => "average_degree",
            Metric::NodeEdgeRatio => "node_edge_ratio",
            Metric::PowerLaw => "power_law",
            Metric::Cyclomatic => "cyclomatic",
            Metric::Alpha => "alpha",
            Metric::Beta => "beta",
            Metric::Gamma => "gamma",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = MetricError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Metric::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| MetricError::UnknownMetric(s.to_owned()))
    }
}

/// Evaluates one metric; `seed` drives community detection for modularity.
pub fn evaluate(metric: Metric, g: &StaticGraph, seed: u64) -> Result<f64, MetricError> {
    match metric {
        Metric::Nodes => Ok(g.node_count() as f64),
        Metric::Edges => Ok(g.edge_count() as f64),
        Metric::Clustering => average_clustering(g),
        Metric::Density => density(g),
        Metric::Modularity => {
            let p = detect_communities(g, seed)?;
            modularity(g, &p)
        }
        Metric::Diameter => diameter(g).map(|d| d as f64),
        Metric::AveragePathLength => average_path_length(g),
        Metric::AverageDegree => average_degree(g),
        Metric::NodeEdgeRatio => node_edge_ratio(g),
        Metric::PowerLaw => power_law_exponent(g),
        Metric::Cyclomatic => Ok(cyclomatic_number(g) as f64),
        Metric::Alpha => alpha_index(g),
        Metric::Beta => beta_index(g),
        Metric::Gamma => gamma_index(g),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeriesPoint {
    pub label: String,
    pub window: Window,
    /// `None` marks a window where the metric is undefined.
    pub value: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MetricSeries {
    pub name: String,
    pub points: Vec<SeriesPoint>,
}

impl MetricSeries {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn values(&self) -> Vec<Option<f64>> {
        self.points.iter().map(|p| p.value).collect()
    }

    pub fn defined_count(&self) -> usize {
        self.points.iter().filter(|p| p.value.is_some()).count()
    }

    /// Replaces the default ISO-date labels; `labels` must match in length.
    pub fn with_labels(mut self, labels: &[String]) -> Self {
        assert_eq!(labels.len(), self.points.len(), "one label per window");
        for (p, l) in self.points.iter_mut().zip(labels) {
            p.label = l.clone();
        }
        self
    }
}

/// One value per footprint, evaluated in parallel and assembled in window
/// order. Windows are labelled by their start date.
pub fn metric_series(footprints: &[Footprint], metric: Metric, seed: u64) -> Result<MetricSeries, MetricError> {
    if footprints.is_empty() {
        return Err(MetricError::Undefined("metric series over no footprints".into()));
    }
    let points = footprints
        .par_iter()
        .map(|f| SeriesPoint {
            label: f.window.start.to_string(),
            window: f.window,
            value: evaluate(metric, &f.graph, seed).ok(),
        })
        .collect();
    Ok(MetricSeries { name: metric.name().to_owned(), points })
}
