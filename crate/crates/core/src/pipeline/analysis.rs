//! Derived reports: phase-transition locator, citation trend, and the
//! largest-component snapshot table.

use std::fmt::Write as _;

use super::{Cadence, PipelineError};
use crate::graph::StaticGraph;
use crate::ingest::Corpus;
use crate::metrics::{self, MetricError, MetricSeries, SeriesPoint};
use crate::tvg::{Footprint, Window};

/// The window boundary with the largest absolute change between consecutive
/// defined points.
#[derive(Clone, Debug, PartialEq)]
pub struct PhaseTransition {
    pub before_index: usize,
    pub after_index: usize,
    pub before_label: String,
    pub after_label: String,
    /// Absolute size of the change.
    pub delta: f64,
    /// Signed change, `after - before`.
    pub change: f64,
}

/// Ties go to the earliest boundary. Undefined points are skipped.
pub fn locate_phase_transition(series: &MetricSeries) -> Result<PhaseTransition, MetricError> {
    let defined: Vec<(usize, f64)> =
        series.points.iter().enumerate().filter_map(|(i, p)| p.value.map(|v| (i, v))).collect();
    if defined.len() < 2 {
        return Err(MetricError::Undefined("phase transition needs two defined points".into()));
    }
    let mut best: Option<PhaseTransition> = None;
    for w in defined.windows(2) {
        let ((i, a), (j, b)) = (w[0], w[1]);
        let delta = (b - a).abs();
        if best.as_ref().is_none_or(|p| delta > p.delta) {
            best = Some(PhaseTransition {
                before_index: i,
                after_index: j,
                before_label: series.points[i].label.clone(),
                after_label: series.points[j].label.clone(),
                delta,
                change: b - a,
            });
        }
    }
    Ok(best.expect("at least one boundary"))
}

/// Citations received by `paper_id` per window of `bin`, by citing-paper date.
pub fn citation_trend(corpus: &Corpus, paper_id: &str, bin: Cadence) -> Result<MetricSeries, PipelineError> {
    if corpus.get(paper_id).is_none() {
        return Err(PipelineError::UnknownPaper(paper_id.to_owned()));
    }
    let cuts = bin.cuts(corpus.lifetime());
    let mut counts = vec![0u64; cuts.len() - 1];
    for p in corpus.papers() {
        if p.internal_references().any(|r| r == paper_id) {
            let idx = cuts.partition_point(|&c| c <= p.date) - 1;
            counts[idx] += 1;
        }
    }
    let points = cuts
        .windows(2)
        .zip(counts)
        .map(|(w, n)| SeriesPoint {
            label: bin.label(w[0]),
            window: Window { start: w[0], end: w[1] },
            value: Some(n as f64),
        })
        .collect();
    Ok(MetricSeries { name: format!("citations:{paper_id}"), points })
}

/// Most cited paper and its citation count; ties go to the smallest id.
pub fn most_cited_paper(corpus: &Corpus) -> Option<(String, usize)> {
    let mut best: Option<(&str, usize)> = None;
    for (id, n) in corpus.citation_counts() {
        if best.is_none_or(|(_, b)| n > b) {
            best = Some((id, n));
        }
    }
    best.map(|(id, n)| (id.to_owned(), n))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SnapshotRow {
    pub label: String,
    pub vertices: usize,
    pub edges: usize,
    pub diameter: Option<usize>,
    pub cyclomatic: Option<i64>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub gamma: Option<f64>,
}

impl SnapshotRow {
    /// Indicators of one connected component with `v` vertices and `e` edges.
    pub fn from_counts(label: impl Into<String>, v: usize, e: usize, diameter: Option<usize>) -> Self {
        let cycles_defined = v >= 3;
        SnapshotRow {
            label: label.into(),
            vertices: v,
            edges: e,
            diameter,
            cyclomatic: cycles_defined.then(|| metrics::cyclomatic_from_counts(v, e, 1)),
            alpha: metrics::alpha_from_counts(v, e, 1).ok(),
            beta: metrics::beta_from_counts(v, e).ok(),
            gamma: metrics::gamma_from_counts(v, e).ok(),
        }
    }

    /// Indicators of the largest connected component of `g`.
    pub fn from_graph(label: &str, g: &StaticGraph) -> Self {
        let lcc = g.largest_component();
        let diameter = metrics::diameter(&lcc).ok();
        SnapshotRow::from_counts(label, lcc.node_count(), metrics::undirected_edge_count(&lcc), diameter)
    }

    /// `mu = e - v + 1` and `beta = e / v` where defined.
    pub fn is_consistent(&self) -> bool {
        let mu_ok = self.cyclomatic.is_none_or(|mu| mu == self.edges as i64 - self.vertices as i64 + 1);
        let beta_ok = self.beta.is_none_or(|b| (b - self.edges as f64 / self.vertices as f64).abs() < 1e-12);
        mu_ok && beta_ok
    }
}

/// Largest-connected-component indicators per snapshot.
#[derive(Clone, Debug, PartialEq)]
pub struct SnapshotTable {
    pub rows: Vec<SnapshotRow>,
}

/// Truncates (not rounds) to `decimals` places, the way tabulated indicators
/// are usually printed.
pub fn truncate_to(value: f64, decimals: u32) -> f64 {
    let scale = 10f64.powi(decimals as i32);
    (value * scale + 1e-9).floor() / scale
}

impl SnapshotTable {
    pub const HEADER: &'static str = "window,vertices,edges,diameter,cyclomatic,alpha,beta,gamma";

    pub fn to_csv(&self) -> String {
        let opt = |v: Option<String>| v.unwrap_or_default();
        let mut s = format!("{}\n", Self::HEADER);
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{},{},{},{},{},{},{},{}",
                r.label,
                r.vertices,
                r.edges,
                opt(r.diameter.map(|d| d.to_string())),
                opt(r.cyclomatic.map(|c| c.to_string())),
                opt(r.alpha.map(|a| format!("{:.3}", truncate_to(a, 3)))),
                opt(r.beta.map(|b| format!("{:.2}", truncate_to(b, 2)))),
                opt(r.gamma.map(|g| format!("{:.2}", truncate_to(g, 2)))),
            );
        }
        s
    }
}

/// Evaluates the largest component of every snapshot graph. Rows are labelled
/// `YYYY-MM` by the end of the snapshot window.
pub fn community_snapshot_table(snapshots: &[Footprint]) -> Result<SnapshotTable, PipelineError> {
    if snapshots.is_empty() {
        return Err(PipelineError::Config("snapshot table needs at least one snapshot".into()));
    }
    let rows = snapshots
        .iter()
        .map(|f| {
            let label = f.window.end.to_date().format("%Y-%m").to_string();
            SnapshotRow::from_graph(&label, &f.graph)
        })
        .collect();
    Ok(SnapshotTable { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::from_index_edges;
    use crate::time::TimeInstant;

    fn series(values: &[Option<f64>]) -> MetricSeries {
        MetricSeries {
            name: "x".into(),
            points: values
                .iter()
                .enumerate()
                .map(|(i, &value)| SeriesPoint {
                    label: i.to_string(),
                    window: Window { start: TimeInstant(i as i64), end: TimeInstant(i as i64 + 1) },
                    value,
                })
                .collect(),
        }
    }

    #[test]
    fn largest_drop_located() {
        let s = series(&[Some(1.0), Some(1.0), Some(1.0), Some(0.2), Some(0.2)]);
        let p = locate_phase_transition(&s).unwrap();
        assert_eq!((p.before_index, p.after_index), (2, 3));
        assert!((p.delta - 0.8).abs() < 1e-12);
        assert!(p.change < 0.0);
    }

    #[test]
    fn constant_series_picks_earliest() {
        let p = locate_phase_transition(&series(&[Some(3.0); 4])).unwrap();
        assert_eq!((p.before_index, p.delta), (0, 0.0));
        assert!(locate_phase_transition(&series(&[Some(1.0), None])).is_err());
        let gap = locate_phase_transition(&series(&[Some(1.0), None, Some(4.0)])).unwrap();
        assert_eq!((gap.before_index, gap.after_index), (0, 2));
    }

    #[test]
    fn snapshot_row_from_table_counts() {
        let r = SnapshotRow::from_counts("2000-10", 51, 75, Some(10));
        assert_eq!(r.cyclomatic, Some(25));
        assert_eq!(truncate_to(r.alpha.unwrap(), 2), 0.02);
        assert_eq!(truncate_to(r.beta.unwrap(), 2), 1.47);
        assert_eq!(truncate_to(r.gamma.unwrap(), 2), 51.02);
        assert!(r.is_consistent());
    }

    #[test]
    fn singleton_and_empty_snapshots() {
        let single = SnapshotRow::from_graph("s", &from_index_edges(1, false, &[]));
        assert_eq!(single.vertices, 1);
        assert_eq!((single.cyclomatic, single.alpha, single.gamma, single.diameter), (None, None, None, None));
        let empty = SnapshotRow::from_graph("e", &from_index_edges(0, false, &[]));
        assert_eq!((empty.vertices, empty.beta), (0, None));
    }

    #[test]
    fn table_tracks_largest_component() {
        let g = from_index_edges(7, false, &[(0, 1), (1, 2), (2, 0), (2, 3), (5, 6)]);
        let fp = Footprint { window: Window { start: TimeInstant(0), end: TimeInstant(1) }, graph: g };
        let t = community_snapshot_table(&[fp]).unwrap();
        let r = &t.rows[0];
        assert_eq!((r.vertices, r.edges, r.diameter, r.cyclomatic), (4, 4, Some(2), Some(1)));
        assert!(t.to_csv().starts_with(SnapshotTable::HEADER));
    }
}
