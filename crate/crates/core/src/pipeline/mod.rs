//! End-to-end orchestration: ingest, build, footprint sequences, metric
//! series, derived reports, and file exports. The `tvgraph` binary is a thin
//! wrapper over the `run_*` functions here.

mod analysis;
mod config;
mod export;

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use thiserror::Error;

use crate::graph::StaticGraph;
use crate::ingest::{load_corpus, Corpus, IngestError};
use crate::metrics::{metric_series, Metric, MetricError, MetricSeries};
use crate::transforms;
use crate::tvg::{NodeScope, TimeVaryingGraph, TvgError};

pub use analysis::{
    citation_trend, community_snapshot_table, locate_phase_transition, most_cited_paper, truncate_to, PhaseTransition,
    SnapshotRow, SnapshotTable,
};
pub use config::{AnalysisConfig, Cadence, InputFormat};
pub use export::{export_graph, export_tvg, read_graphml, ExportFormat};

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Ingest(#[from] IngestError),
    #[error(transparent)]
    Tvg(#[from] TvgError),
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("graphml error: {0}")]
    Xml(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("unknown paper {0}")]
    UnknownPaper(String),
}

/// The three analysed networks: co-authorship, citation, and most-cited collaborations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphKind {
    Ga,
    Gc,
    Gi,
}

impl GraphKind {
    pub const ALL: [GraphKind; 3] = [GraphKind::Gc, GraphKind::Ga, GraphKind::Gi];

    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Ga => "ga",
            GraphKind::Gc => "gc",
            GraphKind::Gi => "gi",
        }
    }

    /// Metrics reported per window for this graph.
    pub fn report_metrics(self) -> &'static [Metric] {
        match self {
            GraphKind::Ga | GraphKind::Gc => &[Metric::Clustering, Metric::Density, Metric::Modularity],
            GraphKind::Gi => &[
                Metric::Clustering,
                Metric::Density,
                Metric::Modularity,
                Metric::AverageDegree,
                Metric::AveragePathLength,
                Metric::PowerLaw,
                Metric::NodeEdgeRatio,
            ],
        }
    }
}

impl FromStr for GraphKind {
    type Err = PipelineError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ga" | "coauthorship" => Ok(GraphKind::Ga),
            "gc" | "citation" => Ok(GraphKind::Gc),
            "gi" | "interaction" => Ok(GraphKind::Gi),
            other => Err(PipelineError::Config(format!("unknown graph `{other}` (expected ga, gc or gi)"))),
        }
    }
}

/// Temporal version of a graph kind. `Gi` is the most-cited interaction subgraph.
pub fn temporal_graph(corpus: &Corpus, kind: GraphKind, threshold: u64) -> TimeVaryingGraph {
    match kind {
        GraphKind::Ga => transforms::build_temporal_coauthorship(corpus),
        GraphKind::Gc => transforms::build_temporal_citation(corpus),
        GraphKind::Gi => transforms::filter_most_cited(&transforms::build_interaction(corpus), threshold).tvg,
    }
}

/// Metric series over the footprint sequence of `tvg`, labelled by `cadence`.
pub fn series_for(
    tvg: &TimeVaryingGraph,
    cadence: Cadence,
    scope: NodeScope,
    metrics: &[Metric],
    seed: u64,
) -> Result<Vec<MetricSeries>, PipelineError> {
    let cuts = cadence.cuts(tvg.lifetime());
    let labels = cadence.labels(&cuts);
    let footprints = tvg.footprint_sequence(&cuts, scope)?;
    metrics.iter().map(|&m| Ok(metric_series(&footprints, m, seed)?.with_labels(&labels))).collect()
}

pub const SERIES_HEADER: [&str; 4] = ["window", "metric", "value", "defined"];

/// CSV rows `window,metric,value,defined`; undefined values leave `value` empty.
pub fn write_series_csv<W: Write>(series: &[MetricSeries], out: W) -> Result<(), PipelineError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SERIES_HEADER)?;
    for s in series {
        for p in &s.points {
            let value = p.value.map(|v| v.to_string()).unwrap_or_default();
            w.write_record([
                p.label.as_str(),
                s.name.as_str(),
                value.as_str(),
                if p.value.is_some() { "true" } else { "false" },
            ])?;
        }
    }
    w.flush().map_err(|e| PipelineError::Csv(e.into()))?;
    Ok(())
}

fn create(path: &Path) -> Result<fs::File, PipelineError> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(|source| PipelineError::Io { path: dir.to_owned(), source })?;
    }
    fs::File::create(path).map_err(|source| PipelineError::Io { path: path.to_owned(), source })
}

fn write_string(path: &Path, text: &str) -> Result<(), PipelineError> {
    create(path)?.write_all(text.as_bytes()).map_err(|source| PipelineError::Io { path: path.to_owned(), source })
}

pub fn load(config: &AnalysisConfig) -> Result<Corpus, PipelineError> {
    Ok(load_corpus(&config.source()?, config.mode)?)
}

/// Loads the corpus and writes `ingest_report.txt`.
pub fn run_ingest(config: &AnalysisConfig) -> Result<(Corpus, PathBuf), PipelineError> {
    let corpus = load(config)?;
    let path = config.output_dir.join("ingest_report.txt");
    write_string(&path, &corpus.report().to_flat_text())?;
    Ok((corpus, path))
}

/// Static graph for a build kind, written as an edge list.
pub fn run_build(config: &AnalysisConfig, kind: GraphKind) -> Result<(StaticGraph, PathBuf), PipelineError> {
    let corpus = load(config)?;
    let g = match kind {
        GraphKind::Ga => transforms::build_coauthorship(&corpus),
        GraphKind::Gc => transforms::build_citation(&corpus),
        GraphKind::Gi => transforms::build_interaction(&corpus).support_graph(),
    };
    let path = config.output_dir.join(format!("{}.edgelist", kind.name()));
    let file = create(&path)?;
    export_graph(&g, ExportFormat::EdgeList, std::io::BufWriter::new(file))
        .map_err(|source| PipelineError::Io { path: path.clone(), source })?;
    Ok((g, path))
}

/// Per-window node and edge counts, written to `footprints_<graph>.csv`.
pub fn run_footprints(config: &AnalysisConfig, kind: GraphKind) -> Result<PathBuf, PipelineError> {
    let corpus = load(config)?;
    let tvg = temporal_graph(&corpus, kind, config.threshold);
    let cuts = config.window.cuts(tvg.lifetime());
    let labels = config.window.labels(&cuts);
    let footprints = tvg.footprint_sequence(&cuts, config.scope)?;
    let path = config.output_dir.join(format!("footprints_{}.csv", kind.name()));
    let mut w = csv::Writer::from_writer(create(&path)?);
    w.write_record(["window", "start", "end", "nodes", "edges"])?;
    for (label, f) in labels.iter().zip(&footprints) {
        w.write_record([
            label.clone(),
            f.window.start.to_string(),
            f.window.end.to_string(),
            f.graph.node_count().to_string(),
            f.graph.edge_count().to_string(),
        ])?;
    }
    w.flush().map_err(|source| PipelineError::Io { path: path.clone(), source })?;
    Ok(path)
}

#[derive(Clone, Debug)]
pub struct MetricsReport {
    pub series: BTreeMap<GraphKind, Vec<MetricSeries>>,
    pub files: Vec<PathBuf>,
}

impl MetricsReport {
    /// True when no value at all was defined.
    pub fn all_undefined(&self) -> bool {
        self.series.values().flatten().all(|s| s.defined_count() == 0)
    }
}

/// Metric series per window for each requested graph, one CSV per graph.
pub fn run_metrics_report(config: &AnalysisConfig, kinds: &[GraphKind]) -> Result<MetricsReport, PipelineError> {
    let corpus = load(config)?;
    let mut report = MetricsReport { series: BTreeMap::new(), files: Vec::new() };
    for &kind in kinds {
        let tvg = temporal_graph(&corpus, kind, config.threshold);
        let series = series_for(&tvg, config.window, config.scope, kind.report_metrics(), config.seed)?;
        let path = config.output_dir.join(format!("metrics_{}.csv", kind.name()));
        write_series_csv(&series, create(&path)?)?;
        report.files.push(path);
        report.series.insert(kind, series);
    }
    Ok(report)
}

/// Citation trend of a paper (or of the most cited one when `paper` is `None`).
pub fn run_trend(
    config: &AnalysisConfig,
    paper: Option<&str>,
    bin: Cadence,
) -> Result<(MetricSeries, PathBuf), PipelineError> {
    let corpus = load(config)?;
    let id = match paper {
        Some(id) => id.to_owned(),
        None => {
            most_cited_paper(&corpus).map(|(id, _)| id).ok_or_else(|| PipelineError::Config("empty corpus".into()))?
        }
    };
    let series = citation_trend(&corpus, &id, bin)?;
    let path = config.output_dir.join(format!("trend_{}.csv", id.replace(['/', '\\'], "_")));
    write_series_csv(std::slice::from_ref(&series), create(&path)?)?;
    Ok((series, path))
}

/// Largest-component table of the growing most-cited graph, one row per
/// snapshot date from `snapshot_start` (default: lifetime start) every
/// `snapshot_window`.
pub fn run_snapshot_table(config: &AnalysisConfig) -> Result<(SnapshotTable, PathBuf), PipelineError> {
    let corpus = load(config)?;
    let tvg = temporal_graph(&corpus, GraphKind::Gi, config.threshold);
    let lifetime = tvg.lifetime();
    let anchor = config.snapshot_start.unwrap_or(lifetime.start);
    let mut cuts = vec![lifetime.start];
    cuts.extend(config.snapshot_window.dates_from(anchor, lifetime.end).into_iter().filter(|&d| d > lifetime.start));
    if cuts.len() < 2 {
        cuts.push(lifetime.end);
    }
    let snapshots = tvg.cumulative_footprints(&cuts, NodeScope::ActiveNodes)?;
    let table = community_snapshot_table(&snapshots)?;
    let path = config.output_dir.join("snapshot_table.csv");
    write_string(&path, &table.to_csv())?;
    Ok((table, path))
}

/// What `run_export` writes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportTarget {
    Graph(GraphKind),
    /// The full cited-collaboration graph, every co-authoring pair included.
    Interaction,
}

impl FromStr for ExportTarget {
    type Err = PipelineError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "gcc" => Ok(ExportTarget::Interaction),
            other => other.parse().map(ExportTarget::Graph),
        }
    }
}

pub fn run_export(
    config: &AnalysisConfig,
    target: ExportTarget,
    format: ExportFormat,
) -> Result<PathBuf, PipelineError> {
    let corpus = load(config)?;
    let (tvg, name) = match target {
        ExportTarget::Graph(kind) => (temporal_graph(&corpus, kind, config.threshold), kind.name()),
        ExportTarget::Interaction => (transforms::build_interaction(&corpus).tvg, "gcc"),
    };
    let path = config.output_dir.join(format!("{name}.{}", format.extension()));
    let file = create(&path)?;
    export_tvg(&tvg, format, std::io::BufWriter::new(file))
        .map_err(|source| PipelineError::Io { path: path.clone(), source })?;
    Ok(path)
}
