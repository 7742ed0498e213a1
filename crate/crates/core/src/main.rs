use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tvgraph::pipeline::{self, AnalysisConfig, Cadence, ExportFormat, ExportTarget, GraphKind, PipelineError};

#[derive(Parser, Debug)]
#[command(name = "tvgraph", version, about = "Temporal co-authorship and citation network analysis")]
struct Cli {
    /// key=value configuration file; flags override its values
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Canonical record file
    #[arg(long, global = true)]
    records: Option<PathBuf>,
    /// Citation edge list (hep-th layout)
    #[arg(long, global = true)]
    edges: Option<PathBuf>,
    /// Paper dates file (hep-th layout)
    #[arg(long, global = true)]
    dates: Option<PathBuf>,
    /// Directory of abstract metadata files (hep-th layout)
    #[arg(long, global = true)]
    abstracts: Option<PathBuf>,
    /// Output directory
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Footprint node scope: active or all
    #[arg(long, global = true)]
    scope: Option<String>,
    /// Abort on malformed input lines
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Load the corpus and write the ingest report
    Ingest,
    /// Build a static graph and write it as an edge list
    Build {
        #[arg(long, value_parser = ["coauthorship", "citation", "interaction"])]
        kind: String,
        #[arg(long)]
        threshold: Option<u64>,
    },
    /// Per-window node and edge counts
    Footprints {
        #[arg(long)]
        window: Option<String>,
        #[arg(long, default_value = "gc")]
        graph: String,
        #[arg(long)]
        threshold: Option<u64>,
    },
    /// Per-window metric series as CSV
    Metrics {
        /// ga, gc or gi; all three when omitted
        #[arg(long)]
        graph: Option<String>,
        #[arg(long)]
        window: Option<String>,
        #[arg(long)]
        threshold: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Citations per bin for one paper (default: the most cited)
    Trend {
        #[arg(long)]
        paper: Option<String>,
        #[arg(long, default_value = "6m")]
        bin: String,
    },
    /// Largest-component indicators of the growing most-cited graph
    SnapshotTable {
        #[arg(long)]
        threshold: Option<u64>,
        /// First snapshot date, YYYY-MM-DD
        #[arg(long)]
        start: Option<String>,
        #[arg(long)]
        every: Option<String>,
    },
    /// Export a temporal graph for external visualisation
    Export {
        #[arg(long, value_parser = ["graphml", "dot", "edgelist"])]
        format: String,
        /// ga, gc, gi, or gcc for the full interaction graph
        #[arg(long, default_value = "gi")]
        graph: String,
        #[arg(long)]
        threshold: Option<u64>,
    },
}

fn config_from(cli: &Cli) -> Result<AnalysisConfig, PipelineError> {
    let mut config = AnalysisConfig::default();
    if let Some(path) = &cli.config {
        let text = std::fs::read_to_string(path).map_err(|source| PipelineError::Io { path: path.clone(), source })?;
        config.apply_text(&text)?;
    }
    let paths = [
        ("records", &cli.records),
        ("edges", &cli.edges),
        ("dates", &cli.dates),
        ("abstracts", &cli.abstracts),
        ("out", &cli.out),
    ];
    for (key, value) in paths {
        if let Some(p) = value {
            config.set(key, &p.to_string_lossy())?;
        }
    }
    if let Some(scope) = &cli.scope {
        config.set("scope", scope)?;
    }
    if cli.strict {
        config.set("mode", "strict")?;
    }
    let mut set_opt = |key: &str, value: Option<String>| -> Result<(), PipelineError> {
        match value {
            Some(v) => config.set(key, &v),
            None => Ok(()),
        }
    };
    match &cli.command {
        Command::Build { threshold, .. } | Command::Export { threshold, .. } => {
            set_opt("threshold", threshold.map(|t| t.to_string()))?
        }
        Command::Footprints { window, threshold, .. } => {
            set_opt("window", window.clone())?;
            set_opt("threshold", threshold.map(|t| t.to_string()))?;
        }
        Command::Metrics { window, threshold, seed, .. } => {
            set_opt("window", window.clone())?;
            set_opt("threshold", threshold.map(|t| t.to_string()))?;
            set_opt("seed", seed.map(|s| s.to_string()))?;
        }
        Command::SnapshotTable { threshold, start, every } => {
            set_opt("threshold", threshold.map(|t| t.to_string()))?;
            set_opt("snapshot_start", start.clone())?;
            set_opt("snapshot_window", every.clone())?;
        }
        Command::Ingest | Command::Trend { .. } => {}
    }
    Ok(config)
}

fn run(cli: &Cli) -> Result<ExitCode, PipelineError> {
    let config = config_from(cli)?;
    match &cli.command {
        Command::Ingest => {
            let (corpus, path) = pipeline::run_ingest(&config)?;
            print!("{}", corpus.report().to_flat_text());
            println!("wrote {}", path.display());
        }
        Command::Build { kind, .. } => {
            let (g, path) = pipeline::run_build(&config, kind.parse()?)?;
            println!("{kind}: {} nodes, {} edges -> {}", g.node_count(), g.edge_count(), path.display());
        }
        Command::Footprints { graph, .. } => {
            let path = pipeline::run_footprints(&config, graph.parse()?)?;
            println!("wrote {}", path.display());
        }
        Command::Metrics { graph, .. } => {
            let kinds: Vec<GraphKind> = match graph {
                Some(g) => vec![g.parse()?],
                None => GraphKind::ALL.to_vec(),
            };
            let report = pipeline::run_metrics_report(&config, &kinds)?;
            for f in &report.files {
                println!("wrote {}", f.display());
            }
            if report.all_undefined() {
                eprintln!("warning: every metric value is undefined");
                return Ok(ExitCode::from(2));
            }
        }
        Command::Trend { paper, bin } => {
            let bin: Cadence = bin.parse().map_err(PipelineError::Config)?;
            let (series, path) = pipeline::run_trend(&config, paper.as_deref(), bin)?;
            println!("{}: {} bins -> {}", series.name, series.len(), path.display());
        }
        Command::SnapshotTable { .. } => {
            let (table, path) = pipeline::run_snapshot_table(&config)?;
            print!("{}", table.to_csv());
            println!("wrote {}", path.display());
        }
        Command::Export { format, graph, .. } => {
            let target: ExportTarget = graph.parse()?;
            let format: ExportFormat = format.parse()?;
            let path = pipeline::run_export(&config, target, format)?;
            println!("wrote {}", path.display());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if let PipelineError::Ingest(_) = e {
                eprintln!("no corpus loaded; check the input paths and --strict setting");
            }
            ExitCode::from(1)
        }
    }
}
