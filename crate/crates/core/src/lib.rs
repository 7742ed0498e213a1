pub mod graph;
pub mod ingest;
pub mod metrics;
pub mod pipeline;
pub mod time;
pub mod transforms;
pub mod tvg;
