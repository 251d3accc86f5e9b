//! Record ingestion and serialization of graphs and reports.

mod graph_format;
mod ingest;
mod report;

pub use graph_format::{read_graph, write_graph, Graph, GraphFormat, GraphRef};
pub use ingest::{
    batch_to_bipartite, parse_csv, IngestConfig, Record, RecordBatch, DEFAULT_FILTER_VALUES,
};
pub use report::{
    round3, write_report, CliqueSummary, CommunityListing, ComponentMetrics, PartitionReport,
    Report, ReportFormat, ReportOptions,
};
