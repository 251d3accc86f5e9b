//! Metric, partition and clique reports as JSON or CSV.
//!
//! JSON carries every field at full precision. The metrics CSV is the
//! compact table view: `label,degree,betweenness,closeness,eigenvector`,
//! reals rounded to 3 decimals with trailing zeros trimmed.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::communities::{CliqueReport, Partition};
use crate::graph::UnipartiteGraph;
use crate::metrics::{MetricsReport, Normalization};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

/// Column choices for the metrics CSV; JSON ignores them.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct ReportOptions {
    pub closeness: Normalization,
    pub betweenness: Normalization,
    /// Appends `degree_centrality,local_clustering,component`.
    pub extended: bool,
}

/// Metrics of one connected component; `component` indexes the
/// size-ordered decomposition of the host graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComponentMetrics {
    pub component: usize,
    #[serde(flatten)]
    pub report: MetricsReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommunityListing {
    pub index: usize,
    pub size: usize,
    /// Sorted by label.
    pub members: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PartitionReport {
    pub algorithm: String,
    pub modularity: f64,
    pub community_count: usize,
    pub min_size: usize,
    /// Communities with at least `min_size` members.
    pub communities: Vec<CommunityListing>,
    /// Every vertex, listed or not.
    pub assignments: BTreeMap<String, usize>,
}

impl PartitionReport {
    pub fn new(
        g: &UnipartiteGraph,
        partition: &Partition,
        algorithm: &str,
        min_size: usize,
    ) -> Self {
        let communities = partition
            .communities()
            .into_iter()
            .enumerate()
            .filter(|(_, members)| members.len() >= min_size)
            .map(|(index, members)| {
                let mut members: Vec<String> =
                    members.iter().map(|&v| g.label(v).to_string()).collect();
                members.sort();
                CommunityListing {
                    index,
                    size: members.len(),
                    members,
                }
            })
            .collect();
        PartitionReport {
            algorithm: algorithm.to_string(),
            modularity: partition.modularity(),
            community_count: partition.community_count(),
            min_size,
            communities,
            assignments: g
                .vertices()
                .map(|v| (g.label(v).to_string(), partition.community_of(v)))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueSummary {
    pub min_k: usize,
    pub counts: BTreeMap<usize, u128>,
    pub total: u128,
    pub max_clique_size: usize,
    pub max_clique_count: u128,
    /// Member labels in id order; largest cliques first.
    pub maximal_cliques: Vec<Vec<String>>,
}

impl CliqueSummary {
    pub fn new(g: &UnipartiteGraph, report: &CliqueReport, min_k: usize) -> Self {
        CliqueSummary {
            min_k,
            counts: report.counts.clone(),
            total: report.total(),
            max_clique_size: report.max_clique_size,
            max_clique_count: report.max_clique_count,
            maximal_cliques: report
                .maximal_cliques
                .iter()
                .map(|c| c.iter().map(|&v| g.label(v).to_string()).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Report {
    Metrics(Vec<ComponentMetrics>),
    Partition(PartitionReport),
    Cliques(CliqueSummary),
}

pub fn write_report(report: &Report, format: ReportFormat, options: &ReportOptions) -> Vec<u8> {
    let text = match format {
        ReportFormat::Json => {
            let mut s = match report {
                Report::Metrics(m) => serde_json::to_string_pretty(m),
                Report::Partition(p) => serde_json::to_string_pretty(p),
                Report::Cliques(c) => serde_json::to_string_pretty(c),
            }
            .expect("reports serialize");
            s.push('\n');
            s
        }
        ReportFormat::Csv => match report {
            Report::Metrics(m) => metrics_csv(m, options),
            Report::Partition(p) => partition_csv(p),
            Report::Cliques(c) => cliques_csv(c),
        },
    };
    text.into_bytes()
}

/// Fixed 3-decimal rendering with trailing zeros and a bare point removed.
pub fn round3(x: f64) -> String {
    let s = format!("{x:.3}");
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        &s
    };
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn metrics_csv(components: &[ComponentMetrics], options: &ReportOptions) -> String {
    let mut out = String::from("label,degree,betweenness,closeness,eigenvector");
    if options.extended {
        out.push_str(",degree_centrality,local_clustering,component");
    }
    out.push('\n');
    for c in components {
        for row in &c.report.vertices {
            let m = &row.metrics;
            let _ = write!(
                out,
                "{},{},{},{},{}",
                csv_field(&row.label),
                m.degree,
                round3(m.betweenness(options.betweenness)),
                round3(m.closeness(options.closeness)),
                round3(m.eigenvector)
            );
            if options.extended {
                let _ = write!(
                    out,
                    ",{},{},{}",
                    round3(m.degree_centrality),
                    round3(m.local_clustering),
                    c.component
                );
            }
            out.push('\n');
        }
    }
    out
}

fn partition_csv(p: &PartitionReport) -> String {
    let mut out = String::from("label,community\n");
    for (label, c) in &p.assignments {
        let _ = writeln!(out, "{},{c}", csv_field(label));
    }
    out
}

fn cliques_csv(c: &CliqueSummary) -> String {
    let mut out = String::from("k,count\n");
    for (k, n) in &c.counts {
        let _ = writeln!(out, "{k},{n}");
    }
    out
}
