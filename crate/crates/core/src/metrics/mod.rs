//! Vertex centralities and whole-network aggregates.
//!
//! Every measure here treats the graph as unweighted. Closeness and
//! betweenness come in two scalings: [`Normalization::Raw`] (inverse farness
//! and plain pair counts, the tabulated convention) and
//! [`Normalization::Normalized`].

mod centrality;
mod paths;
mod structure;

use std::collections::BTreeMap;

use serde::Serialize;

pub use centrality::{
    degree_all, degree_centrality, eigenvector_centrality, local_clustering,
    EIGENVECTOR_MAX_ITERATIONS, EIGENVECTOR_TOLERANCE,
};
pub use paths::{betweenness, closeness, geodesics};
pub use structure::{connectivity, degree_centralization, degree_distribution, density};

use crate::error::{Error, Result};
use crate::graph::{is_connected, UnipartiteGraph};

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub enum Normalization {
    #[default]
    Raw,
    Normalized,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VertexMetrics {
    pub degree: usize,
    pub degree_centrality: f64,
    pub closeness_raw: f64,
    pub closeness_normalized: f64,
    pub betweenness_raw: f64,
    pub betweenness_normalized: f64,
    pub eigenvector: f64,
    pub local_clustering: f64,
}

impl VertexMetrics {
    pub fn closeness(&self, variant: Normalization) -> f64 {
        match variant {
            Normalization::Raw => self.closeness_raw,
            Normalization::Normalized => self.closeness_normalized,
        }
    }

    pub fn betweenness(&self, variant: Normalization) -> f64 {
        match variant {
            Normalization::Raw => self.betweenness_raw,
            Normalization::Normalized => self.betweenness_normalized,
        }
    }
}

/// Whole-network summary. `density` is `None` below 2 vertices and
/// `degree_centralization` is `None` below 3.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NetworkAggregates {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub density: Option<f64>,
    pub diameter: u64,
    pub average_geodesic: f64,
    pub connectivity: usize,
    pub degree_centralization: Option<f64>,
    pub degree_distribution: BTreeMap<usize, f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VertexRow {
    pub label: String,
    #[serde(flatten)]
    pub metrics: VertexMetrics,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MetricsReport {
    pub aggregates: NetworkAggregates,
    pub vertices: Vec<VertexRow>,
}

/// Full report for a connected graph; rows follow vertex id order.
pub fn aggregate_report(g: &UnipartiteGraph) -> Result<MetricsReport> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if !is_connected(g) {
        return Err(Error::Disconnected {
            operation: "aggregate report",
        });
    }
    let n = g.vertex_count();
    let degrees = degree_all(g);
    let degree_c = if n >= 2 {
        degree_centrality(g)?
    } else {
        vec![0.0; n]
    };
    let close_raw = closeness(g, Normalization::Raw)?;
    let close_norm = closeness(g, Normalization::Normalized)?;
    let between_raw = betweenness(g, Normalization::Raw);
    let between_norm = betweenness(g, Normalization::Normalized);
    let eigen = if g.edge_count() > 0 {
        eigenvector_centrality(g)?
    } else {
        vec![1.0; n]
    };
    let clustering = local_clustering(g);
    let (diameter, average_geodesic) = geodesics(g)?;

    let vertices = g
        .vertices()
        .map(|v| {
            let i = v.index();
            VertexRow {
                label: g.label(v).to_string(),
                metrics: VertexMetrics {
                    degree: degrees[i],
                    degree_centrality: degree_c[i],
                    closeness_raw: close_raw[i],
                    closeness_normalized: close_norm[i],
                    betweenness_raw: between_raw[i],
                    betweenness_normalized: between_norm[i],
                    eigenvector: eigen[i],
                    local_clustering: clustering[i],
                },
            }
        })
        .collect();
    Ok(MetricsReport {
        aggregates: NetworkAggregates {
            vertex_count: n,
            edge_count: g.edge_count(),
            density: density(g).ok(),
            diameter,
            average_geodesic,
            connectivity: connectivity(g),
            degree_centralization: degree_centralization(g).ok(),
            degree_distribution: degree_distribution(g),
        },
        vertices,
    })
}
