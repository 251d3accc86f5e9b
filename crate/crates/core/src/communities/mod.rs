//! Community detection and clique analysis.
//!
//! All four detectors ignore edge weights and never place vertices from
//! different connected components in the same community. Modularity is
//! compared through exact integer numerators (`Q · 4m²`), so every tie-break
//! below is exact.

mod cliques;
mod girvan_newman;
mod greedy;
mod walktrap;

use serde::Serialize;

pub use cliques::{clique_report, count_k_cliques, maximal_cliques, CliqueReport};
pub use girvan_newman::girvan_newman;
pub use greedy::{clauset_newman_moore, wakita_tsurumi};
pub use walktrap::{walktrap, DEFAULT_WALK_LENGTH};

use crate::error::{Error, Result};
use crate::graph::{UnipartiteGraph, VertexId};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    GirvanNewman,
    ClausetNewmanMoore,
    WakitaTsurumi,
    Walktrap { walk_length: usize },
}

impl Algorithm {
    pub fn run(self, g: &UnipartiteGraph) -> Result<Partition> {
        match self {
            Algorithm::GirvanNewman => girvan_newman(g),
            Algorithm::ClausetNewmanMoore => clauset_newman_moore(g),
            Algorithm::WakitaTsurumi => wakita_tsurumi(g),
            Algorithm::Walktrap { walk_length } => walktrap(g, walk_length),
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Algorithm::GirvanNewman => "gn",
            Algorithm::ClausetNewmanMoore => "cnm",
            Algorithm::WakitaTsurumi => "wt",
            Algorithm::Walktrap { .. } => "walktrap",
        }
    }
}

/// Disjoint community assignment with its modularity.
///
/// Community indices are dense and ordered by smallest member id.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Partition {
    assignments: Vec<usize>,
    modularity: f64,
}

impl Partition {
    /// Canonicalizes arbitrary community labels and scores them on `g`.
    pub fn new(g: &UnipartiteGraph, raw: &[usize]) -> Result<Self> {
        if raw.len() != g.vertex_count() {
            return Err(Error::InvalidArgument(format!(
                "assignment covers {} vertices, graph has {}",
                raw.len(),
                g.vertex_count()
            )));
        }
        let assignments = canonical(raw);
        let modularity = modularity_of(g, &assignments)?;
        Ok(Partition {
            assignments,
            modularity,
        })
    }

    pub fn assignments(&self) -> &[usize] {
        &self.assignments
    }

    pub fn community_of(&self, v: VertexId) -> usize {
        self.assignments[v.index()]
    }

    pub fn modularity(&self) -> f64 {
        self.modularity
    }

    pub fn community_count(&self) -> usize {
        self.assignments.iter().max().map_or(0, |&c| c + 1)
    }

    /// Members of each community, in increasing id order.
    pub fn communities(&self) -> Vec<Vec<VertexId>> {
        let mut out = vec![Vec::new(); self.community_count()];
        for (v, &c) in self.assignments.iter().enumerate() {
            out[c].push(VertexId(v));
        }
        out
    }
}

fn canonical(raw: &[usize]) -> Vec<usize> {
    let mut remap = std::collections::HashMap::new();
    raw.iter()
        .map(|&c| {
            let next = remap.len();
            *remap.entry(c).or_insert(next)
        })
        .collect()
}

/// `Q · 4m²` for a community assignment: `Σ_c 4m·e_c − d_c²`.
pub(crate) fn modularity_numerator(g: &UnipartiteGraph, assignments: &[usize]) -> i128 {
    let count = assignments.iter().max().map_or(0, |&c| c + 1);
    let mut internal = vec![0i128; count];
    let mut degree = vec![0i128; count];
    for e in g.edges() {
        let (a, b) = (assignments[e.source.index()], assignments[e.target.index()]);
        if a == b {
            internal[a] += 1;
        }
    }
    for v in g.vertices() {
        degree[assignments[v.index()]] += g.degree(v) as i128;
    }
    let four_m = 4 * g.edge_count() as i128;
    internal
        .iter()
        .zip(&degree)
        .map(|(&e, &d)| four_m * e - d * d)
        .sum()
}

pub(crate) fn numerator_to_q(g: &UnipartiteGraph, numerator: i128) -> f64 {
    let m = g.edge_count() as f64;
    numerator as f64 / (4.0 * m * m)
}

fn modularity_of(g: &UnipartiteGraph, assignments: &[usize]) -> Result<f64> {
    if g.edge_count() == 0 {
        return Err(Error::EdgelessGraph);
    }
    Ok(numerator_to_q(g, modularity_numerator(g, assignments)))
}

/// Newman modularity `Σ_c [e_c/m − (d_c/2m)²]` of `p` on `g`.
pub fn modularity(g: &UnipartiteGraph, p: &Partition) -> Result<f64> {
    if p.assignments.len() != g.vertex_count() {
        return Err(Error::InvalidArgument(
            "partition does not match graph".to_string(),
        ));
    }
    modularity_of(g, &p.assignments)
}

pub(crate) fn require_edges(g: &UnipartiteGraph) -> Result<()> {
    if g.edge_count() == 0 {
        Err(Error::EdgelessGraph)
    } else {
        Ok(())
    }
}
