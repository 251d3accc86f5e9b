#![allow(dead_code)]

use hidden_ties::{
    build_bipartite, largest_component, project, BipartiteGraph, ProjectionSide, UnipartiteGraph,
    VertexId,
};

pub const ACTORS: [&str; 12] = [
    "FactoryThree",
    "ANB",
    "Shijiazhuang",
    "Remy",
    "CBF",
    "Acdhon",
    "GPO",
    "Brainy",
    "Tman",
    "China",
    "Guilin",
    "Medipharco",
];

pub fn bp12_pairs() -> Vec<(&'static str, &'static str)> {
    let mut pairs: Vec<_> = ACTORS[..6].iter().map(|&a| (a, "P1")).collect();
    pairs.extend([
        ("CBF", "P2"),
        ("GPO", "P2"),
        ("Brainy", "P2"),
        ("Brainy", "P3"),
        ("Tman", "P3"),
        ("China", "P4"),
        ("Guilin", "P4"),
        ("Medipharco", "P4"),
    ]);
    pairs
}

pub fn bp12() -> BipartiteGraph {
    build_bipartite(bp12_pairs()).unwrap()
}

pub fn r12() -> UnipartiteGraph {
    project(&bp12(), ProjectionSide::Actors).unwrap()
}

pub fn r9() -> UnipartiteGraph {
    largest_component(&r12()).unwrap()
}

pub fn id(g: &UnipartiteGraph, label: &str) -> VertexId {
    g.vertex(label)
        .unwrap_or_else(|| panic!("no vertex {label}"))
}

/// Community member label sets, each sorted, in community order.
pub fn label_sets(g: &UnipartiteGraph, communities: &[Vec<VertexId>]) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = communities
        .iter()
        .map(|c| {
            let mut labels: Vec<String> = c.iter().map(|&v| g.label(v).to_string()).collect();
            labels.sort();
            labels
        })
        .collect();
    out.sort();
    out
}

pub fn sorted(labels: &[&str]) -> Vec<String> {
    let mut v: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    v.sort();
    v
}

/// Plain `(n, edges)` view for the brute-force oracles.
pub fn plain(g: &UnipartiteGraph) -> (usize, Vec<(usize, usize)>) {
    (
        g.vertex_count(),
        g.edges()
            .iter()
            .map(|e| (e.source.index(), e.target.index()))
            .collect(),
    )
}

pub fn from_plain(n: usize, edges: &[(usize, usize)]) -> UnipartiteGraph {
    UnipartiteGraph::new(
        (0..n).map(|i| format!("v{i}")).collect(),
        edges.iter().map(|&(u, v)| (VertexId(u), VertexId(v), 1)),
    )
    .unwrap()
}
