//! Divisive clustering by repeated removal of the highest-betweenness edge.

use crate::communities::{modularity_numerator, require_edges, Partition};
use crate::error::Result;
use crate::graph::{component_labels, UnipartiteGraph};
use crate::parallel::{block_sum, BrandesScratch};

/// Relative slack under which two edge betweenness values count as tied.
const TIE_TOLERANCE: f64 = 1e-9;

/// Removes edges in order of decreasing edge betweenness (ties go to the
/// smallest `(source, target)` pair) and returns the component partition of
/// highest modularity on the original graph. Equal modularity keeps the
/// partition reached with fewer removals.
pub fn girvan_newman(g: &UnipartiteGraph) -> Result<Partition> {
    require_edges(g)?;
    let n = g.vertex_count();
    let edges = g.edges();
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (id, e) in edges.iter().enumerate() {
        incident[e.source.index()].push((e.target.index(), id));
        incident[e.target.index()].push((e.source.index(), id));
    }
    let mut alive = vec![true; edges.len()];

    let mut components = live_components(&incident, &alive);
    let mut best = (modularity_numerator(g, &components), components.clone());
    let mut scores = edge_betweenness(&incident, &alive, &(0..n).collect::<Vec<_>>());

    for _ in 0..edges.len() {
        let max = (0..edges.len())
            .filter(|&e| alive[e])
            .map(|e| scores[e])
            .fold(f64::NEG_INFINITY, f64::max);
        let floor = max - TIE_TOLERANCE * max.abs().max(1.0);
        let cut = (0..edges.len())
            .find(|&e| alive[e] && scores[e] >= floor)
            .expect("an edge is still alive");
        alive[cut] = false;

        // only the component that lost the edge changes its betweenness
        let host = components[edges[cut].source.index()];
        let affected: Vec<usize> = (0..n).filter(|&v| components[v] == host).collect();
        components = live_components(&incident, &alive);
        let fresh = edge_betweenness(&incident, &alive, &affected);
        for &v in &affected {
            for &(_, e) in &incident[v] {
                scores[e] = fresh[e];
            }
        }

        let numerator = modularity_numerator(g, &components);
        if numerator > best.0 {
            best = (numerator, components.clone());
        }
    }
    Partition::new(g, &best.1)
}

fn live_components(incident: &[Vec<(usize, usize)>], alive: &[bool]) -> Vec<usize> {
    let adjacency: Vec<Vec<usize>> = incident
        .iter()
        .map(|list| {
            list.iter()
                .filter(|&&(_, e)| alive[e])
                .map(|&(w, _)| w)
                .collect()
        })
        .collect();
    component_labels(&adjacency)
}

/// Edge betweenness over unordered pairs, accumulated from `sources` only.
fn edge_betweenness(
    incident: &[Vec<(usize, usize)>],
    alive: &[bool],
    sources: &[usize],
) -> Vec<f64> {
    let n = incident.len();
    let mut scores = block_sum(
        sources.len(),
        alive.len(),
        || BrandesScratch::new(n),
        |scratch, i, acc| {
            let s = sources[i];
            scratch.sweep(s, |v| {
                incident[v]
                    .iter()
                    .filter(|&&(_, e)| alive[e])
                    .map(|&(w, _)| w)
            });
            for &w in scratch.order.iter().rev() {
                let coefficient = (1.0 + scratch.delta[w]) / scratch.sigma[w];
                for &(v, e) in &incident[w] {
                    if alive[e] && scratch.dist[v] == scratch.dist[w] - 1 {
                        let share = scratch.sigma[v] * coefficient;
                        acc[e] += share;
                        scratch.delta[v] += share;
                    }
                }
            }
        },
    );
    for s in scores.iter_mut() {
        *s /= 2.0;
    }
    scores
}
