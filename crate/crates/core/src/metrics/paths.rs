//! Shortest-path based measures: betweenness, closeness and geodesics.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{is_connected, UnipartiteGraph};
use crate::metrics::Normalization;
use crate::parallel::{block_sum, BrandesScratch};

/// Per-source BFS summary: total distance to reachable vertices, eccentricity,
/// number of vertices reached (including the source).
#[derive(Copy, Clone, Debug)]
pub(crate) struct Reach {
    pub distance_sum: u64,
    pub eccentricity: u64,
    pub reached: usize,
}

pub(crate) fn bfs_reach(g: &UnipartiteGraph) -> Vec<Reach> {
    let adjacency = g.adjacency();
    let n = adjacency.len();
    (0..n)
        .into_par_iter()
        .map_init(
            || (vec![u64::MAX; n], VecDeque::new(), Vec::new()),
            |(dist, queue, seen), s| {
                for &v in seen.iter() {
                    dist[v] = u64::MAX;
                }
                seen.clear();
                dist[s] = 0;
                seen.push(s);
                queue.push_back(s);
                let mut reach = Reach {
                    distance_sum: 0,
                    eccentricity: 0,
                    reached: 1,
                };
                while let Some(v) = queue.pop_front() {
                    for &w in &adjacency[v] {
                        if dist[w] == u64::MAX {
                            dist[w] = dist[v] + 1;
                            reach.distance_sum += dist[w];
                            reach.eccentricity = reach.eccentricity.max(dist[w]);
                            reach.reached += 1;
                            seen.push(w);
                            queue.push_back(w);
                        }
                    }
                }
                reach
            },
        )
        .collect()
}

/// Betweenness over unordered pairs `{j, k}` not containing the vertex.
///
/// `Raw` is the summed fraction of shortest paths through each vertex;
/// `Normalized` divides by `(N-1)(N-2)` and is 0 when `N < 3`.
pub fn betweenness(g: &UnipartiteGraph, variant: Normalization) -> Vec<f64> {
    let adjacency = g.adjacency();
    let n = adjacency.len();
    let mut scores = block_sum(
        n,
        n,
        || BrandesScratch::new(n),
        |scratch, s, acc| {
            scratch.sweep(s, |v| adjacency[v].iter().copied());
            for &w in scratch.order.iter().rev() {
                let coefficient = (1.0 + scratch.delta[w]) / scratch.sigma[w];
                for &v in &adjacency[w] {
                    if scratch.dist[v] == scratch.dist[w] - 1 {
                        scratch.delta[v] += scratch.sigma[v] * coefficient;
                    }
                }
                if w != s {
                    acc[w] += scratch.delta[w];
                }
            }
        },
    );
    // every unordered pair was visited from both ends
    for b in scores.iter_mut() {
        *b /= 2.0;
    }
    if variant == Normalization::Normalized {
        let scale = if n < 3 {
            0.0
        } else {
            ((n - 1) * (n - 2)) as f64
        };
        for b in scores.iter_mut() {
            *b = if scale > 0.0 { *b / scale } else { 0.0 };
        }
    }
    scores
}

/// Closeness on a connected graph: `Raw` is `1/Σd`, `Normalized` is `(N-1)/Σd`.
/// A lone vertex scores 0.
pub fn closeness(g: &UnipartiteGraph, variant: Normalization) -> Result<Vec<f64>> {
    if !is_connected(g) {
        return Err(Error::Disconnected {
            operation: "closeness",
        });
    }
    let n = g.vertex_count();
    let numerator = match variant {
        Normalization::Raw => 1.0,
        Normalization::Normalized => n.saturating_sub(1) as f64,
    };
    Ok(bfs_reach(g)
        .into_iter()
        .map(|r| {
            if r.distance_sum == 0 {
                0.0
            } else {
                numerator / r.distance_sum as f64
            }
        })
        .collect())
}

/// Diameter and average geodesic distance of a connected graph.
///
/// The average divides the sum over all ordered pairs, self-pairs included,
/// by `N²`.
pub fn geodesics(g: &UnipartiteGraph) -> Result<(u64, f64)> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if !is_connected(g) {
        return Err(Error::Disconnected {
            operation: "geodesics",
        });
    }
    let n = g.vertex_count() as f64;
    let reach = bfs_reach(g);
    let diameter = reach.iter().map(|r| r.eccentricity).max().unwrap_or(0);
    let total: u64 = reach.iter().map(|r| r.distance_sum).sum();
    Ok((diameter, total as f64 / (n * n)))
}
