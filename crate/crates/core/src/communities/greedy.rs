//! Greedy agglomerative modularity maximization.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::communities::{require_edges, Partition};
use crate::error::Result;
use crate::graph::UnipartiteGraph;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
enum Score {
    /// Plain modularity gain.
    Gain,
    /// Gain scaled by the consolidation ratio `min(|a|,|b|) / max(|a|,|b|)`.
    Balanced,
}

/// Merge priority as an exact fraction `num / den`, `den > 0`.
#[derive(Copy, Clone, Debug)]
struct Priority {
    num: i128,
    den: i128,
}

impl Priority {
    fn cmp(&self, other: &Priority) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

/// Clauset-Newman-Moore: starting from singletons, merge the adjacent pair
/// with the largest modularity gain while a positive gain exists.
pub fn clauset_newman_moore(g: &UnipartiteGraph) -> Result<Partition> {
    agglomerate(g, Score::Gain)
}

/// Wakita-Tsurumi: as [`clauset_newman_moore`], but the gain of each candidate
/// merge is weighted by the size ratio of the two communities.
pub fn wakita_tsurumi(g: &UnipartiteGraph) -> Result<Partition> {
    agglomerate(g, Score::Balanced)
}

fn agglomerate(g: &UnipartiteGraph, score: Score) -> Result<Partition> {
    require_edges(g)?;
    let n = g.vertex_count();
    let two_m = 2 * g.edge_count() as i128;
    let mut size = vec![1i128; n];
    let mut degree: Vec<i128> = g.vertices().map(|v| g.degree(v) as i128).collect();
    let mut links: Vec<BTreeMap<usize, i128>> = vec![BTreeMap::new(); n];
    for e in g.edges() {
        links[e.source.index()].insert(e.target.index(), 1);
        links[e.target.index()].insert(e.source.index(), 1);
    }
    let mut owner: Vec<usize> = (0..n).collect();
    let mut members: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();

    loop {
        let mut best: Option<(Priority, usize, usize)> = None;
        for a in 0..n {
            for (&b, &between) in links[a].range(a + 1..) {
                // ΔQ · 2m² = 2m·e_ab − d_a·d_b
                let gain = two_m * between - degree[a] * degree[b];
                if gain <= 0 {
                    continue;
                }
                let priority = match score {
                    Score::Gain => Priority { num: gain, den: 1 },
                    Score::Balanced => Priority {
                        num: gain * size[a].min(size[b]),
                        den: size[a].max(size[b]),
                    },
                };
                if best
                    .as_ref()
                    .map_or(true, |(p, _, _)| priority.cmp(p) == Ordering::Greater)
                {
                    best = Some((priority, a, b));
                }
            }
        }
        let Some((_, a, b)) = best else { break };

        size[a] += size[b];
        degree[a] += degree[b];
        let absorbed = std::mem::take(&mut links[b]);
        for (c, e) in absorbed {
            links[c].remove(&b);
            if c == a {
                continue;
            }
            *links[a].entry(c).or_insert(0) += e;
            *links[c].entry(a).or_insert(0) += e;
        }
        let moved = std::mem::take(&mut members[b]);
        for &v in &moved {
            owner[v] = a;
        }
        members[a].extend(moved);
    }
    Partition::new(g, &owner)
}
