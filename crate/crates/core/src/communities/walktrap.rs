//! Walktrap: agglomerative clustering on random-walk distances.
//!
//! Every vertex carries a unit self-loop for the walk, so `d(k) = deg(k) + 1`.
//! Communities are compared through their `t`-step probability vectors
//! `P^t_C.`, with `r²(C1, C2) = Σ_k (P^t_C1k − P^t_C2k)² / d(k)`. Adjacent
//! communities are merged in order of the smallest increase
//! `Δσ = (1/n) · |C1||C2| / (|C1|+|C2|) · r²`, and the dendrogram is cut at
//! the level of highest modularity.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::communities::{modularity_numerator, require_edges, Partition};
use crate::error::{Error, Result};
use crate::graph::UnipartiteGraph;

pub const DEFAULT_WALK_LENGTH: usize = 4;

struct Community {
    size: usize,
    probabilities: Vec<f64>,
    degree: i128,
    neighbors: BTreeMap<usize, i128>,
}

pub fn walktrap(g: &UnipartiteGraph, walk_length: usize) -> Result<Partition> {
    require_edges(g)?;
    if walk_length == 0 {
        return Err(Error::InvalidArgument(
            "walk length must be at least 1".to_string(),
        ));
    }
    let adjacency = g.adjacency();
    let n = adjacency.len();
    let weight: Vec<f64> = adjacency.iter().map(|a| (a.len() + 1) as f64).collect();
    let inverse_weight: Vec<f64> = weight.iter().map(|w| 1.0 / w).collect();

    let rows: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|start| walk(adjacency, &inverse_weight, start, walk_length))
        .collect();

    let mut communities: Vec<Option<Community>> = rows
        .into_iter()
        .enumerate()
        .map(|(v, probabilities)| {
            Some(Community {
                size: 1,
                probabilities,
                degree: adjacency[v].len() as i128,
                neighbors: adjacency[v].iter().map(|&w| (w, 1)).collect(),
            })
        })
        .collect();

    let sigma = |a: &Community, b: &Community| -> f64 {
        let r2: f64 = a
            .probabilities
            .iter()
            .zip(&b.probabilities)
            .zip(&inverse_weight)
            .map(|((x, y), iw)| (x - y) * (x - y) * iw)
            .sum();
        let (sa, sb) = (a.size as f64, b.size as f64);
        sa * sb / (sa + sb) * r2 / n as f64
    };

    let mut pending: BTreeMap<(usize, usize), f64> = BTreeMap::new();
    for e in g.edges() {
        let (a, b) = (e.source.index(), e.target.index());
        let delta = sigma(
            communities[a].as_ref().expect("live"),
            communities[b].as_ref().expect("live"),
        );
        pending.insert((a, b), delta);
    }

    let four_m = 4 * g.edge_count() as i128;
    let mut numerator = modularity_numerator(g, &(0..n).collect::<Vec<_>>());
    let mut best = (numerator, 0usize);
    let mut merges: Vec<(usize, usize)> = Vec::new();

    while !pending.is_empty() {
        let mut choice: Option<((usize, usize), f64)> = None;
        for (&pair, &delta) in &pending {
            if choice.map_or(true, |(_, d)| delta < d) {
                choice = Some((pair, delta));
            }
        }
        let ((a, b), _) = choice.expect("non-empty");
        let absorbed = communities[b].take().expect("live");
        let kept = communities[a].as_mut().expect("live");

        let between = kept.neighbors.get(&b).copied().unwrap_or(0);
        numerator += four_m * between - 2 * kept.degree * absorbed.degree;

        let total = (kept.size + absorbed.size) as f64;
        let (wa, wb) = (kept.size as f64 / total, absorbed.size as f64 / total);
        for (p, q) in kept.probabilities.iter_mut().zip(&absorbed.probabilities) {
            *p = wa * *p + wb * q;
        }
        kept.size += absorbed.size;
        kept.degree += absorbed.degree;
        kept.neighbors.remove(&b);
        for (&c, &e) in &absorbed.neighbors {
            if c != a {
                *kept.neighbors.entry(c).or_insert(0) += e;
            }
        }
        let touched: BTreeSet<usize> = kept.neighbors.keys().copied().collect();
        for &c in absorbed.neighbors.keys() {
            if c == a {
                continue;
            }
            let other = communities[c].as_mut().expect("live");
            let e = other.neighbors.remove(&b).unwrap_or(0);
            *other.neighbors.entry(a).or_insert(0) += e;
        }
        pending.retain(|&(x, y), _| x != a && y != a && x != b && y != b);
        let kept = communities[a].as_ref().expect("live");
        for c in touched {
            let delta = sigma(kept, communities[c].as_ref().expect("live"));
            pending.insert((a.min(c), a.max(c)), delta);
        }

        merges.push((a, b));
        if numerator > best.0 {
            best = (numerator, merges.len());
        }
    }

    let mut owner: Vec<usize> = (0..n).collect();
    for &(a, b) in &merges[..best.1] {
        for slot in owner.iter_mut() {
            if *slot == b {
                *slot = a;
            }
        }
    }
    Partition::new(g, &owner)
}

/// `t`-step transition probabilities from `start`.
fn walk(adjacency: &[Vec<usize>], inverse_weight: &[f64], start: usize, steps: usize) -> Vec<f64> {
    let n = adjacency.len();
    let mut current = vec![0.0; n];
    current[start] = 1.0;
    let mut next = vec![0.0; n];
    for _ in 0..steps {
        next.iter_mut().for_each(|x| *x = 0.0);
        for (k, &mass) in current.iter().enumerate() {
            if mass == 0.0 {
                continue;
            }
            let share = mass * inverse_weight[k];
            next[k] += share;
            for &j in &adjacency[k] {
                next[j] += share;
            }
        }
        std::mem::swap(&mut current, &mut next);
    }
    current
}
