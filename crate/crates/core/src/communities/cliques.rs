//! Clique counting and maximal clique enumeration.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{UnipartiteGraph, VertexId};

/// Counts of complete subgraphs by size, plus the maximal cliques.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueReport {
    /// Number of complete `k`-vertex subsets for `min_k <= k <= max_clique_size`.
    pub counts: BTreeMap<usize, u128>,
    pub max_clique_size: usize,
    pub max_clique_count: u128,
    /// Largest first, then lexicographic by member ids.
    pub maximal_cliques: Vec<Vec<VertexId>>,
}

impl CliqueReport {
    pub fn total(&self) -> u128 {
        self.counts.values().sum()
    }
}

/// Number of `k`-vertex subsets that induce complete subgraphs.
///
/// Each clique is grown from its smallest vertex through strictly increasing
/// neighbors, so it is reached exactly once.
pub fn count_k_cliques(g: &UnipartiteGraph, k: usize) -> Result<u128> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!(
            "clique size must be at least 3, got {k}"
        )));
    }
    let adjacency = g.adjacency();
    let mut total = 0u128;
    for v in 0..adjacency.len() {
        let later: Vec<usize> = adjacency[v].iter().copied().filter(|&w| w > v).collect();
        total += extend(adjacency, &later, 1, k);
    }
    Ok(total)
}

fn extend(adjacency: &[Vec<usize>], candidates: &[usize], depth: usize, k: usize) -> u128 {
    if depth == k {
        return 1;
    }
    if depth + candidates.len() < k {
        return 0;
    }
    if depth + 1 == k {
        return candidates.len() as u128;
    }
    let mut total = 0;
    for (i, &u) in candidates.iter().enumerate() {
        let next: Vec<usize> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|w| adjacency[u].binary_search(w).is_ok())
            .collect();
        total += extend(adjacency, &next, depth + 1, k);
    }
    total
}

/// Clique counts for every size (index = size, index 0 unused) via a
/// pivoted clique tree: each leaf holds `h` mandatory vertices and `p`
/// optional pivots and stands for `C(p, s)` cliques of size `h + s`.
pub(crate) fn clique_size_counts(g: &UnipartiteGraph) -> Vec<u128> {
    let adjacency = g.adjacency();
    let n = adjacency.len();
    let mut counts = vec![0u128; n + 1];
    for v in 0..n {
        let later: Vec<usize> = adjacency[v].iter().copied().filter(|&w| w > v).collect();
        pivot_tree(adjacency, later, 1, 0, &mut counts);
    }
    counts
}

fn pivot_tree(
    adjacency: &[Vec<usize>],
    candidates: Vec<usize>,
    held: usize,
    pivots: usize,
    counts: &mut [u128],
) {
    if candidates.is_empty() {
        let mut binom = 1u128;
        for s in 0..=pivots {
            counts[held + s] += binom;
            binom = binom * (pivots - s) as u128 / (s + 1) as u128;
        }
        return;
    }
    let adjacent = |x: usize, y: usize| adjacency[x].binary_search(&y).is_ok();
    let pivot = *candidates
        .iter()
        .max_by_key(|&&u| {
            let links = candidates.iter().filter(|&&w| adjacent(u, w)).count();
            (links, std::cmp::Reverse(u))
        })
        .expect("non-empty");
    let branches: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&w| !adjacent(pivot, w))
        .collect();
    let mut remaining = candidates;
    for u in branches {
        let child: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|&w| adjacent(u, w))
            .collect();
        if u == pivot {
            pivot_tree(adjacency, child, held, pivots + 1, counts);
        } else {
            pivot_tree(adjacency, child, held + 1, pivots, counts);
        }
        remaining.retain(|&w| w != u);
    }
}

/// Maximal cliques by Bron-Kerbosch with Tomita pivoting.
pub fn maximal_cliques(g: &UnipartiteGraph) -> Vec<Vec<VertexId>> {
    let adjacency = g.adjacency();
    let mut found = Vec::new();
    let mut current = Vec::new();
    bron_kerbosch(
        adjacency,
        &mut current,
        (0..adjacency.len()).collect(),
        Vec::new(),
        &mut found,
    );
    found.retain(|c| !c.is_empty());
    for clique in found.iter_mut() {
        clique.sort_unstable();
    }
    found.sort_by(|a: &Vec<usize>, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    found
        .into_iter()
        .map(|c| c.into_iter().map(VertexId).collect())
        .collect()
}

fn bron_kerbosch(
    adjacency: &[Vec<usize>],
    current: &mut Vec<usize>,
    mut candidates: Vec<usize>,
    mut excluded: Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            found.push(current.clone());
        }
        return;
    }
    let adjacent = |x: usize, y: usize| adjacency[x].binary_search(&y).is_ok();
    let pivot = candidates
        .iter()
        .chain(&excluded)
        .copied()
        .max_by_key(|&u| {
            (
                candidates.iter().filter(|&&w| adjacent(u, w)).count(),
                std::cmp::Reverse(u),
            )
        })
        .expect("non-empty");
    let branches: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&w| !adjacent(pivot, w))
        .collect();
    for v in branches {
        current.push(v);
        bron_kerbosch(
            adjacency,
            current,
            candidates
                .iter()
                .copied()
                .filter(|&w| adjacent(v, w))
                .collect(),
            excluded
                .iter()
                .copied()
                .filter(|&w| adjacent(v, w))
                .collect(),
            found,
        );
        current.pop();
        candidates.retain(|&w| w != v);
        excluded.push(v);
    }
}

/// Counts of all cliques of size `min_k` and up, plus the maximal cliques.
///
/// When the graph has no clique of size `min_k`, `counts` is empty and
/// `max_clique_size` still reports the largest clique (at most 2).
pub fn clique_report(g: &UnipartiteGraph, min_k: usize) -> Result<CliqueReport> {
    if min_k < 3 {
        return Err(Error::InvalidArgument(format!(
            "minimum clique size must be at least 3, got {min_k}"
        )));
    }
    let by_size = clique_size_counts(g);
    let max_clique_size = by_size.iter().rposition(|&c| c > 0).unwrap_or(0);
    let counts = (min_k..=max_clique_size).map(|k| (k, by_size[k])).collect();
    let maximal_cliques = maximal_cliques(g);
    if maximal_cliques.first().map_or(0, Vec::len) != max_clique_size {
        return Err(Error::Invariant(
            "maximal clique enumeration disagrees with clique counts".to_string(),
        ));
    }
    Ok(CliqueReport {
        counts,
        max_clique_size,
        max_clique_count: by_size[max_clique_size],
        maximal_cliques,
    })
}
