//! Brute-force reference implementations for small graphs.
//!
//! Nothing here shares code with the main library. Graphs are `n` vertices
//! `0..n` plus an undirected edge list; every routine favours the most
//! literal reading of its definition over speed, so inputs should stay
//! around a dozen vertices.

use std::collections::{BTreeMap, BTreeSet};

pub type Edges = [(usize, usize)];

fn adjacency_matrix(n: usize, edges: &Edges) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; n]; n];
    for &(u, v) in edges {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Floyd-Warshall hop distances; `None` when unreachable.
pub fn all_pairs_distances(n: usize, edges: &Edges) -> Vec<Vec<Option<u64>>> {
    let a = adjacency_matrix(n, edges);
    let mut d = vec![vec![None; n]; n];
    for i in 0..n {
        d[i][i] = Some(0);
        for j in 0..n {
            if a[i][j] {
                d[i][j] = Some(1);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(x), Some(y)) = (d[i][k], d[k][j]) {
                    if d[i][j].map_or(true, |cur| x + y < cur) {
                        d[i][j] = Some(x + y);
                    }
                }
            }
        }
    }
    d
}

/// Every shortest path from `s` to `t`, as vertex sequences.
pub fn shortest_paths(n: usize, edges: &Edges, s: usize, t: usize) -> Vec<Vec<usize>> {
    let a = adjacency_matrix(n, edges);
    let d = all_pairs_distances(n, edges);
    let Some(len) = d[s][t] else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut path = vec![s];
    extend_paths(&a, t, len as usize, &mut path, &mut out);
    out
}

fn extend_paths(
    a: &[Vec<bool>],
    t: usize,
    len: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    if path.len() == len + 1 {
        if last == t {
            out.push(path.clone());
        }
        return;
    }
    for next in 0..a.len() {
        if a[last][next] && !path.contains(&next) {
            path.push(next);
            extend_paths(a, t, len, path, out);
            path.pop();
        }
    }
}

/// Unordered-pair betweenness from explicit path enumeration.
pub fn betweenness(n: usize, edges: &Edges) -> Vec<f64> {
    let mut b = vec![0.0; n];
    for s in 0..n {
        for t in s + 1..n {
            let paths = shortest_paths(n, edges, s, t);
            if paths.is_empty() {
                continue;
            }
            let total = paths.len() as f64;
            for (v, slot) in b.iter_mut().enumerate() {
                if v == s || v == t {
                    continue;
                }
                let through = paths.iter().filter(|p| p.contains(&v)).count();
                *slot += through as f64 / total;
            }
        }
    }
    b
}

/// `1 / Σ_t d(v, t)` on a connected graph; 0 for an isolated lone vertex.
pub fn closeness_raw(n: usize, edges: &Edges) -> Vec<f64> {
    let d = all_pairs_distances(n, edges);
    (0..n)
        .map(|v| {
            let sum: u64 = d[v].iter().map(|x| x.expect("connected")).sum();
            if sum == 0 {
                0.0
            } else {
                1.0 / sum as f64
            }
        })
        .collect()
}

/// `(diameter, Σ_{ordered pairs} d / n²)` on a connected graph.
pub fn diameter_and_average(n: usize, edges: &Edges) -> (u64, f64) {
    let d = all_pairs_distances(n, edges);
    let mut diameter = 0;
    let mut sum = 0;
    for row in &d {
        for x in row {
            let x = x.expect("connected");
            diameter = diameter.max(x);
            sum += x;
        }
    }
    (diameter, sum as f64 / (n * n) as f64)
}

pub fn density(n: usize, m: usize) -> f64 {
    2.0 * m as f64 / (n as f64 * (n as f64 - 1.0))
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u32> {
    (0u32..(1u32 << n)).filter(move |s| s.count_ones() as usize == k)
}

/// Number of `k`-vertex subsets whose every pair is adjacent.
pub fn count_cliques(n: usize, edges: &Edges, k: usize) -> u64 {
    assert!(n < 32);
    let a = adjacency_matrix(n, edges);
    subsets_of_size(n, k)
        .filter(|&s| {
            let members: Vec<usize> = (0..n).filter(|&i| s >> i & 1 == 1).collect();
            members
                .iter()
                .enumerate()
                .all(|(i, &u)| members[i + 1..].iter().all(|&v| a[u][v]))
        })
        .count() as u64
}

/// Actor projection by pairwise intersection of resource sets.
/// Keys are `(a, b)` with `a < b`; values count shared resources.
pub fn project_by_intersection(actors: usize, edges: &Edges) -> BTreeMap<(usize, usize), u64> {
    let mut holds: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); actors];
    for &(a, r) in edges {
        holds[a].insert(r);
    }
    let mut out = BTreeMap::new();
    for a in 0..actors {
        for b in a + 1..actors {
            let shared = holds[a].intersection(&holds[b]).count() as u64;
            if shared > 0 {
                out.insert((a, b), shared);
            }
        }
    }
    out
}

/// Component label per vertex (its smallest reachable vertex), from the
/// transitive closure of the adjacency relation.
pub fn components_by_closure(n: usize, edges: &Edges) -> Vec<usize> {
    let mut r = adjacency_matrix(n, edges);
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    (0..n).map(|i| (0..n).find(|&j| r[i][j]).unwrap()).collect()
}

/// Smallest vertex set whose removal disconnects the graph; `n − 1` for
/// complete graphs, 0 when already disconnected or `n <= 1`.
pub fn vertex_connectivity(n: usize, edges: &Edges) -> usize {
    if n <= 1 {
        return 0;
    }
    for k in 0..n - 1 {
        for removed in subsets_of_size(n, k) {
            let kept: Vec<usize> = (0..n).filter(|&i| removed >> i & 1 == 0).collect();
            let index: BTreeMap<usize, usize> =
                kept.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            let sub: Vec<(usize, usize)> = edges
                .iter()
                .filter(|(u, v)| index.contains_key(u) && index.contains_key(v))
                .map(|(u, v)| (index[u], index[v]))
                .collect();
            let labels = components_by_closure(kept.len(), &sub);
            if labels.iter().any(|&l| l != 0) {
                return k;
            }
        }
    }
    n - 1
}

/// `Σ_c [e_c / m − (d_c / 2m)²]`.
pub fn modularity(n: usize, edges: &Edges, assignment: &[usize]) -> f64 {
    assert_eq!(assignment.len(), n);
    let m = edges.len() as f64;
    let mut degree = vec![0usize; n];
    for &(u, v) in edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    let communities: BTreeSet<usize> = assignment.iter().copied().collect();
    communities
        .into_iter()
        .map(|c| {
            let inside = edges
                .iter()
                .filter(|&&(u, v)| assignment[u] == c && assignment[v] == c)
                .count() as f64;
            let d: usize = (0..n)
                .filter(|&v| assignment[v] == c)
                .map(|v| degree[v])
                .sum();
            inside / m - (d as f64 / (2.0 * m)).powi(2)
        })
        .sum()
}

/// Highest modularity over every partition (restricted growth strings).
pub fn best_modularity(n: usize, edges: &Edges) -> f64 {
    let mut best = f64::NEG_INFINITY;
    let mut assignment = vec![0usize; n];
    fn visit(i: usize, blocks: usize, a: &mut Vec<usize>, n: usize, edges: &Edges, best: &mut f64) {
        if i == n {
            *best = best.max(modularity(n, edges, a));
            return;
        }
        for c in 0..=blocks {
            a[i] = c;
            visit(i + 1, blocks.max(c + 1), a, n, edges, best);
        }
    }
    if n > 0 {
        visit(1, 1, &mut assignment, n, edges, &mut best);
    }
    best
}

/// SplitMix64, enough to draw reproducible test graphs.
#[derive(Clone, Debug)]
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    pub fn chance(&mut self, p: f64) -> bool {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64 <= p
    }
}

/// G(n, p) edge list with `u < v`, in lexicographic order.
pub fn random_graph(rng: &mut SplitMix64, n: usize, p: f64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(p) {
                edges.push((u, v));
            }
        }
    }
    edges
}
