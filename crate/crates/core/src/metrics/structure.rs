//! Whole-network measures.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{is_connected, UnipartiteGraph};

/// `2|E| / (N(N-1))`.
pub fn density(g: &UnipartiteGraph) -> Result<f64> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::DegenerateGraph(format!(
            "density needs at least 2 vertices, got {n}"
        )));
    }
    Ok(2.0 * g.edge_count() as f64 / (n as f64 * (n - 1) as f64))
}

/// Fraction of vertices having each degree.
pub fn degree_distribution(g: &UnipartiteGraph) -> BTreeMap<usize, f64> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for v in g.vertices() {
        *counts.entry(g.degree(v)).or_insert(0) += 1;
    }
    let n = g.vertex_count() as f64;
    counts.into_iter().map(|(d, c)| (d, c as f64 / n)).collect()
}

/// Freeman degree centralization `Σ(d_max - d_i) / ((N-1)(N-2))`.
pub fn degree_centralization(g: &UnipartiteGraph) -> Result<f64> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(Error::DegenerateGraph(format!(
            "degree centralization needs at least 3 vertices, got {n}"
        )));
    }
    let degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let max = *degrees.iter().max().expect("non-empty");
    let spread: usize = degrees.iter().map(|&d| max - d).sum();
    Ok(spread as f64 / ((n - 1) * (n - 2)) as f64)
}

/// Minimum number of vertices whose removal disconnects the graph.
///
/// Complete graphs report `N-1`; disconnected graphs and singletons report 0.
pub fn connectivity(g: &UnipartiteGraph) -> usize {
    let n = g.vertex_count();
    if n <= 1 || !is_connected(g) {
        return 0;
    }
    if g.edge_count() == n * (n - 1) / 2 {
        return n - 1;
    }
    // Esfahanian-Hakimi: some minimum cut misses a minimum-degree vertex v,
    // or separates two of its neighbors.
    let adjacency = g.adjacency();
    let v = (0..n)
        .min_by_key(|&i| (adjacency[i].len(), i))
        .expect("n > 1");
    let mut best = adjacency[v].len();
    let mut network = SplitNetwork::new(adjacency);
    for w in 0..n {
        if w != v && adjacency[v].binary_search(&w).is_err() {
            best = best.min(network.local_connectivity(v, w, best));
        }
    }
    let nbrs = &adjacency[v];
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if adjacency[x].binary_search(&y).is_err() {
                best = best.min(network.local_connectivity(x, y, best));
            }
        }
    }
    best
}

/// Vertex-split flow network: vertex `v` becomes `2v -> 2v+1` with capacity 1.
struct SplitNetwork {
    head: Vec<usize>,
    capacity: Vec<i32>,
    original: Vec<i32>,
    out: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn new(adjacency: &[Vec<usize>]) -> Self {
        let n = adjacency.len();
        let mut net = SplitNetwork {
            head: Vec::new(),
            capacity: Vec::new(),
            original: Vec::new(),
            out: vec![Vec::new(); 2 * n],
        };
        for (v, neighbors) in adjacency.iter().enumerate() {
            net.arc(2 * v, 2 * v + 1, 1);
            for &w in neighbors {
                net.arc(2 * v + 1, 2 * w, 1);
            }
        }
        net.original = net.capacity.clone();
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: i32) {
        self.out[from].push(self.head.len());
        self.head.push(to);
        self.capacity.push(cap);
        self.out[to].push(self.head.len());
        self.head.push(from);
        self.capacity.push(0);
    }

    /// Number of internally disjoint `s`-`t` paths, capped at `limit`.
    fn local_connectivity(&mut self, s: usize, t: usize, limit: usize) -> usize {
        self.capacity.copy_from_slice(&self.original);
        let (source, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        let mut parent = vec![usize::MAX; self.out.len()];
        let mut queue = VecDeque::new();
        while flow < limit {
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            queue.clear();
            queue.push_back(source);
            let mut found = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for &a in &self.out[u] {
                    let x = self.head[a];
                    if self.capacity[a] > 0 && x != source && parent[x] == usize::MAX {
                        parent[x] = a;
                        if x == sink {
                            found = true;
                            break 'bfs;
                        }
                        queue.push_back(x);
                    }
                }
            }
            if !found {
                break;
            }
            let mut x = sink;
            while x != source {
                let a = parent[x];
                self.capacity[a] -= 1;
                self.capacity[a ^ 1] += 1;
                x = self.head[a ^ 1];
            }
            flow += 1;
        }
        flow
    }
}
