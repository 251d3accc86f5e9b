use crate::error::{Error, Result};
use crate::graph::{is_connected, UnipartiteGraph};

pub const EIGENVECTOR_TOLERANCE: f64 = 1e-12;
pub const EIGENVECTOR_MAX_ITERATIONS: usize = 10_000;

pub fn degree_all(g: &UnipartiteGraph) -> Vec<usize> {
    g.vertices().map(|v| g.degree(v)).collect()
}

/// `d_i / (N-1)`.
pub fn degree_centrality(g: &UnipartiteGraph) -> Result<Vec<f64>> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::DegenerateGraph(format!(
            "degree centrality needs at least 2 vertices, got {n}"
        )));
    }
    let scale = (n - 1) as f64;
    Ok(g.vertices().map(|v| g.degree(v) as f64 / scale).collect())
}

/// Dominant eigenvector of the adjacency matrix, L1-normalized.
///
/// Power iteration from the uniform vector on `A + I`, which shares its
/// eigenvectors with `A` but has no eigenvalue of equal modulus opposite the
/// dominant one, so bipartite components converge instead of oscillating.
/// Stops when no entry moves by more than [`EIGENVECTOR_TOLERANCE`].
pub fn eigenvector_centrality(g: &UnipartiteGraph) -> Result<Vec<f64>> {
    if g.edge_count() == 0 {
        return Err(Error::EdgelessGraph);
    }
    if !is_connected(g) {
        return Err(Error::Disconnected {
            operation: "eigenvector centrality",
        });
    }
    let adjacency = g.adjacency();
    let n = adjacency.len();
    let mut x = vec![1.0 / n as f64; n];
    let mut next = vec![0.0; n];
    for _ in 0..EIGENVECTOR_MAX_ITERATIONS {
        for (i, slot) in next.iter_mut().enumerate() {
            *slot = x[i] + adjacency[i].iter().map(|&j| x[j]).sum::<f64>();
        }
        let norm: f64 = next.iter().sum();
        let mut change: f64 = 0.0;
        for (slot, old) in next.iter_mut().zip(&x) {
            *slot /= norm;
            change = change.max((*slot - old).abs());
        }
        std::mem::swap(&mut x, &mut next);
        if change < EIGENVECTOR_TOLERANCE {
            break;
        }
    }
    Ok(x)
}

/// Fraction of neighbor pairs that are themselves adjacent; 0 below degree 2.
pub fn local_clustering(g: &UnipartiteGraph) -> Vec<f64> {
    g.vertices()
        .map(|v| {
            let nbrs = g.neighbors(v);
            let d = nbrs.len();
            if d < 2 {
                return 0.0;
            }
            let mut links = 0usize;
            for (i, &a) in nbrs.iter().enumerate() {
                // both lists sorted: count common members above `a`
                let adj_a = g.neighbors(a.into());
                links += count_sorted_intersection(&nbrs[i + 1..], adj_a);
            }
            links as f64 / (d * (d - 1) / 2) as f64
        })
        .collect()
}

fn count_sorted_intersection(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}
