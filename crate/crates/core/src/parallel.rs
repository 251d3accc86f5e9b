//! Per-source sweeps with schedule-independent floating-point totals.
//!
//! Sources are grouped into fixed-size blocks. Each block accumulates
//! sequentially and block totals are added in block order, so the result is
//! bit-identical for any rayon pool size.

use rayon::prelude::*;

const BLOCK: usize = 16;

pub(crate) fn block_sum<S, I, F>(sources: usize, width: usize, init: I, visit: F) -> Vec<f64>
where
    I: Fn() -> S + Sync,
    F: Fn(&mut S, usize, &mut [f64]) + Sync,
{
    let starts: Vec<usize> = (0..sources).step_by(BLOCK).collect();
    let blocks: Vec<Vec<f64>> = starts
        .into_par_iter()
        .map(|start| {
            let mut scratch = init();
            let mut acc = vec![0.0; width];
            for s in start..(start + BLOCK).min(sources) {
                visit(&mut scratch, s, &mut acc);
            }
            acc
        })
        .collect();
    let mut total = vec![0.0; width];
    for block in blocks {
        for (t, x) in total.iter_mut().zip(block) {
            *t += x;
        }
    }
    total
}

/// Scratch buffers for one Brandes sweep on an unweighted graph.
pub(crate) struct BrandesScratch {
    pub dist: Vec<i64>,
    pub sigma: Vec<f64>,
    pub delta: Vec<f64>,
    pub order: Vec<usize>,
    pub queue: std::collections::VecDeque<usize>,
}

impl BrandesScratch {
    pub fn new(n: usize) -> Self {
        BrandesScratch {
            dist: vec![-1; n],
            sigma: vec![0.0; n],
            delta: vec![0.0; n],
            order: Vec::with_capacity(n),
            queue: std::collections::VecDeque::with_capacity(n),
        }
    }

    /// BFS from `s` over `neighbors`, filling `dist`, `sigma` and the visit order.
    pub fn sweep<'a, N, It>(&mut self, s: usize, neighbors: N)
    where
        N: Fn(usize) -> It,
        It: Iterator<Item = usize> + 'a,
    {
        for &v in &self.order {
            self.dist[v] = -1;
            self.sigma[v] = 0.0;
            self.delta[v] = 0.0;
        }
        self.order.clear();
        self.dist[s] = 0;
        self.sigma[s] = 1.0;
        self.queue.push_back(s);
        while let Some(v) = self.queue.pop_front() {
            self.order.push(v);
            for w in neighbors(v) {
                if self.dist[w] < 0 {
                    self.dist[w] = self.dist[v] + 1;
                    self.queue.push_back(w);
                }
                if self.dist[w] == self.dist[v] + 1 {
                    self.sigma[w] += self.sigma[v];
                }
            }
        }
    }
}
