//! The `l`-closure: repeatedly join non-adjacent pairs whose degree sum is at least `l`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// One edge added by the closure, with the degree sum that licensed it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AddedEdge {
    pub u: usize,
    pub v: usize,
    pub degree_sum: usize,
}

/// Edges added by [`closure`], in the order they were added.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureTrace {
    pub l: usize,
    pub added: Vec<AddedEdge>,
}

impl ClosureTrace {
    /// Re-applies the trace to `g`, checking every recorded step.
    pub fn replay(&self, g: &Graph) -> Option<Graph> {
        let mut h = g.clone();
        for e in &self.added {
            if h.has_edge(e.u, e.v) || h.degree(e.u) + h.degree(e.v) != e.degree_sum || e.degree_sum < self.l {
                return None;
            }
            h.set(e.u, e.v, true);
        }
        Some(h)
    }
}

/// Computes `C_l(g)`.
///
/// Candidate pairs start in lexicographic order; after each addition only the
/// pairs touching its endpoints are re-queued, since no other degree changed.
pub fn closure(g: &Graph, l: usize) -> (Graph, ClosureTrace) {
    let n = g.n();
    let mut h = g.clone();
    let mut deg = g.degrees();
    let mut queued = vec![false; n * n];
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    for (u, v) in g.non_edges() {
        queued[u * n + v] = true;
        queue.push_back((u, v));
    }
    let mut added = Vec::new();
    while let Some((u, v)) = queue.pop_front() {
        queued[u * n + v] = false;
        if h.has_edge(u, v) || deg[u] + deg[v] < l {
            continue;
        }
        added.push(AddedEdge { u, v, degree_sum: deg[u] + deg[v] });
        h.set(u, v, true);
        deg[u] += 1;
        deg[v] += 1;
        for x in [u, v] {
            for y in 0..n {
                if y == x || h.has_edge(x, y) {
                    continue;
                }
                let (a, b) = if x < y { (x, y) } else { (y, x) };
                if !queued[a * n + b] {
                    queued[a * n + b] = true;
                    queue.push_back((a, b));
                }
            }
        }
    }
    (h, ClosureTrace { l, added })
}

/// No non-adjacent pair has degree sum at least `l`.
pub fn is_l_closed(g: &Graph, l: usize) -> bool {
    let deg = g.degrees();
    g.non_edges().iter().all(|&(u, v)| deg[u] + deg[v] < l)
}
