//! Connected components and vertex connectivity.

use std::collections::VecDeque;

use super::Graph;

/// Largest order for which cut enumeration is used by [`vertex_connectivity`].
pub const EXHAUSTIVE_CUT_LIMIT: usize = 12;

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    components_avoiding(g, &vec![false; g.n()])
}

fn components_avoiding(g: &Graph, removed: &[bool]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = removed.to_vec();
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    stack.push(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() > 0 && components(g).len() == 1
}

/// More than `t` vertices and no vertex cut of size below `t`.
pub fn is_t_connected(g: &Graph, t: usize) -> bool {
    g.n() > t && is_connected(g) && vertex_connectivity(g) >= t
}

/// Vertex connectivity `κ(g)`; `κ(K_n) = n − 1`, disconnected graphs give 0.
pub fn vertex_connectivity(g: &Graph) -> usize {
    if g.n() <= EXHAUSTIVE_CUT_LIMIT {
        vertex_connectivity_exhaustive(g)
    } else {
        vertex_connectivity_flow(g)
    }
}

/// Smallest vertex cut by enumerating subsets in order of size.
pub fn vertex_connectivity_exhaustive(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    if !is_connected(g) {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    assert!(n < 64, "exhaustive cut enumeration is limited to small graphs");
    for size in 1..n - 1 {
        let mut removed = vec![false; n];
        let mut found = false;
        for_each_subset_of_size(n, size, &mut |mask| {
            for (v, r) in removed.iter_mut().enumerate() {
                *r = mask >> v & 1 == 1;
            }
            if components_avoiding(g, &removed).len() > 1 {
                found = true;
            }
            found
        });
        if found {
            return size;
        }
    }
    n - 1
}

fn for_each_subset_of_size(n: usize, size: usize, f: &mut dyn FnMut(u64) -> bool) {
    // Gosper's hack over n-bit words
    let mut mask: u64 = (1 << size) - 1;
    let limit: u64 = 1 << n;
    while mask < limit {
        if f(mask) {
            return;
        }
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}

/// `κ(g)` via Menger: minimum over non-adjacent pairs of the maximum number
/// of internally vertex-disjoint paths, each computed as a unit-capacity
/// max-flow on the vertex-split digraph.
pub fn vertex_connectivity_flow(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 || !is_connected(g) {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    let mut best = g.min_degree();
    let mut net = SplitNetwork::new(g);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                best = best.min(net.local_connectivity(u, v, best));
                if best == 0 {
                    return 0;
                }
            }
        }
    }
    best
}

/// Vertex-split unit-capacity network: vertex `v` becomes `v_in = 2v`,
/// `v_out = 2v + 1` with an arc of capacity one between them.
struct SplitNetwork {
    head: Vec<usize>,
    cap: Vec<u8>,
    adj: Vec<Vec<usize>>,
    base: Vec<u8>,
}

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut s = SplitNetwork { head: Vec::new(), cap: Vec::new(), adj: vec![Vec::new(); 2 * n], base: Vec::new() };
        for v in 0..n {
            s.arc(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in g.edges() {
            s.arc(2 * u + 1, 2 * v, 1);
            s.arc(2 * v + 1, 2 * u, 1);
        }
        s.base = s.cap.clone();
        s
    }

    fn arc(&mut self, from: usize, to: usize, c: u8) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(c);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// Number of internally disjoint `s`–`t` paths, stopping once `limit` is reached.
    fn local_connectivity(&mut self, s: usize, t: usize, limit: usize) -> usize {
        self.cap.copy_from_slice(&self.base);
        let (src, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        let mut pred = vec![usize::MAX; self.adj.len()];
        while flow < limit {
            pred.iter_mut().for_each(|p| *p = usize::MAX);
            let mut queue = VecDeque::from([src]);
            let mut reached = false;
            while let Some(x) = queue.pop_front() {
                for &a in &self.adj[x] {
                    let y = self.head[a];
                    if self.cap[a] > 0 && pred[y] == usize::MAX && y != src {
                        pred[y] = a;
                        if y == sink {
                            reached = true;
                            break;
                        }
                        queue.push_back(y);
                    }
                }
                if reached {
                    break;
                }
            }
            if !reached {
                break;
            }
            let mut y = sink;
            while y != src {
                let a = pred[y];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                y = self.head[a ^ 1];
            }
            flow += 1;
        }
        flow
    }
}
