//! Brute-force oracles shared by the integration tests. None of these call
//! into the algorithms they check.

#![allow(dead_code)]

use nalgebra::DMatrix;
use rand::seq::SliceRandom;
use rand::Rng;
use stk_core::Graph;

/// Union-find spanning-tree check; returns the leaf count if `edges` is a
/// spanning tree of `g`.
pub fn tree_leaves(g: &Graph, edges: &[(usize, usize)]) -> Option<usize> {
    let n = g.n();
    if n == 0 || edges.len() + 1 != n {
        return None;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    let mut deg = vec![0; n];
    for &(u, v) in edges {
        if u >= n || v >= n || !g.has_edge(u, v) {
            return None;
        }
        let (a, b) = (root(&mut parent, u), root(&mut parent, v));
        if a == b {
            return None;
        }
        parent[a] = b;
        deg[u] += 1;
        deg[v] += 1;
    }
    Some(deg.iter().filter(|&&d| d == 1).count())
}

/// Minimum leaf count over all spanning trees, by enumerating every
/// `(n−1)`-subset of edges. `None` if the graph is disconnected.
pub fn brute_min_leaves(g: &Graph) -> Option<usize> {
    let n = g.n();
    if n == 1 {
        return Some(0);
    }
    let edges = g.edges();
    let need = n - 1;
    if edges.len() < need {
        return None;
    }
    let mut best: Option<usize> = None;
    let mut idx: Vec<usize> = (0..need).collect();
    loop {
        let pick: Vec<(usize, usize)> = idx.iter().map(|&i| edges[i]).collect();
        if let Some(l) = tree_leaves(g, &pick) {
            best = Some(best.map_or(l, |b: usize| b.min(l)));
        }
        let mut i = need;
        loop {
            if i == 0 {
                return best;
            }
            i -= 1;
            if idx[i] != i + edges.len() - need {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..need {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Hamilton path by trying every permutation (small `n` only).
pub fn brute_hamilton(g: &Graph) -> bool {
    fn go(g: &Graph, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if path.len() == g.n() {
            return true;
        }
        for v in 0..g.n() {
            if !used[v] && path.last().map_or(true, |&p| g.has_edge(p, v)) {
                used[v] = true;
                path.push(v);
                if go(g, path, used) {
                    return true;
                }
                path.pop();
                used[v] = false;
            }
        }
        false
    }
    go(g, &mut Vec::new(), &mut vec![false; g.n()])
}

/// Checks that `seq` visits exactly `vertices` once each along edges of `g`.
pub fn is_hamilton_path(g: &Graph, vertices: &[usize], seq: &[usize]) -> bool {
    let mut a = vertices.to_vec();
    let mut b = seq.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    a == b && b.windows(2).all(|w| w[0] != w[1]) && seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// Closure by adding qualifying pairs in a random order until none remain.
pub fn shuffled_closure<R: Rng>(g: &Graph, l: usize, rng: &mut R) -> Graph {
    let mut h = g.clone();
    loop {
        let mut cand: Vec<(usize, usize)> = h
            .non_edges()
            .into_iter()
            .filter(|&(u, v)| h.degree(u) + h.degree(v) >= l)
            .collect();
        if cand.is_empty() {
            return h;
        }
        cand.shuffle(rng);
        let (u, v) = cand[0];
        h = h.with_edge(u, v).unwrap();
    }
}

/// Largest eigenvalue of the adjacency matrix by a dense symmetric eigensolver.
pub fn dense_rho(g: &Graph) -> f64 {
    let n = g.n();
    let a = DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    a.symmetric_eigen().eigenvalues.iter().copied().fold(f64::NEG_INFINITY, f64::max)
}

/// Connected by depth-first search.
pub fn dfs_connected(g: &Graph, removed: &[bool]) -> bool {
    let n = g.n();
    let Some(start) = (0..n).find(|&v| !removed[v]) else { return true };
    let mut seen = removed.to_vec();
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for u in 0..n {
            if !seen[u] && g.has_edge(v, u) {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Vertex connectivity by trying every vertex subset as a cut.
pub fn brute_kappa(g: &Graph) -> usize {
    let n = g.n();
    let mut best = n.saturating_sub(1);
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best || size + 2 > n {
            continue;
        }
        let removed: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        if !dfs_connected(g, &removed) {
            best = size;
        }
    }
    best
}

/// Largest clique by checking every vertex subset.
pub fn brute_omega(g: &Graph) -> usize {
    let n = g.n();
    (0u32..(1 << n))
        .filter(|&m| {
            let vs: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
            vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// A random graph from a pair mask drawn uniformly.
pub fn random_small_graph<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                g = g.with_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// A planted instance for the path-system splice.
pub struct Planted {
    pub g: Graph,
    pub clique: Vec<usize>,
    pub x: Vec<usize>,
    pub n_x: Vec<usize>,
    pub pairs: Vec<(usize, usize)>,
    pub h_edges: Vec<(usize, usize)>,
    pub z: Vec<usize>,
    pub blocks: usize,
}

/// Clique `0..c` whose first `t+1` vertices are matched to `X = c..c+t+1`;
/// the pairs are split into `blocks` consecutive runs joined by alternating
/// edges (plus random extra edges inside a run), and each `X` vertex gets
/// enough random neighbours among the other clique vertices to see at least
/// `t` clique vertices in total.
pub fn planted_instance<R: Rng>(t: usize, blocks: usize, extra_inside: bool, rng: &mut R) -> Planted {
    assert!(blocks >= 1 && blocks <= t + 1);
    let z_len = t + rng.gen_range(0..=4);
    let c = t + 1 + z_len;
    let n = c + t + 1;
    let mut g = Graph::empty(n);
    for u in 0..c {
        for v in u + 1..c {
            g = g.with_edge(u, v).unwrap();
        }
    }
    let x: Vec<usize> = (c..n).collect();
    let y: Vec<usize> = (0..=t).collect();
    let z: Vec<usize> = (t + 1..c).collect();
    let pairs: Vec<(usize, usize)> = (0..=t).map(|i| (x[i], y[i])).collect();

    // block boundaries: `blocks` non-empty runs of consecutive pairs
    let mut cuts: Vec<usize> = (1..=t).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(blocks - 1).collect();
    cuts.sort_unstable();
    cuts.push(t + 1);
    let mut block_of = vec![0; t + 1];
    let mut start = 0;
    for (b, &end) in cuts.iter().enumerate() {
        for i in start..end {
            block_of[i] = b;
        }
        start = end;
    }

    for i in 0..=t {
        g = g.with_edge(x[i], y[i]).unwrap();
        if i < t && block_of[i + 1] == block_of[i] {
            g = g.with_edge(x[i], y[i + 1]).unwrap();
        }
    }
    if extra_inside {
        for i in 0..=t {
            for j in 0..=t {
                if block_of[i] == block_of[j] && rng.gen_bool(0.3) {
                    g = g.with_edge(x[i], y[j]).unwrap();
                }
            }
        }
    }
    for &v in &x {
        let have = (0..c).filter(|&u| g.has_edge(v, u)).count();
        let mut pool = z.clone();
        pool.shuffle(rng);
        let want = t.saturating_sub(have) + rng.gen_range(0..=1);
        for &u in pool.iter().take(want) {
            g = g.with_edge(v, u).unwrap();
        }
    }
    let n_x: Vec<usize> = (0..c).filter(|&u| x.iter().any(|&v| g.has_edge(u, v))).collect();
    let mut h_edges = Vec::new();
    for &v in &x {
        for &u in &n_x {
            if g.has_edge(v, u) {
                h_edges.push((v, u));
            }
        }
    }
    Planted { g, clique: (0..c).collect(), x, n_x, pairs, h_edges, z, blocks }
}
