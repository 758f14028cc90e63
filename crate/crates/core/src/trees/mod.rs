//! Spanning trees with few leaves: exact search, Hamilton paths, Hall
//! matchings and the clique-plus-independent-set construction.

mod constructive;
mod greedy;
mod hall;
mod hamilton;
mod minleaf;
mod paths;

pub use constructive::{
    constructive_k_ended_tree, declosure_tree, ConstructiveOutcome, ExtremalCertificate, Route,
};
pub use greedy::greedy_tree;
pub use hall::{hall_matching, hall_matching_in_graph, Bipartite, HallOutcome};
pub use hamilton::{hamilton_path, HAMILTON_DP_LIMIT};
pub use minleaf::{has_k_ended_tree, min_leaf_spanning_tree, Decision, MinLeafResult, TreeDecision};
pub use paths::{
    assemble_hamilton_path, build_path_system, check_path_system, extend_to_k_ended_tree, MatchingInstance,
    PathSystem,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default node budget for exact tree searches.
pub const DEFAULT_TREE_BUDGET: u64 = 20_000_000;

/// A spanning tree given by its edges, with its number of degree-one vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeWitness {
    pub edges: Vec<(usize, usize)>,
    pub leaf_count: usize,
}

impl TreeWitness {
    /// Builds a witness from tree edges on `n` vertices, counting leaves.
    pub fn from_edges(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        for e in &mut edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        let leaf_count = count_leaves(n, &edges);
        TreeWitness { edges, leaf_count }
    }

    /// Builds a witness from a parent array (`parent[root] == root`).
    pub fn from_parents(parent: &[usize]) -> Self {
        let edges = parent.iter().enumerate().filter(|&(v, &p)| p != v).map(|(v, &p)| (p, v)).collect();
        Self::from_edges(parent.len(), edges)
    }

    /// The spanning path visiting `seq` in order.
    pub fn from_path(seq: &[usize]) -> Self {
        let edges = seq.windows(2).map(|w| (w[0], w[1])).collect();
        Self::from_edges(seq.len(), edges)
    }
}

fn count_leaves(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut deg = vec![0usize; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    deg.iter().filter(|&&d| d == 1).count()
}

/// Checks that `w` is a spanning tree of `host` with a correct leaf count.
pub fn validate_tree(host: &Graph, w: &TreeWitness) -> Result<()> {
    let n = host.n();
    if n == 0 {
        return Err(Error::Validation("empty host graph".into()));
    }
    if w.edges.len() != n - 1 {
        return Err(Error::Validation(format!("{} edges for {} vertices", w.edges.len(), n)));
    }
    let mut uf: Vec<usize> = (0..n).collect();
    fn find(uf: &mut [usize], mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    for &(u, v) in &w.edges {
        if u >= n || v >= n || u == v || !host.has_edge(u, v) {
            return Err(Error::Validation(format!("({u}, {v}) is not an edge of the host")));
        }
        let (a, b) = (find(&mut uf, u), find(&mut uf, v));
        if a == b {
            return Err(Error::Validation(format!("({u}, {v}) closes a cycle")));
        }
        uf[a] = b;
    }
    let leaves = count_leaves(n, &w.edges);
    if leaves != w.leaf_count {
        return Err(Error::Validation(format!("leaf count {} recorded, {} found", w.leaf_count, leaves)));
    }
    Ok(())
}

/// Checks that `seq` visits every vertex of `host[vertices]` exactly once
/// along edges of `host`.
pub fn validate_hamilton_path(host: &Graph, vertices: &[usize], seq: &[usize]) -> Result<()> {
    let mut want: Vec<usize> = vertices.to_vec();
    want.sort_unstable();
    want.dedup();
    let mut got = seq.to_vec();
    got.sort_unstable();
    if got != want {
        return Err(Error::Validation(format!(
            "path covers {:?}, expected exactly {:?}",
            got, want
        )));
    }
    for w in seq.windows(2) {
        if !host.has_edge(w[0], w[1]) {
            return Err(Error::Validation(format!("path step {} -> {} is not an edge", w[0], w[1])));
        }
    }
    Ok(())
}
