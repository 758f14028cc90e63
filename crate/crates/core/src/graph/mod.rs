//! Simple undirected graphs stored as packed adjacency bit rows.

mod clique;
mod connectivity;
mod extremal;
mod generate;
mod io;

pub use clique::{clique_number, high_degree_clique, DEFAULT_CLIQUE_BUDGET, independence_number, CliqueResult, IndependenceResult};
pub use connectivity::{
    components, is_connected, is_t_connected, vertex_connectivity, vertex_connectivity_exhaustive,
    vertex_connectivity_flow,
};
pub use extremal::{extremal_graph, is_extremal, Params};
pub use generate::{
    enumerate_graphs, graph_from_pair_mask, random_graph, random_graph_with_retries, GraphEnumerator, DEFAULT_RETRIES,
    MAX_ENUMERATION_N,
};
pub use io::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        let stride = n.div_ceil(WORD).max(1);
        Graph { n, stride, bits: vec![0; n * stride] }
    }

    /// Builds a graph from an edge list, collapsing duplicates.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.set(u, v, true);
        }
        Ok(g)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("complete graph needs n >= 1".into()));
        }
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set(u, v, true);
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set(v - 1, v, true);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.set(0, n - 1, true);
        }
        g
    }

    /// Star `K_{1,m}` with the center at vertex 0.
    pub fn star(m: usize) -> Self {
        let mut g = Graph::empty(m + 1);
        for v in 1..=m {
            g.set(0, v, true);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.set(u, v, true);
            }
        }
        g
    }

    pub fn petersen() -> Self {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.set(i, (i + 1) % 5, true);
            g.set(i, i + 5, true);
            g.set(i + 5, (i + 2) % 5 + 5, true);
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.stride + v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Packed neighbourhood row of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.stride..(v + 1) * self.stride]
    }

    /// Neighbourhood of `v` as a single word. Only valid for `n <= 64`.
    #[inline]
    pub fn mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= WORD);
        self.bits[v * self.stride]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> Neighbors<'_> {
        Neighbors { row: self.row(v), word: 0, current: self.row(v)[0] }
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Non-adjacent vertex pairs `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        2 * self.edge_count() == self.n * self.n.saturating_sub(1)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.set(u, v, true);
                }
            }
        }
        g
    }

    /// Copy of the graph with the edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut g = self.clone();
        g.set(u, v, true);
        Ok(g)
    }

    /// Copy of the graph with the edge `{u, v}` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.set(u, v, false);
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v], true);
        }
        g
    }

    /// Induced subgraph on `set`, with the map from new labels back to `self`.
    pub fn induced_subgraph(&self, set: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut index: Vec<usize> = set.to_vec();
        index.sort_unstable();
        index.dedup();
        for &v in &index {
            self.check_vertex(v)?;
        }
        let mut g = Graph::empty(index.len());
        for (i, &u) in index.iter().enumerate() {
            for (j, &v) in index.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set(i, j, true);
                }
            }
        }
        Ok((g, index))
    }

    /// `g1 ∇ g2`: disjoint union plus every edge between the two parts.
    pub fn join(g1: &Graph, g2: &Graph) -> Graph {
        let mut g = Graph::disjoint_union(g1, g2);
        for u in 0..g1.n {
            for v in 0..g2.n {
                g.set(u, g1.n + v, true);
            }
        }
        g
    }

    /// Disjoint union; `g2` is relabelled with offset `g1.n()`.
    pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
        let mut g = Graph::empty(g1.n + g2.n);
        for (u, v) in g1.edges() {
            g.set(u, v, true);
        }
        for (u, v) in g2.edges() {
            g.set(g1.n + u, g1.n + v, true);
        }
        g
    }

    pub(crate) fn set(&mut self, u: usize, v: usize, on: bool) {
        let (a, b) = (u * self.stride + v / WORD, v * self.stride + u / WORD);
        if on {
            self.bits[a] |= 1 << (v % WORD);
            self.bits[b] |= 1 << (u % WORD);
        } else {
            self.bits[a] &= !(1 << (v % WORD));
            self.bits[b] &= !(1 << (u % WORD));
        }
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub(crate) fn require_word_sized(&self, operation: &'static str) -> Result<()> {
        if self.n > WORD {
            Err(Error::TooLarge { operation, n: self.n, limit: WORD })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} vertices, edges {:?})", self.n, self.edges())
    }
}

/// Iterator over the set bits of a packed neighbourhood row.
pub struct Neighbors<'a> {
    row: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * WORD + bit);
            }
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.current = self.row[self.word];
        }
    }
}

/// Iterates the set bits of a word, lowest first.
pub(crate) fn bits(mut w: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if w == 0 {
            None
        } else {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(b)
        }
    })
}
