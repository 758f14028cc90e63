//! Matchings saturating one side of a bipartite graph, or a Hall violator.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Bipartite graph with left side `0..left` and right side `0..right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartite {
    pub right: usize,
    /// `adj[x]` lists the right-side neighbours of left vertex `x`.
    pub adj: Vec<Vec<usize>>,
}

impl Bipartite {
    pub fn left(&self) -> usize {
        self.adj.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum HallOutcome {
    /// `(x, y)` pairs saturating every left vertex.
    Matching(Vec<(usize, usize)>),
    /// Left vertices `S` with `|N(S)| < |S|`.
    Violator(Vec<usize>),
}

/// Augmenting-path matching (Kuhn). When a left vertex cannot be matched,
/// the left vertices reached by its failed alternating search form a set
/// `S` whose neighbourhood is exactly the partners of `S` minus the root,
/// so `|N(S)| = |S| − 1`.
pub fn hall_matching(b: &Bipartite) -> HallOutcome {
    let mut match_right: Vec<Option<usize>> = vec![None; b.right];
    for x in 0..b.left() {
        let mut seen_right = vec![false; b.right];
        let mut seen_left = vec![false; b.left()];
        if !augment(b, x, &mut match_right, &mut seen_right, &mut seen_left) {
            let s: Vec<usize> = (0..b.left()).filter(|&v| seen_left[v]).collect();
            return HallOutcome::Violator(s);
        }
    }
    let mut pairs: Vec<(usize, usize)> =
        match_right.iter().enumerate().filter_map(|(y, m)| m.map(|x| (x, y))).collect();
    pairs.sort_unstable();
    HallOutcome::Matching(pairs)
}

fn augment(
    b: &Bipartite,
    x: usize,
    match_right: &mut [Option<usize>],
    seen_right: &mut [bool],
    seen_left: &mut [bool],
) -> bool {
    seen_left[x] = true;
    for &y in &b.adj[x] {
        if seen_right[y] {
            continue;
        }
        seen_right[y] = true;
        let free = match match_right[y] {
            None => true,
            Some(x2) => augment(b, x2, match_right, seen_right, seen_left),
        };
        if free {
            match_right[y] = Some(x);
            return true;
        }
    }
    false
}

/// Hall matching between vertex sets `x` and `ground` of `g`, reported in
/// graph labels.
pub fn hall_matching_in_graph(g: &Graph, x: &[usize], ground: &[usize]) -> HallOutcome {
    let b = Bipartite {
        right: ground.len(),
        adj: x.iter().map(|&v| (0..ground.len()).filter(|&j| g.has_edge(v, ground[j])).collect()).collect(),
    };
    match hall_matching(&b) {
        HallOutcome::Matching(p) => HallOutcome::Matching(p.into_iter().map(|(i, j)| (x[i], ground[j])).collect()),
        HallOutcome::Violator(s) => HallOutcome::Violator(s.into_iter().map(|i| x[i]).collect()),
    }
}
