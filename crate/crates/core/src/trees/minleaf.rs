//! Exact minimum-leaf spanning trees by branch and bound.
//!
//! Trees are grown from a fixed root. A node of the search picks one
//! unprocessed tree vertex and decides its complete set of children among
//! the vertices not yet in the tree, so every spanning tree is generated
//! exactly once. Each unprocessed tree vertex roots a disjoint subtree of the
//! final tree containing at least one leaf, which gives the lower bound
//! `committed + |queue|`, sharpened by vertices that can no longer get children.

use serde::{Deserialize, Serialize};

use super::{greedy_tree, hamilton_path, TreeWitness, HAMILTON_DP_LIMIT};
use crate::error::{Error, Result};
use crate::graph::{bits, is_connected, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinLeafResult {
    pub witness: TreeWitness,
    /// `false` when the budget ran out before optimality was certified.
    pub exact: bool,
    pub nodes_expanded: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecision {
    pub decision: Decision,
    pub witness: Option<TreeWitness>,
    pub nodes_expanded: u64,
}

fn trivial_lower_bound(g: &Graph) -> usize {
    match g.n() {
        0 | 1 => 0,
        2 => 2,
        n => (0..n).filter(|&v| g.degree(v) == 1).count().max(2),
    }
}

/// Spanning tree with the fewest leaves.
pub fn min_leaf_spanning_tree(g: &Graph, budget: u64) -> Result<MinLeafResult> {
    g.require_word_sized("minimum-leaf search")?;
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let incumbent = greedy_tree(g, trivial_lower_bound(g)).expect("connected graph has a spanning tree");
    if incumbent.leaf_count <= trivial_lower_bound(g) {
        return Ok(MinLeafResult { witness: incumbent, exact: true, nodes_expanded: 0 });
    }
    let mut search = Search::new(g, incumbent.leaf_count, 0, budget);
    let outcome = search.run();
    let witness = search.best.map(|p| TreeWitness::from_parents(&p)).unwrap_or(incumbent);
    Ok(MinLeafResult { witness, exact: outcome.is_ok(), nodes_expanded: search.nodes })
}

/// Whether `g` has a spanning tree with at most `k` leaves.
///
/// The greedy path-growing phase runs first; a `No` answer is only given
/// after an exhausted exact search (the subset dynamic program for `k = 2`
/// and small `n`, branch and bound otherwise).
pub fn has_k_ended_tree(g: &Graph, k: usize, budget: u64) -> Result<TreeDecision> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("k = {k} must be at least 2")));
    }
    g.require_word_sized("k-ended tree search")?;
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let yes = |w: TreeWitness, nodes| Ok(TreeDecision { decision: Decision::Yes, witness: Some(w), nodes_expanded: nodes });
    let no = |nodes| Ok(TreeDecision { decision: Decision::No, witness: None, nodes_expanded: nodes });

    if trivial_lower_bound(g) > k {
        return no(0);
    }
    let greedy = greedy_tree(g, k).expect("connected graph has a spanning tree");
    if greedy.leaf_count <= k {
        return yes(greedy, 0);
    }
    if k == 2 && g.n() <= HAMILTON_DP_LIMIT {
        return match hamilton_path(g)? {
            Some(p) => yes(TreeWitness::from_path(&p), 0),
            None => no(0),
        };
    }
    let mut search = Search::new(g, k + 1, k, budget);
    match search.run() {
        Ok(()) => match search.best {
            Some(p) => yes(TreeWitness::from_parents(&p), search.nodes),
            None => no(search.nodes),
        },
        Err(_) => Ok(TreeDecision {
            decision: Decision::Unknown,
            witness: None,
            nodes_expanded: search.nodes,
        }),
    }
}

enum Stop {
    Budget,
    Found,
}

struct Search {
    adj: Vec<u64>,
    full: u64,
    root: usize,
    in_tree: u64,
    queue: u64,
    committed: usize,
    parent: Vec<usize>,
    /// Trees must have strictly fewer leaves than this to be recorded.
    bound: usize,
    /// Stop as soon as a tree with at most this many leaves is recorded.
    good_enough: usize,
    best: Option<Vec<usize>>,
    nodes: u64,
    budget: u64,
}

impl Search {
    fn new(g: &Graph, bound: usize, good_enough: usize, budget: u64) -> Self {
        let n = g.n();
        let adj: Vec<u64> = (0..n).map(|v| g.mask(v)).collect();
        let root = (0..n).min_by_key(|&v| (adj[v].count_ones(), v)).unwrap();
        Search {
            full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            adj,
            root,
            in_tree: 1 << root,
            queue: 0,
            committed: 0,
            parent: (0..n).collect(),
            bound,
            good_enough,
            best: None,
            nodes: 0,
            budget,
        }
    }

    /// `Err(())` iff the budget ran out.
    fn run(&mut self) -> std::result::Result<(), ()> {
        let r = self.root;
        let avail: Vec<usize> = bits(self.adj[r]).collect();
        let res = (|| -> std::result::Result<(), Stop> {
            // the root is a leaf iff it has exactly one child
            for size in 1..=avail.len() {
                let root_leaf = usize::from(size == 1);
                if root_leaf + size >= self.bound {
                    break;
                }
                self.for_each_subset(&avail, size, r, root_leaf)?;
            }
            Ok(())
        })();
        match res {
            Ok(()) | Err(Stop::Found) => Ok(()),
            Err(Stop::Budget) => Err(()),
        }
    }

    fn for_each_subset(&mut self, avail: &[usize], size: usize, v: usize, leaf: usize) -> std::result::Result<(), Stop> {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let mut children = 0u64;
            for &i in &idx {
                children |= 1 << avail[i];
            }
            self.apply(v, children, leaf)?;
            // next combination
            let mut i = size;
            loop {
                if i == 0 {
                    return Ok(());
                }
                i -= 1;
                if idx[i] != i + avail.len() - size {
                    break;
                }
            }
            idx[i] += 1;
            for j in i + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    fn apply(&mut self, v: usize, children: u64, leaf: usize) -> std::result::Result<(), Stop> {
        for c in bits(children) {
            self.parent[c] = v;
        }
        self.in_tree |= children;
        self.queue |= children;
        self.committed += leaf;
        let res = self.explore();
        self.committed -= leaf;
        self.queue &= !children;
        self.in_tree &= !children;
        res
    }

    fn explore(&mut self) -> std::result::Result<(), Stop> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Stop::Budget);
        }
        let outside = self.full & !self.in_tree;
        if self.queue == 0 {
            if outside == 0 && self.committed < self.bound {
                self.bound = self.committed;
                self.best = Some(self.parent.clone());
                if self.committed <= self.good_enough {
                    return Err(Stop::Found);
                }
            }
            return Ok(());
        }

        // every outside vertex must stay reachable from the queue through outside vertices
        let mut reach = 0u64;
        let mut frontier = 0u64;
        for q in bits(self.queue) {
            frontier |= self.adj[q];
        }
        frontier &= outside;
        while frontier != 0 {
            reach |= frontier;
            let mut next = 0u64;
            for w in bits(frontier) {
                next |= self.adj[w];
            }
            frontier = next & outside & !reach;
        }
        if reach != outside {
            return Ok(());
        }

        let mut dead = 0u64;
        for q in bits(self.queue) {
            if self.adj[q] & outside == 0 {
                dead |= 1 << q;
            }
        }
        let live = self.queue & !dead;
        let forced_outside = bits(outside).filter(|&w| self.adj[w] & outside == 0).count();
        let lb = self.committed + dead.count_ones() as usize + (live.count_ones() as usize).max(forced_outside);
        if lb >= self.bound {
            return Ok(());
        }

        if dead != 0 {
            // vertices without candidate children become leaves, no branching
            let d = dead.count_ones() as usize;
            self.queue &= !dead;
            self.committed += d;
            let res = self.explore();
            self.committed -= d;
            self.queue |= dead;
            return res;
        }

        let v = bits(live).min_by_key(|&q| ((self.adj[q] & outside).count_ones(), q)).unwrap();
        let mut avail: Vec<usize> = bits(self.adj[v] & outside).collect();
        avail.sort_by_key(|&w| ((self.adj[w] & outside).count_ones(), w));
        self.queue &= !(1 << v);
        let res = (|| -> std::result::Result<(), Stop> {
            let qlen = self.queue.count_ones() as usize;
            // with c >= 1 children the simple bound becomes committed + qlen + c
            let cap = self.bound.saturating_sub(self.committed + qlen + 1);
            for size in 1..=cap.min(avail.len()) {
                self.for_each_subset(&avail, size, v, 0)?;
            }
            if self.committed + qlen + 1 < self.bound {
                self.apply(v, 0, 1)?;
            }
            Ok(())
        })();
        self.queue |= 1 << v;
        res
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{extremal_graph, Params};
    use crate::trees::validate_tree;

    fn min_leaves(g: &Graph) -> usize {
        let r = min_leaf_spanning_tree(g, u64::MAX).unwrap();
        assert!(r.exact);
        validate_tree(g, &r.witness).unwrap();
        r.witness.leaf_count
    }

    #[test]
    fn small_families() {
        for n in 2..9 {
            assert_eq!(min_leaves(&Graph::path(n)), 2);
        }
        for m in 2..7 {
            assert_eq!(min_leaves(&Graph::star(m)), m);
        }
        assert_eq!(min_leaves(&Graph::complete(1).unwrap()), 0);
        assert_eq!(min_leaves(&Graph::complete_bipartite(2, 5)), 4);
        assert_eq!(min_leaves(&Graph::complete_bipartite(3, 7)), 5);
    }

    #[test]
    fn extremal_graphs_need_k_plus_one() {
        assert_eq!(min_leaves(&extremal_graph(&Params::new(2, 1, 9).unwrap()).unwrap()), 3);
        assert_eq!(min_leaves(&extremal_graph(&Params::new(3, 2, 12).unwrap()).unwrap()), 4);
    }

    #[test]
    fn decisions() {
        let yes = has_k_ended_tree(&Graph::cycle(6), 2, 1000).unwrap();
        assert_eq!(yes.decision, Decision::Yes);
        validate_tree(&Graph::cycle(6), yes.witness.as_ref().unwrap()).unwrap();
        assert_eq!(has_k_ended_tree(&Graph::star(4), 3, 1000).unwrap().decision, Decision::No);
        let g = extremal_graph(&Params::new(3, 2, 12).unwrap()).unwrap();
        assert_eq!(has_k_ended_tree(&g, 3, u64::MAX).unwrap().decision, Decision::No);
        assert_eq!(has_k_ended_tree(&g, 4, u64::MAX).unwrap().decision, Decision::Yes);
        assert!(matches!(has_k_ended_tree(&Graph::empty(3), 2, 10), Err(Error::Disconnected)));
        assert!(has_k_ended_tree(&Graph::path(3), 1, 10).is_err());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = extremal_graph(&Params::new(4, 1, 12).unwrap()).unwrap();
        let r = has_k_ended_tree(&g, 4, 1).unwrap();
        assert!(matches!(r.decision, Decision::Unknown | Decision::No));
        let r = min_leaf_spanning_tree(&g, 1).unwrap();
        validate_tree(&g, &r.witness).unwrap();
    }
}
