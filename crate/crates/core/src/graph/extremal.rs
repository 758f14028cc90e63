//! The extremal family `K_t ∇ (K_m ∪ q K_1)` with `m = n − k − 2t + 1`, `q = k + t − 1`.

use serde::{Deserialize, Serialize};

use super::{components, Graph};
use crate::error::{Error, Result};

/// Leaf budget `k`, connectivity `t` and order `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    pub k: usize,
    pub t: usize,
    pub n: usize,
}

impl Params {
    /// Validated parameters for the extremal construction.
    pub fn new(k: usize, t: usize, n: usize) -> Result<Self> {
        let p = Params { k, t, n };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k < 2 {
            return Err(Error::InvalidParams(format!("k = {} must be at least 2", self.k)));
        }
        if self.t < 1 {
            return Err(Error::InvalidParams("t must be at least 1".into()));
        }
        if self.n < self.k + 2 * self.t {
            return Err(Error::InvalidParams(format!(
                "n - k - 2t + 1 = {} must be at least 1 (n = {}, k = {}, t = {})",
                self.n as i64 - self.k as i64 - 2 * self.t as i64 + 1,
                self.n,
                self.k,
                self.t
            )));
        }
        Ok(())
    }

    /// Size of the clique part, `n − k − 2t + 1`.
    pub fn clique_part(&self) -> usize {
        self.n + 1 - self.k - 2 * self.t
    }

    /// Number of isolated vertices inside the join, `k + t − 1`.
    pub fn independent_part(&self) -> usize {
        self.k + self.t - 1
    }

    /// Edge count of the extremal graph, `C(n−k−t+1, 2) + (k+t−1)t`.
    pub fn extremal_edge_count(&self) -> usize {
        let a = self.n + 1 - self.k - self.t;
        a * (a - 1) / 2 + self.independent_part() * self.t
    }
}

/// Builds `K_t ∇ (K_m ∪ q K_1)`. Vertices `0..t` form the universal part,
/// `t..t+m` the clique part and the remaining `q` vertices the independent part.
pub fn extremal_graph(p: &Params) -> Result<Graph> {
    p.validate()?;
    let kt = Graph::complete(p.t)?;
    let km = Graph::complete(p.clique_part())?;
    let inner = Graph::disjoint_union(&km, &Graph::empty(p.independent_part()));
    Ok(Graph::join(&kt, &inner))
}

/// Structural isomorphism test against `extremal_graph(p)`.
///
/// In the extremal graph the universal vertices are exactly the `K_t` part
/// (the other parts have degree `t + m − 1 < n − 1` and `t < n − 1`), so `g`
/// is extremal iff it has exactly `t` universal vertices and removing them
/// leaves one clique of size `m` plus `q` isolated vertices.
pub fn is_extremal(g: &Graph, p: &Params) -> bool {
    if p.validate().is_err() || g.n() != p.n {
        return false;
    }
    let n = g.n();
    let universal: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 1).collect();
    if universal.len() != p.t {
        return false;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| g.degree(v) != n - 1).collect();
    let (h, _) = g.induced_subgraph(&rest).expect("vertices in range");
    let comps = components(&h);
    let mut sizes = Vec::with_capacity(comps.len());
    for comp in &comps {
        let s = comp.len();
        let inside: usize = comp.iter().map(|&v| h.degree(v)).sum::<usize>() / 2;
        if inside != s * (s - 1) / 2 {
            return false;
        }
        sizes.push(s);
    }
    sizes.sort_unstable();
    let mut expected = vec![1; p.independent_part()];
    expected.push(p.clique_part());
    expected.sort_unstable();
    sizes == expected
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_edge_counts() {
        let g = extremal_graph(&Params::new(2, 1, 9).unwrap()).unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(g.edge_count(), 23);
        let g = extremal_graph(&Params::new(2, 1, 17).unwrap()).unwrap();
        assert_eq!(g.edge_count(), 107);
        assert_eq!(g.degree(0), 16);
    }

    #[test]
    fn parameter_violations() {
        assert!(Params::new(1, 1, 9).is_err());
        assert!(Params::new(2, 0, 9).is_err());
        assert!(Params::new(2, 2, 5).is_err());
        assert!(Params::new(2, 2, 6).is_ok());
        let bad = Params { k: 3, t: 2, n: 6 };
        assert!(extremal_graph(&bad).is_err());
    }

    #[test]
    fn recognition() {
        let p = Params::new(2, 1, 9).unwrap();
        let g = extremal_graph(&p).unwrap();
        assert!(is_extremal(&g, &p));
        assert!(!is_extremal(&Graph::complete(9).unwrap(), &p));
        // drop a universal–independent edge: the join structure breaks
        let h = g.without_edge(0, 8).unwrap();
        assert!(!is_extremal(&h, &p));
        // relabelled copies are still recognised
        let perm: Vec<usize> = (0..9).rev().collect();
        assert!(is_extremal(&g.permuted(&perm), &p));
        // wrong parameters
        assert!(!is_extremal(&g, &Params::new(3, 1, 9).unwrap()));
    }

    #[test]
    fn singleton_clique_part() {
        // m = 1: the clique vertex looks like another isolated vertex
        let p = Params::new(2, 1, 4).unwrap();
        let g = extremal_graph(&p).unwrap();
        assert_eq!(g, Graph::star(3));
        assert!(is_extremal(&g, &p));
    }
}
