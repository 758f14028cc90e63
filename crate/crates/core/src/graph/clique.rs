//! Exact maximum clique by branch and bound with a greedy colouring bound.

use serde::{Deserialize, Serialize};

use super::{bits, Graph};
use crate::closure::is_l_closed;
use crate::error::{Error, Result};

/// Default node budget for clique searches.
pub const DEFAULT_CLIQUE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueResult {
    pub omega: usize,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependenceResult {
    pub alpha: usize,
    pub witness: Vec<usize>,
}

/// Clique number with a maximum-clique witness. Fails with
/// [`Error::BudgetExceeded`] rather than returning a bound.
pub fn clique_number(g: &Graph, budget: u64) -> Result<CliqueResult> {
    g.require_word_sized("clique search")?;
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let witness = max_clique_within(g, all, budget)?;
    Ok(CliqueResult { omega: witness.len(), witness })
}

pub fn independence_number(g: &Graph, budget: u64) -> Result<IndependenceResult> {
    let c = clique_number(&g.complement(), budget)?;
    Ok(IndependenceResult { alpha: c.omega, witness: c.witness })
}

/// A largest clique containing every vertex of degree at least `(n − 1)/2`.
///
/// The input must be `(n − 1)`-closed, which makes those high-degree vertices
/// pairwise adjacent.
pub fn high_degree_clique(g: &Graph, budget: u64) -> Result<CliqueResult> {
    g.require_word_sized("clique search")?;
    let n = g.n();
    let l = n.saturating_sub(1);
    if !is_l_closed(g, l) {
        return Err(Error::NotClosed(l));
    }
    let high: Vec<usize> = (0..n).filter(|&v| 2 * g.degree(v) >= l).collect();
    let mut forced = 0u64;
    let mut common = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for &v in &high {
        forced |= 1 << v;
        common &= g.mask(v);
    }
    debug_assert!(high.iter().all(|&v| forced & !(1 << v) & !g.mask(v) == 0));
    let extra = max_clique_within(g, common & !forced, budget)?;
    let mut witness: Vec<usize> = high.into_iter().chain(extra).collect();
    witness.sort_unstable();
    Ok(CliqueResult { omega: witness.len(), witness })
}

/// Maximum clique inside `candidates`.
fn max_clique_within(g: &Graph, candidates: u64, budget: u64) -> Result<Vec<usize>> {
    let mut s = Search { g, best: Vec::new(), current: Vec::new(), nodes: 0, budget };
    if candidates == 0 {
        return Ok(Vec::new());
    }
    // greedy seed
    let mut cand = candidates;
    while cand != 0 {
        let v = bits(cand).max_by_key(|&v| (g.mask(v) & cand).count_ones()).unwrap();
        s.best.push(v);
        cand &= g.mask(v);
    }
    s.expand(candidates)?;
    Ok(s.best)
}

struct Search<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn expand(&mut self, mut cand: u64) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        let (order, colors) = self.color_sort(cand);
        for i in (0..order.len()).rev() {
            if self.current.len() + colors[i] <= self.best.len() {
                return Ok(());
            }
            let v = order[i];
            self.current.push(v);
            let next = cand & self.g.mask(v);
            if next == 0 {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next)?;
            }
            self.current.pop();
            cand &= !(1 << v);
        }
        Ok(())
    }

    /// Greedy sequential colouring; returns vertices ordered by colour and
    /// the colour (1-based) of each, non-decreasing.
    fn color_sort(&self, cand: u64) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(cand.count_ones() as usize);
        let mut colors = Vec::with_capacity(order.capacity());
        let mut uncolored = cand;
        let mut color = 0;
        while uncolored != 0 {
            color += 1;
            let mut avail = uncolored;
            while avail != 0 {
                let v = avail.trailing_zeros() as usize;
                avail &= !(1 << v);
                avail &= !self.g.mask(v);
                uncolored &= !(1 << v);
                order.push(v);
                colors.push(color);
            }
        }
        (order, colors)
    }
}
