//! Tree extraction for dense closed graphs: maximum clique, a best
//! `(t+1)`-subset of the remaining independent set, a saturating matching,
//! the alternating path splice and leaf attachment.

use serde::{Deserialize, Serialize};

use super::{
    assemble_hamilton_path, build_path_system, extend_to_k_ended_tree, has_k_ended_tree, validate_tree, Decision,
    MatchingInstance, TreeWitness,
};
use crate::closure::{closure, is_l_closed};
use crate::error::{Error, Result};
use crate::graph::{clique_number, is_extremal, is_t_connected, Graph, Params};

/// Evidence that the input is the extremal graph: the clique/independent
/// split and the `t` vertices that absorb every edge leaving the independent side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalCertificate {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
    pub attachment: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// Path-system splice with `s` alternating paths (`s = 0` when nothing lies outside the clique).
    Splice { s: usize },
    /// Exact search, used when the maximum clique is larger than `n−k−t+1`
    /// or the vertices outside it are not independent.
    Search,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConstructiveOutcome {
    Tree { witness: TreeWitness, route: Route },
    Extremal(ExtremalCertificate),
}

fn choose2(a: usize) -> usize {
    a * a.saturating_sub(1) / 2
}

fn check_preconditions(g: &Graph, p: &Params) -> Result<()> {
    p.validate()?;
    let (k, t, n) = (p.k, p.t, p.n);
    if g.n() != n {
        return Err(Error::InvalidParams(format!("graph has {} vertices, parameters say {n}", g.n())));
    }
    let order_floor = (6 * k + 6 * t - 1).max(k * k + t * k + t + 1);
    if n < order_floor {
        return Err(Error::InvalidParams(format!("n = {n} is below {order_floor}")));
    }
    let edge_floor = choose2(n - k - t) + (k + t - 1) * (k + t - 1) + k + t;
    if g.edge_count() < edge_floor {
        return Err(Error::InvalidParams(format!("{} edges, at least {edge_floor} required", g.edge_count())));
    }
    if !is_l_closed(g, n - 1) {
        return Err(Error::NotClosed(n - 1));
    }
    if !is_t_connected(g, t) {
        return Err(Error::InvalidParams(format!("graph is not {t}-connected")));
    }
    Ok(())
}

fn neighbourhood(g: &Graph, set: &[usize]) -> Vec<usize> {
    (0..g.n()).filter(|&u| !set.contains(&u) && set.iter().any(|&v| g.has_edge(u, v))).collect()
}

/// The `size`-subset of `h` with the largest neighbourhood, lexicographically first on ties.
fn best_subset(g: &Graph, h: &[usize], size: usize) -> Vec<usize> {
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let sub: Vec<usize> = idx.iter().map(|&i| h[i]).collect();
        let score = neighbourhood(g, &sub).len();
        if best.as_ref().map_or(true, |b| score > b.0) {
            best = Some((score, sub));
        }
        let mut i = size;
        loop {
            if i == 0 {
                return best.map(|b| b.1).unwrap_or_default();
            }
            i -= 1;
            if idx[i] != i + h.len() - size {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Builds a spanning tree with at most `k` leaves in an `(n−1)`-closed,
/// `t`-connected graph above the edge threshold, or certifies that the graph
/// is `K_t ∇ (K_{n−k−2t+1} ∪ (k+t−1)K_1)`.
///
/// Every produced tree is validated; a failing step is returned as an error
/// rather than repaired.
pub fn constructive_k_ended_tree(g: &Graph, p: &Params, budget: u64) -> Result<ConstructiveOutcome> {
    check_preconditions(g, p)?;
    let (k, t, n) = (p.k, p.t, p.n);
    let clique = clique_number(g, budget)?.witness;
    if clique.len() < n - k - t + 1 {
        return Err(Error::Validation(format!(
            "maximum clique has {} vertices, expected at least {}",
            clique.len(),
            n - k - t + 1
        )));
    }
    let h: Vec<usize> = (0..n).filter(|v| !clique.contains(v)).collect();
    let independent = h.iter().all(|&a| h.iter().all(|&b| !g.has_edge(a, b)));
    if !independent || (!h.is_empty() && clique.len() > n - k - t + 1) {
        return search(g, k, budget);
    }

    let x = best_subset(g, &h, (t + 1).min(h.len()));
    let n_x = neighbourhood(g, &x);
    if n_x.len() < x.len() {
        let attachment = neighbourhood(g, &h);
        if attachment.len() == t && is_extremal(g, p) {
            return Ok(ConstructiveOutcome::Extremal(ExtremalCertificate {
                clique,
                independent: h,
                attachment,
            }));
        }
        return Err(Error::Validation(format!(
            "|N(X)| = {} < |X| = {} but the graph is not extremal",
            n_x.len(),
            x.len()
        )));
    }

    let mi = MatchingInstance::from_graph(g, &x)?;
    let ps = build_path_system(&mi)?;
    let y = mi.y();
    let z: Vec<usize> = clique.iter().copied().filter(|v| !y.contains(v)).collect();
    let path = assemble_hamilton_path(g, &clique, &ps, &z)?;
    let leftover: Vec<usize> = h.iter().copied().filter(|v| !x.contains(v)).collect();
    let witness = extend_to_k_ended_tree(&path, g, &leftover)?;
    if witness.leaf_count > k {
        return Err(Error::Validation(format!("constructed tree has {} leaves, k = {k}", witness.leaf_count)));
    }
    Ok(ConstructiveOutcome::Tree { witness, route: Route::Splice { s: ps.s() } })
}

fn search(g: &Graph, k: usize, budget: u64) -> Result<ConstructiveOutcome> {
    let d = has_k_ended_tree(g, k, budget)?;
    match (d.decision, d.witness) {
        (Decision::Yes, Some(witness)) => {
            validate_tree(g, &witness)?;
            Ok(ConstructiveOutcome::Tree { witness, route: Route::Search })
        }
        (Decision::Unknown, _) => Err(Error::BudgetExceeded { budget }),
        _ => Err(Error::Validation(format!(
            "no spanning {k}-ended tree, yet the graph is not extremal"
        ))),
    }
}

/// A spanning tree of `g` itself with at most `k` leaves, given that its
/// `(n−1)`-closure has one. Failure to find it in `g` is a counterexample to
/// the closure equivalence and is reported as such.
pub fn declosure_tree(g: &Graph, k: usize, budget: u64) -> Result<TreeWitness> {
    let n = g.n();
    let (cl, _) = closure(g, n.saturating_sub(1));
    let in_closure = has_k_ended_tree(&cl, k, budget)?;
    match in_closure.decision {
        Decision::Yes => {}
        Decision::No => {
            return Err(Error::InvalidParams(format!("the closure has no spanning {k}-ended tree")));
        }
        Decision::Unknown => return Err(Error::BudgetExceeded { budget }),
    }
    let d = has_k_ended_tree(g, k, budget)?;
    match (d.decision, d.witness) {
        (Decision::Yes, Some(w)) => {
            validate_tree(g, &w)?;
            Ok(w)
        }
        (Decision::Unknown, _) => Err(Error::BudgetExceeded { budget }),
        _ => Err(Error::ClosureCounterexample(format!(
            "closure has a spanning {k}-ended tree but the graph has none"
        ))),
    }
}
