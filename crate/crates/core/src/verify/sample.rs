//! Seeded samplers concentrated near the extremal boundary.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::claims::thm6_threshold;
use crate::closure::closure;
use crate::error::{Error, Result};
use crate::graph::{extremal_graph, is_extremal, is_t_connected, Graph, Params, DEFAULT_RETRIES};
use crate::scalar::choose2;

fn shuffle_labels(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.permuted(&perm)
}

/// The extremal graph of `p` plus `extra` distinct random non-edges, with
/// shuffled labels.
pub fn perturbed_extremal(p: &Params, extra: usize, seed: u64) -> Result<Graph> {
    let mut g = extremal_graph(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut missing = g.non_edges();
    if missing.len() < extra {
        return Err(Error::InvalidParams(format!("only {} non-edges, {extra} requested", missing.len())));
    }
    missing.shuffle(&mut rng);
    for &(u, v) in &missing[..extra] {
        g.set(u, v, true);
    }
    Ok(shuffle_labels(&g, &mut rng))
}

/// An `(n−1)`-closed, `t`-connected graph meeting the edge-count condition
/// of `p` that is not the extremal graph.
///
/// A clique of at least `n−k−t+1` vertices is planted, every remaining
/// vertex gets between `t` and `t+3` clique neighbours, occasionally an edge
/// is added among the remaining vertices, and the `(n−1)`-closure of the
/// result is taken. Draws are rejected until the requirements hold.
pub fn closed_dense_sample(p: &Params, seed: u64) -> Result<Graph> {
    p.validate()?;
    let (k, t, n) = (p.k, p.t, p.n);
    if n < thm6_threshold(k, t) {
        return Err(Error::InvalidParams(format!("n = {n} is below the order threshold {}", thm6_threshold(k, t))));
    }
    let floor = choose2((n - k - t) as i64) as usize + (k + t - 1) * (k + t - 1) + k + t;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..DEFAULT_RETRIES {
        let extra = [0, 0, 0, 1, 2][rng.gen_range(0..5)];
        let c = (n - k - t + 1 + extra).min(n);
        let mut g = Graph::disjoint_union(&Graph::complete(c)?, &Graph::empty(n - c));
        let clique: Vec<usize> = (0..c).collect();
        for h in c..n {
            let d = rng.gen_range(t..=t + 3).min(c);
            for &u in clique.choose_multiple(&mut rng, d) {
                g.set(h, u, true);
            }
        }
        if n - c >= 2 && rng.gen_bool(0.3) {
            let a = rng.gen_range(c..n);
            let b = rng.gen_range(c..n);
            if a != b {
                g.set(a, b, true);
            }
        }
        let (cl, _) = closure(&g, n - 1);
        if cl.edge_count() >= floor && is_t_connected(&cl, t) && !is_extremal(&cl, p) {
            return Ok(shuffle_labels(&cl, &mut rng));
        }
    }
    Err(Error::RetriesExhausted(DEFAULT_RETRIES))
}
