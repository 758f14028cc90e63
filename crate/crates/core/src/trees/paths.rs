//! Alternating path systems over a saturating matching, and the Hamilton
//! path splice through a clique.

use serde::{Deserialize, Serialize};

use super::{hall_matching, validate_hamilton_path, Bipartite, HallOutcome, TreeWitness};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A matching `M = {(v_i, u_i)}` saturating `X` inside the bipartite graph
/// `H'` between `X` and `N(X)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingInstance {
    pub x: Vec<usize>,
    pub n_x: Vec<usize>,
    /// `(v, u)` with `v ∈ X` and `u ∈ N(X)`.
    pub pairs: Vec<(usize, usize)>,
    /// Edges `(v, u)` of `H'`, including the matched ones.
    pub edges: Vec<(usize, usize)>,
}

impl MatchingInstance {
    /// Checks the instance invariants and normalizes edge order.
    pub fn new(
        x: Vec<usize>,
        n_x: Vec<usize>,
        pairs: Vec<(usize, usize)>,
        mut edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let bad = |m: String| Err(Error::MalformedInstance(m));
        edges.sort_unstable();
        edges.dedup();
        for &(v, u) in &edges {
            if !x.contains(&v) || !n_x.contains(&u) {
                return bad(format!("edge ({v}, {u}) leaves X × N(X)"));
            }
        }
        if pairs.len() != x.len() {
            return bad(format!("{} matched pairs for |X| = {}", pairs.len(), x.len()));
        }
        let mut vs: Vec<usize> = pairs.iter().map(|p| p.0).collect();
        let mut us: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        vs.sort_unstable();
        us.sort_unstable();
        let mut xs = x.clone();
        xs.sort_unstable();
        if vs != xs {
            return bad("matching does not saturate X exactly once".into());
        }
        if us.windows(2).any(|w| w[0] == w[1]) {
            return bad("matched partners are not distinct".into());
        }
        if let Some(p) = pairs.iter().find(|p| edges.binary_search(p).is_err()) {
            return bad(format!("matched pair {p:?} is not an edge"));
        }
        if xs.iter().any(|v| n_x.contains(v)) {
            return bad("X meets N(X)".into());
        }
        Ok(MatchingInstance { x, n_x, pairs, edges })
    }

    /// The instance induced by `x` in `g`, matched by augmenting paths.
    /// Fails when Hall's condition fails for `x`.
    pub fn from_graph(g: &Graph, x: &[usize]) -> Result<Self> {
        let mut n_x: Vec<usize> = (0..g.n()).filter(|&u| x.iter().any(|&v| g.has_edge(u, v))).collect();
        n_x.retain(|u| !x.contains(u));
        let edges: Vec<(usize, usize)> =
            x.iter().flat_map(|&v| n_x.iter().filter(move |&&u| g.has_edge(v, u)).map(move |&u| (v, u))).collect();
        let b = Bipartite {
            right: n_x.len(),
            adj: x.iter().map(|&v| (0..n_x.len()).filter(|&j| g.has_edge(v, n_x[j])).collect()).collect(),
        };
        let pairs = match hall_matching(&b) {
            HallOutcome::Matching(p) => p.into_iter().map(|(i, j)| (x[i], n_x[j])).collect(),
            HallOutcome::Violator(s) => {
                let s: Vec<usize> = s.into_iter().map(|i| x[i]).collect();
                return Err(Error::MalformedInstance(format!("Hall's condition fails on {s:?}")));
            }
        };
        Self::new(x.to_vec(), n_x, pairs, edges)
    }

    pub fn y(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.1).collect()
    }

    fn partner_of_x(&self, v: usize) -> usize {
        self.pairs.iter().find(|p| p.0 == v).unwrap().1
    }

    fn partner_of_y(&self, u: usize) -> Option<usize> {
        self.pairs.iter().find(|p| p.1 == u).map(|p| p.0)
    }

    fn has_edge(&self, v: usize, u: usize) -> bool {
        self.edges.binary_search(&(v, u)).is_ok()
    }
}

/// Vertex-disjoint alternating paths `P_1, …, P_s`, each of the form
/// `u v u v … u v` with `(v, u)`-steps in `M` and `(v, u')`-steps outside.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSystem {
    pub paths: Vec<Vec<usize>>,
    /// Cumulative matched-pair counts `i_1 < … < i_s = |X|`.
    pub breakpoints: Vec<usize>,
}

impl PathSystem {
    pub fn s(&self) -> usize {
        self.paths.len()
    }

    fn from_paths(paths: Vec<Vec<usize>>) -> Self {
        let breakpoints = paths
            .iter()
            .scan(0, |acc, p| {
                *acc += p.len() / 2;
                Some(*acc)
            })
            .collect();
        PathSystem { paths, breakpoints }
    }
}

/// Greedy path system: each path starts from the lowest unused matched pair
/// and is extended at both ends until no alternating step remains in the
/// residual graph.
pub fn build_path_system(mi: &MatchingInstance) -> Result<PathSystem> {
    let mi = MatchingInstance::new(mi.x.clone(), mi.n_x.clone(), mi.pairs.clone(), mi.edges.clone())?;
    let mut used: Vec<usize> = Vec::new();
    let mut paths = Vec::new();
    let mut order = mi.pairs.clone();
    order.sort_unstable_by_key(|p| p.1);
    for &(v0, u0) in &order {
        if used.contains(&v0) {
            continue;
        }
        let mut path = vec![u0, v0];
        used.extend([u0, v0]);
        loop {
            if let Some(ext) = forward_step(&mi, &path, &used) {
                let v = mi.partner_of_y(ext).unwrap();
                path.extend([ext, v]);
                used.extend([ext, v]);
            } else if let Some(ext) = backward_step(&mi, &path, &used) {
                let u = mi.partner_of_x(ext);
                path.splice(0..0, [u, ext]);
                used.extend([u, ext]);
            } else {
                break;
            }
        }
        paths.push(path);
    }
    let ps = PathSystem::from_paths(paths);
    check_path_system(&mi, &ps)?;
    Ok(ps)
}

/// A residual `Y`-vertex reachable from the last vertex by a non-matching edge.
fn forward_step(mi: &MatchingInstance, path: &[usize], used: &[usize]) -> Option<usize> {
    let end = *path.last()?;
    mi.pairs.iter().map(|p| p.1).filter(|u| !used.contains(u)).filter(|&u| mi.has_edge(end, u)).min()
}

/// A residual `X`-vertex joined to the first vertex by a non-matching edge.
fn backward_step(mi: &MatchingInstance, path: &[usize], used: &[usize]) -> Option<usize> {
    let start = *path.first()?;
    mi.x.iter().copied().filter(|v| !used.contains(v)).filter(|&v| mi.has_edge(v, start)).min()
}

/// Checks disjointness and coverage of `X ∪ Y`, alternation, maximality of
/// every path in the graph left by its predecessors, and the breakpoints.
pub fn check_path_system(mi: &MatchingInstance, ps: &PathSystem) -> Result<()> {
    let fail = |m: String| Err(Error::Validation(format!("path system: {m}")));
    let s = ps.s();
    if mi.x.is_empty() {
        return if s == 0 { Ok(()) } else { fail("paths over an empty X".into()) };
    }
    if s == 0 || s > mi.x.len() {
        return fail(format!("s = {s} outside 1..={}", mi.x.len()));
    }
    let mut seen: Vec<usize> = ps.paths.concat();
    seen.sort_unstable();
    let mut want: Vec<usize> = mi.x.iter().copied().chain(mi.y()).collect();
    want.sort_unstable();
    if seen != want {
        return fail(format!("paths cover {seen:?}, X ∪ Y is {want:?}"));
    }
    let mut used: Vec<usize> = Vec::new();
    let mut total = 0;
    for (j, p) in ps.paths.iter().enumerate() {
        if p.len() < 2 || p.len() % 2 != 0 {
            return fail(format!("P_{} has {} vertices", j + 1, p.len()));
        }
        for (i, w) in p.windows(2).enumerate() {
            let ok = if i % 2 == 0 {
                mi.partner_of_y(w[0]) == Some(w[1])
            } else {
                mi.has_edge(w[0], w[1]) && mi.partner_of_x(w[0]) != w[1]
            };
            if !ok {
                return fail(format!("P_{} does not alternate at {} -> {}", j + 1, w[0], w[1]));
            }
        }
        used.extend(p.iter().copied());
        if forward_step(mi, p, &used).is_some() || backward_step(mi, p, &used).is_some() {
            return fail(format!("P_{} is not maximal", j + 1));
        }
        total += p.len() / 2;
        if ps.breakpoints.get(j) != Some(&total) {
            return fail(format!("breakpoint {} should be {}", j + 1, total));
        }
    }
    if ps.breakpoints.len() != s {
        return fail("breakpoint count differs from s".into());
    }
    Ok(())
}

/// Splices the path system through the clique into a Hamilton path of
/// `g[clique ∪ X]`, where `z` lists the clique vertices outside `Y`.
///
/// * `s = 1`: `P_1` reversed, then `Z`.
/// * `s = 2`: `P_2` reversed, `Z`, `P_1`.
/// * `s ≥ 3`: `P_s` reversed, the unused part of `Z`, then
///   `P_1 z_1 P_2 z_2 … P_{s-2} z_{s-2} P_{s-1}` with distinct `z_j ∈ Z`
///   adjacent to the last vertex of `P_j`.
///
/// The result is validated before it is returned.
pub fn assemble_hamilton_path(g: &Graph, clique: &[usize], ps: &PathSystem, z: &[usize]) -> Result<Vec<usize>> {
    let x: Vec<usize> = ps.paths.iter().flat_map(|p| p.iter().skip(1).step_by(2).copied()).collect();
    let rev = |p: &[usize]| p.iter().rev().copied().collect::<Vec<_>>();
    let s = ps.s();
    let seq: Vec<usize> = match s {
        0 => z.to_vec(),
        1 => rev(&ps.paths[0]).into_iter().chain(z.iter().copied()).collect(),
        2 => rev(&ps.paths[1]).into_iter().chain(z.iter().copied()).chain(ps.paths[0].iter().copied()).collect(),
        _ => {
            let ends: Vec<usize> = ps.paths[..s - 2].iter().map(|p| *p.last().unwrap()).collect();
            let reps = representatives(g, &ends, z)?;
            let mut seq = rev(&ps.paths[s - 1]);
            seq.extend(z.iter().copied().filter(|w| !reps.contains(w)));
            for j in 0..s - 2 {
                seq.extend(ps.paths[j].iter().copied());
                seq.push(reps[j]);
            }
            seq.extend(ps.paths[s - 2].iter().copied());
            seq
        }
    };
    let mut target: Vec<usize> = clique.iter().copied().chain(x).collect();
    target.sort_unstable();
    validate_hamilton_path(g, &target, &seq)?;
    Ok(seq)
}

/// Distinct `z_j ∈ Z ∩ N(ends[j])`: greedy in order of `j`, then a full
/// bipartite matching if the greedy pass gets stuck.
fn representatives(g: &Graph, ends: &[usize], z: &[usize]) -> Result<Vec<usize>> {
    let mut reps: Vec<usize> = Vec::with_capacity(ends.len());
    for &v in ends {
        match z.iter().copied().find(|&w| g.has_edge(v, w) && !reps.contains(&w)) {
            Some(w) => reps.push(w),
            None => break,
        }
    }
    if reps.len() == ends.len() {
        return Ok(reps);
    }
    let b = Bipartite {
        right: z.len(),
        adj: ends.iter().map(|&v| (0..z.len()).filter(|&j| g.has_edge(v, z[j])).collect()).collect(),
    };
    match hall_matching(&b) {
        HallOutcome::Matching(p) => {
            let mut reps = vec![0; ends.len()];
            for (i, j) in p {
                reps[i] = z[j];
            }
            Ok(reps)
        }
        HallOutcome::Violator(s) => Err(Error::InsufficientRepresentatives(format!(
            "path ends {:?} have fewer than {} distinct neighbours in Z",
            s.iter().map(|&i| ends[i]).collect::<Vec<_>>(),
            s.len()
        ))),
    }
}

/// Hangs every leftover vertex on a neighbour on the path, using each path
/// endpoint at most once before falling back to interior vertices.
pub fn extend_to_k_ended_tree(path: &[usize], g: &Graph, leftover: &[usize]) -> Result<TreeWitness> {
    let n = g.n();
    if path.len() + leftover.len() != n {
        return Err(Error::Validation(format!(
            "path ({}) and leftover ({}) do not partition {} vertices",
            path.len(),
            leftover.len(),
            n
        )));
    }
    let mut edges: Vec<(usize, usize)> = path.windows(2).map(|w| (w[0], w[1])).collect();
    let mut free_ends: Vec<usize> = match path {
        [] => vec![],
        [a] => vec![*a],
        [a, .., b] => vec![*a, *b],
    };
    for &w in leftover {
        let end = free_ends.iter().position(|&e| g.has_edge(w, e));
        let anchor = match end {
            Some(i) => free_ends.remove(i),
            None => *path
                .iter()
                .find(|&&p| g.has_edge(w, p))
                .ok_or_else(|| Error::Validation(format!("leftover vertex {w} has no neighbour on the path")))?,
        };
        edges.push((anchor, w));
    }
    let witness = TreeWitness::from_edges(n, edges);
    super::validate_tree(g, &witness)?;
    Ok(witness)
}
