//! Path-growing heuristic: build a long path with rotations, then hang the
//! remaining vertices off it as chains.

use super::TreeWitness;
use crate::graph::{bits, is_connected, Graph};

/// Best tree found over all start vertices, stopping early once the leaf
/// count is at most `target`. `None` for disconnected or oversized graphs.
pub fn greedy_tree(g: &Graph, target: usize) -> Option<TreeWitness> {
    let n = g.n();
    if n == 0 || n > 64 || !is_connected(g) {
        return None;
    }
    if n <= 2 {
        return Some(TreeWitness::from_path(&(0..n).collect::<Vec<_>>()));
    }
    let adj: Vec<u64> = (0..n).map(|v| g.mask(v)).collect();
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&v| (adj[v].count_ones(), v));

    let mut best: Option<TreeWitness> = None;
    for s in starts {
        let path = grow_path(&adj, s);
        let w = hang_leftovers(&adj, &path);
        if best.as_ref().map_or(true, |b| w.leaf_count < b.leaf_count) {
            let done = w.leaf_count <= target;
            best = Some(w);
            if done {
                break;
            }
        }
    }
    best
}

fn unvisited_degree(adj: &[u64], v: usize, on: u64) -> u32 {
    (adj[v] & !on).count_ones()
}

/// Extends a path from `start` at both ends, using a Pósa rotation when the
/// current end is stuck.
fn grow_path(adj: &[u64], start: usize) -> Vec<usize> {
    let n = adj.len();
    let mut path = vec![start];
    let mut on: u64 = 1 << start;
    let mut rotations = 0;
    let mut reversed_since_progress = false;
    loop {
        let end = *path.last().unwrap();
        let cand = adj[end] & !on;
        if cand != 0 {
            let w = bits(cand).min_by_key(|&w| (unvisited_degree(adj, w, on | 1 << w), w)).unwrap();
            path.push(w);
            on |= 1 << w;
            reversed_since_progress = false;
            if path.len() == n {
                break;
            }
            continue;
        }
        // rotation: end ~ path[i] gives path[..=i] + reverse(path[i+1..]) ending at path[i+1]
        let len = path.len();
        let mut rotated = false;
        if rotations < 4 * n {
            for i in (0..len.saturating_sub(2)).rev() {
                if adj[end] >> path[i] & 1 == 1 && adj[path[i + 1]] & !on != 0 {
                    path[i + 1..].reverse();
                    rotations += 1;
                    rotated = true;
                    break;
                }
            }
        }
        if rotated {
            continue;
        }
        if reversed_since_progress {
            break;
        }
        path.reverse();
        reversed_since_progress = true;
    }
    path
}

/// Turns a path into a spanning tree: leftover vertices are attached,
/// preferring current leaves as attachment points, and each attachment is
/// continued as a greedy chain through further leftovers.
fn hang_leftovers(adj: &[u64], path: &[usize]) -> TreeWitness {
    let n = adj.len();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut deg = vec![0usize; n];
    let mut in_tree: u64 = 0;
    for (i, &v) in path.iter().enumerate() {
        in_tree |= 1 << v;
        if i > 0 {
            parent[v] = path[i - 1];
            deg[v] += 1;
            deg[path[i - 1]] += 1;
        }
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    while in_tree != full {
        let outside = full & !in_tree;
        // (attachment point, new vertex), preferring attachment at a leaf
        let mut choice: Option<(usize, usize, bool)> = None;
        for w in bits(outside) {
            let tree_nb = adj[w] & in_tree;
            if tree_nb == 0 {
                continue;
            }
            let leaf_nb = bits(tree_nb).find(|&p| deg[p] <= 1);
            let p = leaf_nb.unwrap_or_else(|| tree_nb.trailing_zeros() as usize);
            let at_leaf = leaf_nb.is_some();
            let better = match choice {
                None => true,
                Some((_, _, prev_leaf)) => at_leaf && !prev_leaf,
            };
            if better {
                choice = Some((p, w, at_leaf));
                if at_leaf {
                    break;
                }
            }
        }
        let Some((p, w, _)) = choice else { break };
        parent[w] = p;
        deg[w] += 1;
        deg[p] += 1;
        in_tree |= 1 << w;
        let mut end = w;
        loop {
            let cand = adj[end] & !in_tree;
            if cand == 0 {
                break;
            }
            let x = bits(cand).min_by_key(|&x| (unvisited_degree(adj, x, in_tree | 1 << x), x)).unwrap();
            parent[x] = end;
            deg[x] += 1;
            deg[end] += 1;
            in_tree |= 1 << x;
            end = x;
        }
    }
    parent[path[0]] = path[0];
    TreeWitness::from_parents(&parent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{extremal_graph, Params};
    use crate::trees::validate_tree;

    #[test]
    fn finds_hamilton_paths_in_easy_graphs() {
        for g in [Graph::cycle(9), Graph::complete(12).unwrap(), Graph::petersen(), Graph::path(7)] {
            let w = greedy_tree(&g, 2).unwrap();
            validate_tree(&g, &w).unwrap();
            assert_eq!(w.leaf_count, 2, "{g:?}");
        }
    }

    #[test]
    fn extremal_graph_needs_extra_leaf() {
        let p = Params::new(2, 1, 9).unwrap();
        let g = extremal_graph(&p).unwrap();
        let w = greedy_tree(&g, 2).unwrap();
        validate_tree(&g, &w).unwrap();
        assert_eq!(w.leaf_count, 3);
    }

    #[test]
    fn stars_and_trivial_graphs() {
        let w = greedy_tree(&Graph::star(5), 2).unwrap();
        assert_eq!(w.leaf_count, 5);
        assert_eq!(greedy_tree(&Graph::complete(1).unwrap(), 2).unwrap().leaf_count, 0);
        assert!(greedy_tree(&Graph::empty(3), 2).is_none());
    }
}
