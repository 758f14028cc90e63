//! Exact Hamilton path search by dynamic programming over vertex subsets.

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Largest order handled by the subset dynamic program (`2^n` words of state).
pub const HAMILTON_DP_LIMIT: usize = 24;

/// A Hamilton path of `g`, or `None` if there is none.
///
/// `reach[S]` holds the set of vertices at which some path covering exactly
/// `S` can end; a path exists iff `reach[V]` is non-empty.
pub fn hamilton_path(g: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if n > HAMILTON_DP_LIMIT {
        return Err(Error::TooLarge { operation: "Hamilton path dynamic program", n, limit: HAMILTON_DP_LIMIT });
    }
    if n <= 1 {
        return Ok(Some((0..n).collect()));
    }
    let adj: Vec<u32> = (0..n).map(|v| g.mask(v) as u32).collect();
    let full: usize = (1 << n) - 1;
    let mut reach = vec![0u32; 1 << n];
    for v in 0..n {
        reach[1 << v] = 1 << v;
    }
    for mask in 1..=full {
        let ends = reach[mask];
        if ends == 0 {
            continue;
        }
        for v in bits(ends as u64) {
            let mut out = adj[v] & !(mask as u32);
            while out != 0 {
                let u = out.trailing_zeros() as usize;
                out &= out - 1;
                reach[mask | 1 << u] |= 1 << u;
            }
        }
    }
    if reach[full] == 0 {
        return Ok(None);
    }
    let mut path = Vec::with_capacity(n);
    let mut mask = full;
    let mut v = reach[full].trailing_zeros() as usize;
    loop {
        path.push(v);
        let rest = mask & !(1 << v);
        if rest == 0 {
            break;
        }
        let prev = reach[rest] & adj[v];
        debug_assert!(prev != 0);
        v = prev.trailing_zeros() as usize;
        mask = rest;
    }
    if path[0] > path[n - 1] {
        path.reverse();
    }
    Ok(Some(path))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::validate_hamilton_path;

    fn check(g: &Graph) -> bool {
        match hamilton_path(g).unwrap() {
            Some(p) => {
                validate_hamilton_path(g, &(0..g.n()).collect::<Vec<_>>(), &p).unwrap();
                true
            }
            None => false,
        }
    }

    #[test]
    fn known_cases() {
        assert!(check(&Graph::petersen()));
        assert!(!check(&Graph::star(3)));
        assert_eq!(hamilton_path(&Graph::path(2)).unwrap(), Some(vec![0, 1]));
        assert_eq!(hamilton_path(&Graph::complete(1).unwrap()).unwrap(), Some(vec![0]));
        assert!(!check(&Graph::empty(2)));
        assert!(check(&Graph::cycle(20)));
        assert!(!check(&Graph::complete_bipartite(3, 5)));
        assert!(check(&Graph::complete_bipartite(4, 5)));
    }

    #[test]
    fn limit() {
        assert!(matches!(hamilton_path(&Graph::cycle(25)), Err(Error::TooLarge { .. })));
    }
}
