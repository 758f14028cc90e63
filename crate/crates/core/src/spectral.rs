//! Adjacency spectral radius by power iteration, the quotient-matrix oracle
//! for the extremal family, and the minimum-degree upper bound.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{components, Graph, Params};
use crate::scalar::Real;

/// Default residual tolerance for [`spectral_radius`].
pub const DEFAULT_TOL: f64 = 1e-10;
/// Iteration cap per connected component.
pub const MAX_ITERATIONS: u64 = 1_000_000;
/// Tolerance for comparing spectral radii in theorem hypotheses.
pub const COMPARE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralEstimate<T> {
    pub rho: T,
    /// `‖A v − ρ v‖_∞` for the Perron vector estimate scaled to `‖v‖_∞ = 1`.
    pub residual: T,
    pub iterations: u64,
}

/// Perron root of the adjacency matrix.
///
/// Each component is iterated separately from the all-ones vector with the
/// shifted matrix `A + I`, which removes the `±ρ` oscillation on bipartite
/// components; the Rayleigh quotient is read out every step and the iteration
/// stops once the residual is within `tol`.
pub fn spectral_radius<T: Real>(g: &Graph, tol: T) -> Result<SpectralEstimate<T>> {
    if g.n() == 0 {
        return Err(Error::InvalidParams("spectral radius of the empty vertex set".into()));
    }
    if !(tol > T::zero()) {
        return Err(Error::InvalidParams("tolerance must be positive".into()));
    }
    let mut best = SpectralEstimate { rho: T::zero(), residual: T::zero(), iterations: 0 };
    let mut total = 0;
    for comp in components(g) {
        if comp.len() == 1 {
            continue;
        }
        let est = component_radius(g, &comp, tol)?;
        total += est.iterations;
        if est.rho > best.rho {
            best = est;
        }
    }
    best.iterations = total;
    Ok(best)
}

fn component_radius<T: Real>(g: &Graph, comp: &[usize], tol: T) -> Result<SpectralEstimate<T>> {
    let m = comp.len();
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in comp.iter().enumerate() {
        local[v] = i;
    }
    let adj: Vec<Vec<usize>> = comp.iter().map(|&v| g.neighbors(v).map(|u| local[u]).collect()).collect();

    let mut x = vec![T::one(); m];
    let mut ax = vec![T::zero(); m];
    let mut rho = T::zero();
    let mut residual = T::infinity();
    for it in 1..=MAX_ITERATIONS {
        for (i, nb) in adj.iter().enumerate() {
            ax[i] = nb.iter().fold(T::zero(), |acc, &j| acc + x[j]);
        }
        let (mut num, mut den, mut scale) = (T::zero(), T::zero(), T::zero());
        for i in 0..m {
            num = num + x[i] * ax[i];
            den = den + x[i] * x[i];
            scale = scale.max(x[i].abs());
        }
        rho = num / den;
        residual = (0..m).fold(T::zero(), |acc, i| acc.max((ax[i] - rho * x[i]).abs())) / scale;
        if residual <= tol {
            return Ok(SpectralEstimate { rho, residual, iterations: it });
        }
        let mut norm = T::zero();
        for i in 0..m {
            x[i] = ax[i] + x[i];
            norm = norm.max(x[i].abs());
        }
        for xi in &mut x {
            *xi = *xi / norm;
        }
    }
    Err(Error::NoConvergence {
        best: rho.to_f64().unwrap_or(f64::NAN),
        residual: residual.to_f64().unwrap_or(f64::NAN),
        iterations: MAX_ITERATIONS,
    })
}

/// Largest root of the characteristic polynomial of the quotient matrix
/// `[[t−1, m, q], [t, m−1, 0], [t, 0, 0]]` of the equitable partition of
/// `K_t ∇ (K_m ∪ q K_1)`.
///
/// Requires `m >= 1`; `q = 0` is allowed and gives `t + m − 1`.
pub fn quotient_rho<T: Real>(t: usize, m: usize, q: usize) -> T {
    assert!(m >= 1, "clique part must be non-empty");
    let (tt, mm, qq) = (T::of_usize(t), T::of_usize(m), T::of_usize(q));
    let one = T::one();
    // x³ + a x² + b x + c
    let a = -(tt + mm - T::of(2.0));
    let b = (tt - one) * (mm - one) - mm * tt - qq * tt;
    let c = tt * qq * (mm - one);
    let p = |x: T| ((x + a) * x + b) * x + c;
    let dp = |x: T| (T::of(3.0) * x + T::of(2.0) * a) * x + b;

    // Newton from above the largest root decreases monotonically onto it:
    // all roots are real and the cubic is increasing and convex to their right.
    let mut x = T::of_usize(t + m + q) + one;
    let eps = T::of(1e-12);
    for _ in 0..200 {
        let step = p(x) / dp(x);
        x = x - step;
        if step.abs() <= eps * x.abs().max(one) {
            break;
        }
    }
    // bisection polish on a bracket around the Newton limit
    let (mut lo, mut hi) = (x - T::of(1e-6), x + T::of(1e-6));
    if p(lo) <= T::zero() && p(hi) >= T::zero() {
        for _ in 0..100 {
            let mid = (lo + hi) / T::of(2.0);
            if p(mid) >= T::zero() {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo <= eps {
                break;
            }
        }
        x = (lo + hi) / T::of(2.0);
    }
    x
}

/// `ρ(K_t ∇ (K_{n−k−2t+1} ∪ (k+t−1) K_1))` from the quotient matrix.
pub fn extremal_rho_quotient<T: Real>(p: &Params) -> Result<T> {
    p.validate()?;
    Ok(quotient_rho(p.t, p.clique_part(), p.independent_part()))
}

/// Upper bound `(δ − 1 + √((δ + 1)² + 4(2e − nδ))) / 2` on `ρ(G)` for a graph
/// of order `n`, size `e` and minimum degree at least `δ`.
pub fn hsf_nikiforov_bound<T: Real>(n: usize, e: usize, delta: usize) -> Result<T> {
    if n == 0 {
        return Err(Error::InconsistentBound("n must be positive".into()));
    }
    if 2 * e < n * delta {
        return Err(Error::InconsistentBound(format!(
            "2e = {} is below n·δ = {}",
            2 * e,
            n * delta
        )));
    }
    let d = T::of_usize(delta);
    let one = T::one();
    let disc = (d + one) * (d + one) + T::of(4.0) * (T::of_usize(2 * e) - T::of_usize(n * delta));
    if disc < T::zero() {
        return Err(Error::InconsistentBound("negative discriminant".into()));
    }
    Ok((d - one + disc.sqrt()) / T::of(2.0))
}

/// Three-way comparison of spectral radii with an absolute tolerance.
pub fn rho_compare<T: Real>(a: T, b: T, tol: T) -> Ordering {
    if (a - b).abs() <= tol {
        Ordering::Equal
    } else if a < b {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}
