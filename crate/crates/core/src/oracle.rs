//! Series-free ground truth: Durand–Kerner iteration and root matching.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
// Redundant when a std-linking crate (e.g. a dev-dependency) is in the graph.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::lagrange_series::{trinomial_residual, TrinomialProblem};
use crate::roots::{Provenance, RootSet};

/// Residual certificate for every root the oracle returns, relative to `max(1, |t|)`.
pub const ORACLE_RESIDUAL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    pub max_iterations: usize,
    /// Converged once the largest update step falls below this.
    pub tolerance: f64,
    pub start_radius_factor: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_iterations: 500,
            tolerance: 1e-13,
            start_radius_factor: 1.0,
        }
    }
}

/// All roots of `x^N - x + t` by simultaneous (Weierstrass) iteration.
///
/// Starts from `r (0.4 + 0.9i)^k`, `k = 0..N-1`, with
/// `r = start_radius_factor · max(1, |t|^(1/N))`, and updates the roots in
/// place in index order, so the result is fully deterministic.
pub fn oracle_roots(problem: &TrinomialProblem, cfg: &OracleConfig) -> Result<RootSet> {
    let positive = |x: f64| x > 0.0;
    if cfg.max_iterations == 0 || !positive(cfg.tolerance) || !positive(cfg.start_radius_factor) {
        return Err(Error::InvalidInput("invalid oracle configuration"));
    }
    let degree = problem.degree();
    let t = problem.t();
    let n = degree as usize;
    let poly = |x: Complex64| x.powu(degree) - x + t;

    let radius = cfg.start_radius_factor * t.norm().powf(1.0 / f64::from(degree)).max(1.0);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = Vec::with_capacity(n);
    let mut power = Complex64::new(1.0, 0.0);
    for _ in 0..n {
        z.push(power * radius);
        power *= seed;
    }

    let mut converged = false;
    let mut iterations = 0;
    while iterations < cfg.max_iterations {
        iterations += 1;
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            let zi = z[i];
            let mut denom = Complex64::new(1.0, 0.0);
            for (j, &zj) in z.iter().enumerate() {
                if j != i {
                    denom *= zi - zj;
                }
            }
            let step = poly(zi) / denom;
            if !step.re.is_finite() || !step.im.is_finite() {
                continue;
            }
            z[i] = zi - step;
            max_step = max_step.max(step.norm());
        }
        if max_step < cfg.tolerance {
            converged = true;
            break;
        }
    }

    let residuals: Vec<f64> = z
        .iter()
        .map(|&x| trinomial_residual(degree, t, x))
        .collect();
    let max_residual = residuals.iter().copied().fold(0.0, f64::max);
    let cert = ORACLE_RESIDUAL_TOL * t.norm().max(1.0);
    if !converged || max_residual > cert {
        return Err(Error::OracleNonConvergence {
            iterations,
            max_residual,
            best: z,
        });
    }
    Ok(RootSet::with_residuals(
        z,
        residuals,
        vec![Provenance::Oracle; n],
    ))
}

/// A pairing between two root lists.
#[derive(Debug, Clone, PartialEq)]
pub struct RootMatching {
    /// `(index in a, index in b, distance)`, sorted by the first index.
    pub pairs: Vec<(usize, usize, f64)>,
    pub max_distance: f64,
}

/// Perfect matching minimizing the largest pair distance.
///
/// Exact for any size: binary search over the candidate distances, with
/// augmenting-path bipartite matching as the feasibility test.
pub fn match_roots(a: &RootSet, b: &RootSet) -> Result<RootMatching> {
    match_points(&a.roots, &b.roots)
}

/// [`match_roots`] on bare point lists.
pub fn match_points(a: &[Complex64], b: &[Complex64]) -> Result<RootMatching> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let n = a.len();
    if n == 0 {
        return Ok(RootMatching {
            pairs: Vec::new(),
            max_distance: 0.0,
        });
    }
    let dist: Vec<Vec<f64>> = a
        .iter()
        .map(|&x| b.iter().map(|&y| (x - y).norm()).collect())
        .collect();
    let mut candidates: Vec<f64> = dist.iter().flatten().copied().collect();
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();

    let (mut lo, mut hi) = (0usize, candidates.len() - 1);
    let mut best =
        bipartite_match(&dist, candidates[hi]).expect("complete graph has a perfect matching");
    while lo < hi {
        let mid = (lo + hi) / 2;
        match bipartite_match(&dist, candidates[mid]) {
            Some(m) => {
                best = m;
                hi = mid;
            }
            None => lo = mid + 1,
        }
    }
    let pairs: Vec<(usize, usize, f64)> = best
        .iter()
        .enumerate()
        .map(|(i, &j)| (i, j, dist[i][j]))
        .collect();
    let max_distance = pairs.iter().map(|p| p.2).fold(0.0, f64::max);
    Ok(RootMatching {
        pairs,
        max_distance,
    })
}

/// `match_of_a[i] = j`, using only edges with `dist <= threshold`.
fn bipartite_match(dist: &[Vec<f64>], threshold: f64) -> Option<Vec<usize>> {
    let n = dist.len();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        let mut seen = vec![false; n];
        if !augment(i, dist, threshold, &mut seen, &mut owner) {
            return None;
        }
    }
    let mut out = vec![0; n];
    for (j, o) in owner.iter().enumerate() {
        out[o.expect("perfect matching")] = j;
    }
    Some(out)
}

fn augment(
    i: usize,
    dist: &[Vec<f64>],
    threshold: f64,
    seen: &mut [bool],
    owner: &mut [Option<usize>],
) -> bool {
    for j in 0..dist.len() {
        if dist[i][j] <= threshold && !seen[j] {
            seen[j] = true;
            if owner[j].is_none_or(|k| augment(k, dist, threshold, seen, owner)) {
                owner[j] = Some(i);
                return true;
            }
        }
    }
    false
}
