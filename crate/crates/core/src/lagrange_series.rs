//! Direct summation of the Lagrange-inversion series.
//!
//! Substituting `x = ζ^(-1/(N-1))` turns `x^N - x + t = 0` into
//! `ζ = ω + t ζ^(N/(N-1))` around an `(N-1)`-st root of unity `ω`, and
//! Lagrange inversion gives one root per branch:
//!
//! ```text
//! x = ω⁻¹ - t/(N-1) · Σ_{n≥0} (tω)^n · Γ(Nn/(N-1)+1) / [Γ(n+2) Γ(n/(N-1)+1)]
//! ```
//!
//! The `N-1` branches give `N-1` roots; the last follows from the Vieta
//! sum `Σ x_j = δ_{N,2}`. The coefficients grow like `t_c^-n` with
//! `t_c = (N-1) N^(-N/(N-1))`, which is the radius of convergence in `t`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
// Redundant when a std-linking crate (e.g. a dev-dependency) is in the graph.
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::Zero;

use crate::config::SolverConfig;
use crate::error::{Error, Result};
use crate::oracle::{oracle_roots, OracleConfig};
use crate::roots::{Provenance, RootSet};
use crate::special_functions::{ln_gamma_ratio_term, SeriesResult};

/// The reduced trinomial `x^degree - x + t = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrinomialProblem {
    degree: u32,
    t: Complex64,
}

impl TrinomialProblem {
    pub fn new(degree: u32, t: Complex64) -> Result<Self> {
        if degree < 2 {
            return Err(Error::InvalidInput("degree must be at least 2"));
        }
        if !t.re.is_finite() || !t.im.is_finite() {
            return Err(Error::InvalidInput("t must be finite"));
        }
        Ok(TrinomialProblem { degree, t })
    }

    pub fn real(degree: u32, t: f64) -> Result<Self> {
        Self::new(degree, Complex64::new(t, 0.0))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn t(&self) -> Complex64 {
        self.t
    }

    pub fn radius(&self) -> f64 {
        convergence_radius(self.degree)
    }

    pub fn branches(&self) -> impl Iterator<Item = BranchIndex> {
        (0..self.degree - 1).map(BranchIndex)
    }
}

/// Selects `ω_j = exp(2πi (j+1)/(N-1))`; branch 0 is `exp(2πi/(N-1))`
/// and branch `N-2` is `ω = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BranchIndex(u32);

impl BranchIndex {
    pub fn new(j: u32, degree: u32) -> Result<Self> {
        if degree < 2 || j > degree - 2 {
            return Err(Error::InvalidInput("branch index must lie in [0, N-2]"));
        }
        Ok(BranchIndex(j))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn omega(self, degree: u32) -> Complex64 {
        root_of_unity(u64::from(self.0) + 1, u64::from(degree - 1))
    }
}

/// `exp(2πi k/m)`, exact at multiples of a quarter turn.
pub fn root_of_unity(k: u64, m: u64) -> Complex64 {
    let k = k % m;
    if (4 * k).is_multiple_of(m) {
        return match 4 * k / m {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    let angle = 2.0 * PI * (k as f64) / (m as f64);
    let (s, c) = angle.sin_cos();
    Complex64::new(c, s)
}

/// `t_c = (N-1) · N^(-N/(N-1))`.
pub fn convergence_radius(degree: u32) -> f64 {
    assert!(degree >= 2, "degree must be at least 2");
    let n = f64::from(degree);
    let m = n - 1.0;
    m * (-(n / m) * n.ln()).exp()
}

/// `δ_{N,2}`: the sum of all roots, read off the `x^(N-1)` coefficient.
pub fn sum_rule_constant(degree: u32) -> f64 {
    if degree == 2 {
        1.0
    } else {
        0.0
    }
}

pub fn residual(problem: &TrinomialProblem, x: Complex64) -> f64 {
    trinomial_residual(problem.degree, problem.t, x)
}

pub(crate) fn trinomial_residual(degree: u32, t: Complex64, x: Complex64) -> f64 {
    (x.powu(degree) - x + t).norm()
}

/// The `n`-th summand `(tω)^n · Γ(Nn/(N-1)+1) / [Γ(n+2) Γ(n/(N-1)+1)]`,
/// evaluated in log-magnitude form so neither factor overflows.
pub fn series_term(problem: &TrinomialProblem, branch: BranchIndex, n: u64) -> Complex64 {
    let u = problem.t * branch.omega(problem.degree);
    scaled_coefficient(problem.degree, u, n)
}

pub(crate) fn scaled_coefficient(degree: u32, u: Complex64, n: u64) -> Complex64 {
    if n == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let abs_u = u.norm();
    if abs_u == 0.0 {
        return Complex64::zero();
    }
    let magnitude = (ln_gamma_ratio_term(degree, n) + (n as f64) * abs_u.ln()).exp();
    let phase = (u / abs_u).powu(n as u32);
    phase * magnitude
}

/// Sums `Σ_{n≥0} term(n)` until the geometric tail bound is at most `tol`.
///
/// `ratio_floor` is a known lower bound on the limiting term ratio.
pub(crate) fn sum_series<F>(
    mut term: F,
    ratio_floor: f64,
    tol: f64,
    max_terms: usize,
) -> Result<SeriesResult>
where
    F: FnMut(u64) -> Complex64,
{
    let mut sum = term(0);
    let mut prev_abs = sum.norm();
    let mut tail = f64::INFINITY;
    let mut n: u64 = 1;
    loop {
        let used = n as usize;
        if used >= max_terms {
            return Err(Error::NonConvergence {
                terms_used: used,
                tail_estimate: tail,
            });
        }
        let next = term(n);
        sum += next;
        let abs = next.norm();
        if abs == 0.0 && prev_abs == 0.0 {
            return Ok(SeriesResult::exact(sum, used + 1));
        }
        let observed = if prev_abs > 0.0 {
            abs / prev_abs
        } else {
            f64::INFINITY
        };
        let r = observed.max(ratio_floor);
        if r < 1.0 {
            tail = abs * r / (1.0 - r);
            if tail <= tol {
                return Ok(SeriesResult {
                    value: sum,
                    terms_used: used + 1,
                    tail_estimate: tail,
                    converged: true,
                });
            }
        } else {
            tail = abs * (max_terms - used).max(1) as f64;
        }
        prev_abs = abs;
        n += 1;
    }
}

pub(crate) fn check_radius(degree: u32, t: Complex64, config: &SolverConfig) -> Result<()> {
    let limit = convergence_radius(degree) * (1.0 - config.radius_margin);
    let abs_t = t.norm();
    if abs_t < limit {
        Ok(())
    } else {
        Err(Error::OutsideRadius { abs_t, limit })
    }
}

/// The root on `branch`, by direct summation of the Lagrange series.
pub fn series_root(
    problem: &TrinomialProblem,
    branch: BranchIndex,
    config: &SolverConfig,
) -> Result<SeriesResult> {
    config.validate()?;
    let degree = problem.degree;
    if branch.0 > degree - 2 {
        return Err(Error::InvalidInput("branch index must lie in [0, N-2]"));
    }
    check_radius(degree, problem.t, config)?;

    let omega = branch.omega(degree);
    let leading = omega.conj();
    if problem.t.is_zero() {
        return Ok(SeriesResult::exact(leading, 1));
    }

    let scale = problem.t / f64::from(degree - 1);
    let abs_scale = scale.norm();
    let u = problem.t * omega;
    let ratio_floor = problem.t.norm() / convergence_radius(degree);
    let inner = sum_series(
        |n| scaled_coefficient(degree, u, n),
        ratio_floor,
        config.tol / abs_scale,
        config.max_terms,
    )?;
    let value = leading - scale * inner.value;
    let res = residual(problem, value);
    if res > config.residual_tol {
        return Err(Error::Residual {
            index: branch.0 as usize,
            residual: res,
            tol: config.residual_tol,
        });
    }
    Ok(SeriesResult {
        value,
        terms_used: inner.terms_used,
        tail_estimate: inner.tail_estimate * abs_scale,
        converged: true,
    })
}

/// All `N` roots: one per branch, plus the sum-rule root `δ_{N,2} - Σ x_j`.
pub fn all_roots_series(problem: &TrinomialProblem, config: &SolverConfig) -> Result<RootSet> {
    all_roots_series_detailed(problem, config).map(|(set, _)| set)
}

/// [`all_roots_series`] together with the per-branch series diagnostics.
pub fn all_roots_series_detailed(
    problem: &TrinomialProblem,
    config: &SolverConfig,
) -> Result<(RootSet, Vec<SeriesResult>)> {
    let degree = problem.degree;
    let mut roots = Vec::with_capacity(degree as usize);
    let mut provenance = Vec::with_capacity(degree as usize);
    let mut stats = Vec::with_capacity(degree as usize - 1);
    for branch in problem.branches() {
        let r = series_root(problem, branch, config)?;
        roots.push(r.value);
        provenance.push(Provenance::SeriesBranch(branch.0));
        stats.push(r);
    }
    let last = complete_with_sum_rule(problem, &roots, config)?;
    roots.push(last);
    provenance.push(Provenance::SumRule);
    Ok((RootSet::new(degree, problem.t, roots, provenance), stats))
}

/// `δ_{N,2} - Σ roots`, checked against the residual tolerance.
pub(crate) fn complete_with_sum_rule(
    problem: &TrinomialProblem,
    roots: &[Complex64],
    config: &SolverConfig,
) -> Result<Complex64> {
    let partial: Complex64 = roots.iter().sum();
    let last = Complex64::new(sum_rule_constant(problem.degree), 0.0) - partial;
    let res = residual(problem, last);
    if res > config.residual_tol {
        return Err(Error::Residual {
            index: roots.len(),
            residual: res,
            tol: config.residual_tol,
        });
    }
    Ok(last)
}

/// Confirms the sum-rule constant against the oracle for `N = 2, 3`.
pub fn sum_rule_self_check() -> Result<()> {
    for degree in [2u32, 3] {
        let problem = TrinomialProblem::real(degree, 0.1)?;
        let roots = oracle_roots(&problem, &OracleConfig::default())?;
        let residual = (roots.sum() - sum_rule_constant(degree)).norm();
        if residual > 1e-9 {
            return Err(Error::Residual {
                index: degree as usize,
                residual,
                tol: 1e-9,
            });
        }
    }
    Ok(())
}
