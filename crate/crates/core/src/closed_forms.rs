//! Elementary closed forms: `N = 2`, `N = 3` (trigonometric, with analytic
//! continuation past `t = 2/√27`), the small root of `N = 5`, and the
//! reciprocal trinomial `y^N - a y^(N-1) + a = 0`.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
// Redundant when a std-linking crate (e.g. a dev-dependency) is in the graph.
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::Zero;

use crate::config::SolverConfig;
use crate::error::{Error, Result};
use crate::lagrange_series::{all_roots_series, convergence_radius, residual, TrinomialProblem};
use crate::roots::{Provenance, RootSet};
use crate::special_functions::{pfq, HypergeometricSpec, Rational, SeriesResult};

/// Residual above which the conjugate continuation branch is tried.
const CUBIC_RESIDUAL_TOL: f64 = 1e-10;

/// `₂F₁(1/2, 1; 2; z)` in closed form.
///
/// `(2/z)(1 - √(1-z))` for `|z| <= 1` and `(2/z)(1 - i√(z-1))` beyond,
/// both rationalized to `2 / (1 + √(1-z))` and `2 / (1 + i√(z-1))` so
/// there is no cancellation near `z = 0`.
pub fn hyp2f1_half_one_two(z: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    if z.norm() <= 1.0 {
        (one + (one - z).sqrt()).inv() * 2.0
    } else {
        (one + Complex64::i() * (z - one).sqrt()).inv() * 2.0
    }
}

/// Both roots of `x² - x + t`: `x₁ = 1 - t ₂F₁(1/2, 1; 2; 4t)`, `x₂ = 1 - x₁`.
pub fn quadratic_roots(t: Complex64) -> RootSet {
    let x1 = Complex64::new(1.0, 0.0) - t * hyp2f1_half_one_two(t * 4.0);
    let x2 = Complex64::new(1.0, 0.0) - x1;
    RootSet::new(2, t, vec![x1, x2], vec![Provenance::ClosedForm; 2])
}

/// The angle `θ` with `sin θ = t√27/2` used by the trigonometric cubic roots.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicTrigState {
    pub theta: Complex64,
    /// Set when `θ` came from `π/2 - i Ln(w + √(w²-1))` instead of the principal arcsine.
    pub continued: bool,
}

pub fn cubic_trig_state(t: Complex64) -> CubicTrigState {
    let w = t * (27f64.sqrt() / 2.0);
    if w.im == 0.0 && w.re.abs() > 1.0 {
        let one = Complex64::new(1.0, 0.0);
        let theta =
            Complex64::new(FRAC_PI_2, 0.0) - Complex64::i() * (w + (w * w - one).sqrt()).ln();
        CubicTrigState {
            theta,
            continued: true,
        }
    } else {
        CubicTrigState {
            theta: w.asin(),
            continued: false,
        }
    }
}

fn cubic_from_theta(theta: Complex64) -> [Complex64; 3] {
    let phi = theta / 3.0;
    let s = phi.sin() / 3f64.sqrt();
    let c = phi.cos();
    [-s - c, -s + c, s * 2.0]
}

/// All three roots of `x³ - x + t` from the trigonometric forms
///
/// ```text
/// x₁ = -sin(θ/3)/√3 - cos(θ/3)
/// x₂ = -sin(θ/3)/√3 + cos(θ/3)
/// x₃ = 2 sin(θ/3)/√3
/// ```
pub fn cubic_roots(t: Complex64) -> RootSet {
    let state = cubic_trig_state(t);
    let mut roots = cubic_from_theta(state.theta);
    let worst = |r: &[Complex64; 3]| {
        r.iter()
            .map(|&x| crate::lagrange_series::trinomial_residual(3, t, x))
            .fold(0.0, f64::max)
    };
    if state.continued && worst(&roots) > CUBIC_RESIDUAL_TOL * t.norm().max(1.0) {
        let alt = cubic_from_theta(state.theta.conj());
        if worst(&alt) < worst(&roots) {
            roots = alt;
        }
    }
    RootSet::new(3, t, roots.to_vec(), vec![Provenance::ClosedForm; 3])
}

/// The root of `x⁵ - x + t` that vanishes with `t`:
/// `x = t · ₄F₃(1/5, 2/5, 3/5, 4/5; 1/2, 3/4, 5/4; 3125t⁴/256)`.
pub fn quintic_small_root(t: Complex64, config: &SolverConfig) -> Result<SeriesResult> {
    config.validate()?;
    let z = t.powu(4) * (3125.0 / 256.0);
    if z.norm() >= 1.0 {
        return Err(Error::OutsideRadius {
            abs_t: t.norm(),
            limit: convergence_radius(5),
        });
    }
    if t.is_zero() {
        return Ok(SeriesResult::exact(Complex64::zero(), 1));
    }
    let r = Rational::new;
    let spec = HypergeometricSpec::new(
        vec![r(1, 5), r(2, 5), r(3, 5), r(4, 5)],
        vec![r(1, 2), r(3, 4), r(5, 4)],
        z,
    )?;
    let abs_t = t.norm();
    let f = pfq(&spec, config.tol / abs_t, config.max_terms)?;
    let value = t * f.value;
    let problem = TrinomialProblem::new(5, t)?;
    let res = residual(&problem, value);
    if res > config.residual_tol {
        return Err(Error::Residual {
            index: 0,
            residual: res,
            tol: config.residual_tol,
        });
    }
    Ok(SeriesResult {
        value,
        terms_used: f.terms_used,
        tail_estimate: f.tail_estimate * abs_t,
        converged: true,
    })
}

/// Roots of `y^N - a y^(N-1) + a = 0` as reciprocals of the roots of
/// `x^N - x + 1/a = 0`.
///
/// The reduced problem is solved by the quadratic or cubic closed form when
/// `N <= 3`, otherwise by the Lagrange series (so `1/|a|` must lie inside
/// its radius). Residuals are measured on the reciprocal equation.
pub fn reciprocal_roots(degree: u32, a: Complex64, config: &SolverConfig) -> Result<RootSet> {
    if a.is_zero() || !a.re.is_finite() || !a.im.is_finite() {
        return Err(Error::InvalidInput("a must be finite and nonzero"));
    }
    let t = a.inv();
    let problem = TrinomialProblem::new(degree, t)?;
    let reduced = match degree {
        2 => quadratic_roots(t),
        3 => cubic_roots(t),
        _ => all_roots_series(&problem, config)?,
    };
    let scale = a.norm().powi(degree as i32).max(1.0);
    let tol = 1e-8 * scale;
    let mut roots = Vec::with_capacity(reduced.len());
    let mut residuals = Vec::with_capacity(reduced.len());
    for (index, &x) in reduced.roots.iter().enumerate() {
        if x.is_zero() {
            return Err(Error::ZeroRoot { index });
        }
        let y = x.inv();
        let res = reciprocal_residual(degree, a, y);
        if res > tol {
            return Err(Error::Residual {
                index,
                residual: res,
                tol,
            });
        }
        roots.push(y);
        residuals.push(res);
    }
    Ok(RootSet::with_residuals(
        roots,
        residuals,
        reduced.provenance,
    ))
}

/// `|y^N - a y^(N-1) + a|`.
pub fn reciprocal_residual(degree: u32, a: Complex64, y: Complex64) -> f64 {
    let low = y.powu(degree - 1);
    (low * y - a * low + a).norm()
}
