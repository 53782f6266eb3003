//! Residue-class splitting of the Lagrange series into hypergeometric functions.
//!
//! Write `n = q + m(N-1)` with `q = 0..N-2`. The Gauss multiplication
//! theorem
//!
//! ```text
//! Γ(α + km) = Γ(α) k^(km) ∏_{i=0}^{k-1} ((α+i)/k)_m
//! ```
//!
//! applied to `Γ(Nn/(N-1)+1)` (k = N), `Γ(n+2)` (k = N-1) and
//! `Γ(n/(N-1)+1)` turns each class into `c_q (tω)^q · pFq(z)` with
//!
//! ```text
//! upper = {(qN/(N-1) + 1 + k)/N : k = 0..N-1} ∪ {1}
//! lower = {(q + k + 2)/(N-1)    : k = 0..N-2} ∪ {q/(N-1) + 1}
//! z     = (tω/(N-1))^(N-1) · N^N = t^(N-1) N^N / (N-1)^(N-1)
//! ```
//!
//! The extra upper `1` absorbs the `m!` of the hypergeometric series.
//! Parameters shared by both lists are then cancelled.

use alloc::boxed::Box;
use alloc::vec::Vec;

use num_complex::Complex64;
// Redundant when a std-linking crate (e.g. a dev-dependency) is in the graph.
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::Zero;

use crate::config::SolverConfig;
use crate::error::{Error, Result};
use crate::lagrange_series::{
    check_radius, convergence_radius, residual, scaled_coefficient, series_term, sum_series,
    BranchIndex, TrinomialProblem,
};
use crate::roots::{Provenance, RootSet};
use crate::special_functions::{pfq, HypergeometricSpec, Rational, SeriesResult};

/// One residue class: `coefficient · pFq(spec)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassTerm {
    pub q: u32,
    pub coefficient: Complex64,
    pub spec: HypergeometricSpec,
}

/// A root written as `leading + Σ_q coefficient_q · pFq_q`.
#[derive(Debug, Clone, PartialEq)]
pub struct DecomposedRoot {
    pub problem: TrinomialProblem,
    pub leading: Complex64,
    pub classes: Vec<ClassTerm>,
}

/// `N^N / (N-1)^(N-1)` as an exact fraction, when it fits in `i64`.
pub fn argument_scale_exact(degree: u32) -> Option<Rational> {
    let n = i64::from(degree);
    let num = n.checked_pow(degree)?;
    let den = (n - 1).checked_pow(degree - 1)?;
    Some(Rational::new(num, den))
}

/// The common argument `t^(N-1) · N^N / (N-1)^(N-1)` of every class.
pub fn class_argument(degree: u32, t: Complex64) -> Complex64 {
    let n = f64::from(degree);
    let m = n - 1.0;
    let scale = n.powi(degree as i32) / m.powi(degree as i32 - 1);
    t.powu(degree - 1) * scale
}

/// Parameter lists for class `q`, after cancellation.
pub fn class_spec(degree: u32, q: u32, argument: Complex64) -> HypergeometricSpec {
    assert!(degree >= 2 && q <= degree - 2);
    let n = i64::from(degree);
    let m = n - 1;
    let q = i64::from(q);
    let mut upper: Vec<Rational> = (0..n)
        .map(|k| Rational::new(q * n + (1 + k) * m, n * m))
        .collect();
    upper.push(Rational::from_integer(1));
    let mut lower: Vec<Rational> = (0..m).map(|k| Rational::new(q + k + 2, m)).collect();
    lower.push(Rational::new(q + m, m));
    HypergeometricSpec::new(upper, lower, argument)
        .expect("lower parameters are positive")
        .cancelled()
}

/// Splits the root on `branch` into `N-1` hypergeometric classes.
pub fn decompose(problem: &TrinomialProblem, branch: BranchIndex) -> DecomposedRoot {
    let degree = problem.degree();
    let t = problem.t();
    let z = class_argument(degree, t);
    let prefactor = -t / f64::from(degree - 1);
    let classes = (0..degree - 1)
        .map(|q| ClassTerm {
            q,
            coefficient: prefactor * series_term(problem, branch, u64::from(q)),
            spec: class_spec(degree, q, z),
        })
        .collect();
    DecomposedRoot {
        problem: *problem,
        leading: branch.omega(degree).conj(),
        classes,
    }
}

/// The sum-rule root `δ_{N,2} - Σ_j x_j` in decomposed form.
///
/// Summing over branches, `Σ_j ω_j^q` vanishes unless `q = 0`, so only
/// class 0 survives, with coefficient `t`; the leading terms cancel
/// against `δ_{N,2}`. For `N = 5` this is `t · ₄F₃(1/5, 2/5, 3/5, 4/5;
/// 1/2, 3/4, 5/4; 3125t⁴/256)`.
pub fn decompose_small_root(problem: &TrinomialProblem) -> DecomposedRoot {
    let degree = problem.degree();
    let t = problem.t();
    let z = class_argument(degree, t);
    let classes = (0..degree - 1)
        .map(|q| ClassTerm {
            q,
            coefficient: if q == 0 { t } else { Complex64::zero() },
            spec: class_spec(degree, q, z),
        })
        .collect();
    DecomposedRoot {
        problem: *problem,
        leading: Complex64::zero(),
        classes,
    }
}

/// Evaluates `leading + Σ_q coefficient_q · pFq_q` in ascending `q`.
pub fn evaluate_decomposition(d: &DecomposedRoot, config: &SolverConfig) -> Result<SeriesResult> {
    config.validate()?;
    let n_classes = d.classes.len().max(1) as f64;
    let mut value = d.leading;
    let mut tail = 0.0;
    let mut terms_used = 0;
    for class in &d.classes {
        if class.coefficient.is_zero() {
            continue;
        }
        let weight = class.coefficient.norm();
        let tol = config.tol / (n_classes * weight.max(1.0));
        let r = pfq(&class.spec, tol, config.max_terms).map_err(|e| Error::InClass {
            class: class.q as usize,
            source: Box::new(e),
        })?;
        value += class.coefficient * r.value;
        tail += weight * r.tail_estimate;
        terms_used = terms_used.max(r.terms_used);
    }
    let res = residual(&d.problem, value);
    if res > config.residual_tol {
        return Err(Error::Residual {
            index: 0,
            residual: res,
            tol: config.residual_tol,
        });
    }
    Ok(SeriesResult {
        value,
        terms_used,
        tail_estimate: tail,
        converged: true,
    })
}

/// All `N` roots from the decomposed form: each branch, then the sum-rule
/// root evaluated through its own single-class decomposition.
///
/// Applies the same radius margin as the Lagrange series.
pub fn all_roots_decomposition(
    problem: &TrinomialProblem,
    config: &SolverConfig,
) -> Result<(RootSet, Vec<SeriesResult>)> {
    config.validate()?;
    check_radius(problem.degree(), problem.t(), config)?;
    let degree = problem.degree();
    let mut roots = Vec::with_capacity(degree as usize);
    let mut provenance = Vec::with_capacity(degree as usize);
    let mut stats = Vec::with_capacity(degree as usize);
    for branch in problem.branches() {
        let r = evaluate_decomposition(&decompose(problem, branch), config)?;
        roots.push(r.value);
        provenance.push(Provenance::SeriesBranch(branch.get()));
        stats.push(r);
    }
    let small = evaluate_decomposition(&decompose_small_root(problem), config)?;
    roots.push(small.value);
    provenance.push(Provenance::SumRule);
    stats.push(small);
    Ok((RootSet::new(degree, problem.t(), roots, provenance), stats))
}

/// The even-`n` and odd-`n` parts of the `N = 3` series on the `ω = -1` branch.
///
/// With `c_n = Γ(3n/2+1) / [Γ(n+2) Γ(n/2+1)]`:
///
/// ```text
/// even = -t/2 · Σ_m t^(2m)   c_(2m)
/// odd  =  t/2 · Σ_m t^(2m+1) c_(2m+1)
/// ```
///
/// so that the root is `-1 + even + odd`.
pub fn parity_split_cubic(
    t: Complex64,
    config: &SolverConfig,
) -> Result<(SeriesResult, SeriesResult)> {
    config.validate()?;
    check_radius(3, t, config)?;
    let ratio_floor = (t.norm() / convergence_radius(3)).powi(2);
    // the odd terms carry (-1)^(2m+1) = -1 from ω, which flips the sign of -t/2
    let even_scale = -t / 2.0;
    let odd_scale = t / 2.0;
    let half_sum = |scale: Complex64, offset: u64| -> Result<SeriesResult> {
        if scale.is_zero() {
            return Ok(SeriesResult::exact(Complex64::zero(), 1));
        }
        let abs_scale = scale.norm();
        let inner = sum_series(
            |m| scaled_coefficient(3, t, 2 * m + offset),
            ratio_floor,
            config.tol / abs_scale,
            config.max_terms,
        )?;
        Ok(SeriesResult {
            value: scale * inner.value,
            terms_used: inner.terms_used,
            tail_estimate: inner.tail_estimate * abs_scale,
            converged: true,
        })
    };
    Ok((half_sum(even_scale, 0)?, half_sum(odd_scale, 1)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn quadratic_class() {
        let p = TrinomialProblem::real(2, 0.1).unwrap();
        let d = decompose(&p, BranchIndex::new(0, 2).unwrap());
        assert_eq!(d.leading, c(1.0));
        assert_eq!(d.classes.len(), 1);
        let class = &d.classes[0];
        assert_eq!(class.spec.upper(), &[r(1, 2), r(1, 1)]);
        assert_eq!(class.spec.lower(), &[r(2, 1)]);
        assert!((class.spec.argument() - c(0.4)).norm() < 1e-15);
        assert!((class.coefficient - c(-0.1)).norm() < 1e-15);
    }

    #[test]
    fn cubic_classes() {
        let t = 0.2;
        let p = TrinomialProblem::real(3, t).unwrap();
        let d = decompose(&p, BranchIndex::new(0, 3).unwrap());
        assert_eq!(d.leading, c(-1.0));
        assert_eq!(d.classes[0].spec.upper(), &[r(1, 3), r(2, 3)]);
        assert_eq!(d.classes[0].spec.lower(), &[r(3, 2)]);
        assert_eq!(d.classes[1].spec.upper(), &[r(5, 6), r(1, 1), r(7, 6)]);
        assert_eq!(d.classes[1].spec.lower(), &[r(3, 2), r(2, 1)]);
        assert!((d.classes[0].coefficient - c(-t / 2.0)).norm() < 1e-15);
        assert!((d.classes[1].coefficient - c(3.0 * t * t / 8.0)).norm() < 1e-15);
        let z = 27.0 * t * t / 4.0;
        assert!((d.classes[0].spec.argument() - c(z)).norm() < 1e-15);
    }

    #[test]
    fn quintic_small_root_class() {
        let p = TrinomialProblem::real(5, 0.1).unwrap();
        let d = decompose_small_root(&p);
        assert_eq!(d.classes.len(), 4);
        let class = &d.classes[0];
        let mut upper = class.spec.upper().to_vec();
        upper.sort();
        let mut lower = class.spec.lower().to_vec();
        lower.sort();
        assert_eq!(upper, vec![r(1, 5), r(2, 5), r(3, 5), r(4, 5)]);
        assert_eq!(lower, vec![r(1, 2), r(3, 4), r(5, 4)]);
        assert_eq!(class.coefficient, c(0.1));
        assert!((class.spec.argument() - c(3125.0e-4 / 256.0)).norm() < 1e-16);
        assert!(d.classes[1..].iter().all(|c| c.coefficient.is_zero()));
        assert_eq!(argument_scale_exact(5), Some(r(3125, 256)));
    }

    #[test]
    fn parameter_count_bound() {
        for degree in 2..=10u32 {
            for q in 0..degree - 1 {
                let s = class_spec(degree, q, c(0.0));
                assert!(s.upper().len() <= degree as usize + 1);
                assert!(s.lower().len() <= degree as usize);
            }
        }
    }

    #[test]
    fn argument_matches_literal_expression() {
        let t = Complex64::new(0.07, -0.03);
        for degree in 2..=8u32 {
            let p = TrinomialProblem::new(degree, t).unwrap();
            for b in p.branches() {
                let d = decompose(&p, b);
                let omega = b.omega(degree);
                let literal = (t * omega / f64::from(degree - 1)).powu(degree - 1)
                    * f64::from(degree).powi(degree as i32);
                for class in &d.classes {
                    let z = class.spec.argument();
                    assert!((z - literal).norm() <= 1e-13 * literal.norm());
                }
            }
        }
    }

    #[test]
    fn evaluate_examples() {
        let config = SolverConfig::default();
        let p = TrinomialProblem::real(2, 0.1875).unwrap();
        let v = evaluate_decomposition(&decompose(&p, BranchIndex::new(0, 2).unwrap()), &config)
            .unwrap();
        assert!((v.value - c(0.75)).norm() < 1e-12);

        for degree in 2..=7 {
            let p = TrinomialProblem::real(degree, 0.0).unwrap();
            for b in p.branches() {
                let v = evaluate_decomposition(&decompose(&p, b), &config).unwrap();
                assert_eq!(v.value, b.omega(degree).conj());
            }
        }
    }

    #[test]
    fn all_roots_from_decomposition() {
        let config = SolverConfig::default();
        let p = TrinomialProblem::real(4, 0.2).unwrap();
        let (set, stats) = all_roots_decomposition(&p, &config).unwrap();
        assert_eq!(set.len(), 4);
        assert_eq!(stats.len(), 4);
        assert_eq!(set.provenance[3], Provenance::SumRule);
        assert!(set.max_residual() <= 1e-12);
        assert!(set.sum().norm() <= 1e-12);

        let outside = TrinomialProblem::real(4, convergence_radius(4)).unwrap();
        assert!(matches!(
            all_roots_decomposition(&outside, &config),
            Err(Error::OutsideRadius { .. })
        ));
    }

    #[test]
    fn class_error_is_annotated() {
        let config = SolverConfig::default();
        // beyond the disk: z = 4t > 1
        let p = TrinomialProblem::real(2, 0.3).unwrap();
        match evaluate_decomposition(&decompose(&p, BranchIndex::new(0, 2).unwrap()), &config) {
            Err(Error::InClass { class: 0, source }) => {
                assert!(matches!(*source, Error::Divergence { .. }))
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parity_split_examples() {
        let config = SolverConfig::default();
        let (even, odd) = parity_split_cubic(c(0.0), &config).unwrap();
        assert_eq!(even.value, c(0.0));
        assert_eq!(odd.value, c(0.0));

        let (even, odd) = parity_split_cubic(c(0.3), &config).unwrap();
        let root = c(-1.0) + even.value + odd.value;
        assert!((root - c(-1.125_418_782_756_626)).norm() < 1e-10);

        assert!(matches!(
            parity_split_cubic(c(0.39), &config),
            Err(Error::OutsideRadius { .. })
        ));
    }
}
