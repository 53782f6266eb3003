use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

/// Roots closer than this are reported as one repeated root.
pub const MULTIPLICITY_RADIUS: f64 = 1e-7;

/// Which algorithm produced a root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Lagrange series on branch `j`.
    SeriesBranch(u32),
    /// Completed from the Vieta sum of the other roots.
    SumRule,
    ClosedForm,
    Oracle,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::SeriesBranch(j) => write!(f, "series-branch-{j}"),
            Provenance::SumRule => f.write_str("sum-rule"),
            Provenance::ClosedForm => f.write_str("closed-form"),
            Provenance::Oracle => f.write_str("oracle"),
        }
    }
}

/// All `N` roots of one problem, each with its residual and origin.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    pub residuals: Vec<f64>,
    pub provenance: Vec<Provenance>,
}

impl RootSet {
    /// Builds a root set, computing residuals against `x^degree - x + t`.
    pub fn new(
        degree: u32,
        t: Complex64,
        roots: Vec<Complex64>,
        provenance: Vec<Provenance>,
    ) -> Self {
        debug_assert_eq!(roots.len(), provenance.len());
        let residuals = roots
            .iter()
            .map(|&x| crate::lagrange_series::trinomial_residual(degree, t, x))
            .collect();
        RootSet {
            roots,
            residuals,
            provenance,
        }
    }

    /// Builds a root set with externally computed residuals.
    pub fn with_residuals(
        roots: Vec<Complex64>,
        residuals: Vec<f64>,
        provenance: Vec<Provenance>,
    ) -> Self {
        debug_assert_eq!(roots.len(), residuals.len());
        debug_assert_eq!(roots.len(), provenance.len());
        RootSet {
            roots,
            residuals,
            provenance,
        }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    pub fn sum(&self) -> Complex64 {
        self.roots.iter().sum()
    }

    pub fn product(&self) -> Complex64 {
        self.roots.iter().product()
    }

    /// Number of roots (including `i` itself) within [`MULTIPLICITY_RADIUS`] of root `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        let x = self.roots[i];
        self.roots
            .iter()
            .filter(|&&y| (y - x).norm() <= MULTIPLICITY_RADIUS)
            .count()
    }
}
