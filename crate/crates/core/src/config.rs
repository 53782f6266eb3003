use crate::error::{Error, Result};

/// Tolerances and caps shared by every series-based algorithm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Absolute bound on the estimated truncation tail.
    pub tol: f64,
    /// Maximum accepted `|x^N - x + t|`.
    pub residual_tol: f64,
    pub max_terms: usize,
    /// Series are refused for `|t| >= radius * (1 - radius_margin)`.
    pub radius_margin: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            tol: 1e-12,
            residual_tol: 1e-9,
            max_terms: 100_000,
            radius_margin: 0.02,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !positive(self.tol) || !positive(self.residual_tol) {
            return Err(Error::InvalidInput(
                "tolerances must be positive and finite",
            ));
        }
        if self.max_terms == 0 {
            return Err(Error::InvalidInput("max_terms must be positive"));
        }
        if !positive(self.radius_margin) || self.radius_margin >= 1.0 {
            return Err(Error::InvalidInput("radius_margin must lie in (0, 1)"));
        }
        Ok(())
    }
}
