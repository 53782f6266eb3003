use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Gamma evaluated at zero or a negative integer.
    Pole {
        re: f64,
    },
    /// `p = q + 1` series evaluated outside its disk of convergence, or `p > q + 1`.
    Divergence {
        abs_z: f64,
    },
    /// Term cap reached before the tail bound fell below tolerance.
    NonConvergence {
        terms_used: usize,
        tail_estimate: f64,
    },
    /// `|t|` too close to (or beyond) the convergence radius of the series.
    OutsideRadius {
        abs_t: f64,
        limit: f64,
    },
    /// A computed root fails the residual check.
    Residual {
        index: usize,
        residual: f64,
        tol: f64,
    },
    /// A reduced-problem root is zero, so the reciprocal root is at infinity.
    ZeroRoot {
        index: usize,
    },
    /// Durand–Kerner iteration failed; carries the best iterate.
    OracleNonConvergence {
        iterations: usize,
        max_residual: f64,
        best: alloc::vec::Vec<num_complex::Complex64>,
    },
    SizeMismatch {
        left: usize,
        right: usize,
    },
    /// Error from evaluating one residue class of a decomposition.
    InClass {
        class: usize,
        source: alloc::boxed::Box<Error>,
    },
    InvalidInput(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Pole { re } => write!(f, "gamma pole at z = {re}"),
            Error::Divergence { abs_z } => {
                write!(f, "hypergeometric series diverges at |z| = {abs_z}")
            }
            Error::NonConvergence {
                terms_used,
                tail_estimate,
            } => write!(
                f,
                "series did not converge after {terms_used} terms (tail estimate {tail_estimate:e})"
            ),
            Error::OutsideRadius { abs_t, limit } => {
                write!(f, "|t| = {abs_t} is outside the admissible radius {limit}")
            }
            Error::Residual {
                index,
                residual,
                tol,
            } => write!(f, "root {index} has residual {residual:e} > {tol:e}"),
            Error::ZeroRoot { index } => write!(
                f,
                "root {index} of the reduced problem is zero; the reciprocal root is at infinity"
            ),
            Error::OracleNonConvergence {
                iterations,
                max_residual,
                ..
            } => write!(
                f,
                "oracle did not converge in {iterations} iterations (max residual {max_residual:e})"
            ),
            Error::SizeMismatch { left, right } => {
                write!(f, "root sets differ in size ({left} vs {right})")
            }
            Error::InClass { class, source } => write!(f, "residue class q = {class}: {source}"),
            Error::InvalidInput(msg) => f.write_str(msg),
        }
    }
}

impl core::error::Error for Error {}
