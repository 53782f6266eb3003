//! Roots of the reduced trinomial `x^N - x + t = 0`.
//!
//! The primary route sums the Lagrange-inversion series for each branch
//! (one per `(N-1)`-st root of unity) and completes the root set with the
//! Vieta sum rule. The same series is also split by residue class into a
//! finite sum of generalized hypergeometric functions, and the degrees with
//! elementary closed forms (`N = 2, 3`, and the small root of `N = 5`) are
//! provided separately. A Durand–Kerner solver that never touches a series
//! serves as ground truth.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
#![deny(rust_2018_idioms)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod closed_forms;
pub mod config;
pub mod decomposition;
pub mod error;
pub mod lagrange_series;
pub mod oracle;
pub mod roots;
pub mod special_functions;

pub use num_complex::Complex64;

pub use closed_forms::{
    cubic_roots, cubic_trig_state, quadratic_roots, quintic_small_root, reciprocal_roots,
    CubicTrigState,
};
pub use config::SolverConfig;
pub use decomposition::{
    all_roots_decomposition, decompose, decompose_small_root, evaluate_decomposition,
    parity_split_cubic, ClassTerm, DecomposedRoot,
};
pub use error::{Error, Result};
pub use lagrange_series::{
    all_roots_series, all_roots_series_detailed, convergence_radius, residual, series_root,
    series_term, sum_rule_constant, sum_rule_self_check, BranchIndex, TrinomialProblem,
};
pub use oracle::{match_roots, oracle_roots, OracleConfig, RootMatching};
pub use roots::{Provenance, RootSet};
pub use special_functions::{
    gamma_ratio_term, ln_gamma_ratio_term, log_gamma, pfq, HypergeometricSpec, PfqTerms, Rational,
    SeriesResult,
};
