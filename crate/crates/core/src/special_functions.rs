//! Complex log-gamma and a generalized hypergeometric series evaluator.
//!
//! `log_gamma` uses the Stirling asymptotic series after shifting the
//! argument to `|z| >= 15` with the recurrence `ln Γ(z) = ln Γ(z+1) - ln z`,
//! and the reflection formula for `Re(z) < 1/2`.
//!
//! `pfq` sums
//!
//! ```text
//! pFq(a; b; z) = Σ_k  ∏(a_i)_k / ∏(b_j)_k · z^k / k!
//! ```
//!
//! with the term-ratio recurrence and a geometric bound on the tail.

use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt::{self, Write as _};

use num_complex::Complex64;
use num_rational::Ratio;
// Redundant when a std-linking crate (e.g. a dev-dependency) is in the graph.
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Exact rational hypergeometric parameter.
pub type Rational = Ratio<i64>;

const LN_PI: f64 = 1.144_729_885_849_400_2;
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_7;

/// `B_{2k} / (2k (2k-1))` for `k = 1..=8`.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// Below this modulus the argument is shifted up before applying Stirling.
const STIRLING_MIN_MODULUS: f64 = 15.0;

/// Principal log-gamma: `exp(log_gamma(z)) = Γ(z)`.
///
/// For `Re(z) >= 1/2` this is the branch analytic in the right half plane
/// and real on the positive axis.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::InvalidInput("log_gamma argument must be finite"));
    }
    if z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0 {
        return Err(Error::Pole { re: z.re });
    }
    if z.re < 0.5 {
        // Γ(z) Γ(1-z) = π / sin(πz)
        let s = (z * PI).sin();
        return Ok(Complex64::new(LN_PI, 0.0)
            - s.ln()
            - log_gamma_right(Complex64::new(1.0, 0.0) - z));
    }
    Ok(log_gamma_right(z))
}

fn log_gamma_right(z: Complex64) -> Complex64 {
    let mut w = z;
    let mut shift = Complex64::zero();
    while w.norm() < STIRLING_MIN_MODULUS {
        shift += w.ln();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::zero();
    for &c in STIRLING.iter().rev() {
        series = series * inv2 + c;
    }
    (w - 0.5) * w.ln() - w + HALF_LN_2PI + series * inv - shift
}

/// Real log-gamma for `x > 0`.
pub(crate) fn ln_gamma_pos(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    log_gamma_right_real(x)
}

fn log_gamma_right_real(x: f64) -> f64 {
    if x >= 0.5 {
        log_gamma_right(Complex64::new(x, 0.0)).re
    } else {
        // Γ(x) = Γ(x+1)/x keeps the argument on the right half line.
        log_gamma_right(Complex64::new(x + 1.0, 0.0)).re - x.ln()
    }
}

/// `ln[Γ(Nn/(N-1)+1) / (Γ(n+2) Γ(n/(N-1)+1))]`, the log-magnitude of the
/// `n`-th coefficient of the Lagrange series. Finite for every `n`.
pub fn ln_gamma_ratio_term(degree: u32, n: u64) -> f64 {
    assert!(degree >= 2, "degree must be at least 2");
    let m = f64::from(degree - 1);
    let nf = n as f64;
    let big = (f64::from(degree) * nf) / m;
    ln_gamma_pos(big + 1.0) - ln_gamma_pos(nf + 2.0) - ln_gamma_pos(nf / m + 1.0)
}

/// `Γ(Nn/(N-1)+1) / (Γ(n+2) Γ(n/(N-1)+1))`.
///
/// Each gamma is taken in log space, so intermediate values never
/// overflow; the ratio itself grows like `radius^-n` and leaves the `f64`
/// range for large `n` (around `n = 510` when `N = 2`). Use
/// [`ln_gamma_ratio_term`] there.
pub fn gamma_ratio_term(degree: u32, n: u64) -> f64 {
    ln_gamma_ratio_term(degree, n).exp()
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn is_nonpositive_integer(r: &Rational) -> bool {
    r.is_integer() && *r.numer() <= 0
}

/// Parameter lists and argument of one `pFq`.
#[derive(Debug, Clone, PartialEq)]
pub struct HypergeometricSpec {
    upper: Vec<Rational>,
    lower: Vec<Rational>,
    argument: Complex64,
}

impl HypergeometricSpec {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>, argument: Complex64) -> Result<Self> {
        if lower.iter().any(is_nonpositive_integer) {
            return Err(Error::InvalidInput(
                "lower hypergeometric parameter is zero or a negative integer",
            ));
        }
        Ok(HypergeometricSpec {
            upper,
            lower,
            argument,
        })
    }

    pub fn upper(&self) -> &[Rational] {
        &self.upper
    }

    pub fn lower(&self) -> &[Rational] {
        &self.lower
    }

    pub fn argument(&self) -> Complex64 {
        self.argument
    }

    pub fn with_argument(&self, argument: Complex64) -> Self {
        HypergeometricSpec {
            argument,
            ..self.clone()
        }
    }

    /// Removes parameters that appear in both lists, one pair at a time,
    /// and sorts what remains.
    pub fn cancelled(&self) -> Self {
        let mut upper = Vec::with_capacity(self.upper.len());
        let mut lower = self.lower.clone();
        for a in &self.upper {
            if let Some(pos) = lower.iter().position(|b| b == a) {
                lower.remove(pos);
            } else {
                upper.push(*a);
            }
        }
        upper.sort();
        lower.sort();
        HypergeometricSpec {
            upper,
            lower,
            argument: self.argument,
        }
    }

    /// True when an upper parameter is a nonpositive integer, so the series is a polynomial.
    pub fn terminates(&self) -> bool {
        self.upper.iter().any(is_nonpositive_integer)
    }

    /// `"₂F₁"`-style name.
    pub fn label(&self) -> String {
        let mut s = String::new();
        push_subscript(&mut s, self.upper.len());
        s.push('F');
        push_subscript(&mut s, self.lower.len());
        s
    }

    /// Renders `pFq(a..; b..; arg)` with a caller-supplied argument text.
    pub fn render(&self, argument: &str) -> String {
        let mut s = self.label();
        s.push('(');
        write_list(&mut s, &self.upper);
        s.push_str("; ");
        write_list(&mut s, &self.lower);
        let _ = write!(s, "; {argument})");
        s
    }

    /// Iterator over the series terms `term_0 = 1, term_1, ...`.
    pub fn terms(&self) -> PfqTerms {
        PfqTerms {
            upper: self.upper.iter().map(rational_to_f64).collect(),
            lower: self.lower.iter().map(rational_to_f64).collect(),
            z: self.argument,
            k: 0,
            term: Some(Complex64::new(1.0, 0.0)),
        }
    }
}

impl fmt::Display for HypergeometricSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut arg = String::new();
        let _ = write!(arg, "{}", self.argument);
        f.write_str(&self.render(&arg))
    }
}

fn push_subscript(s: &mut String, n: usize) {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    let mut buf = [0u8; 20];
    let mut i = buf.len();
    let mut n = n;
    loop {
        i -= 1;
        buf[i] = (n % 10) as u8;
        n /= 10;
        if n == 0 {
            break;
        }
    }
    for &d in &buf[i..] {
        s.push(DIGITS[d as usize]);
    }
}

fn write_list(s: &mut String, params: &[Rational]) {
    for (i, p) in params.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "{p}");
    }
}

/// Terms of a `pFq` series produced by the ratio recurrence.
///
/// Ends after the last nonzero term when the series terminates.
#[derive(Debug, Clone)]
pub struct PfqTerms {
    upper: Vec<f64>,
    lower: Vec<f64>,
    z: Complex64,
    k: u64,
    term: Option<Complex64>,
}

impl Iterator for PfqTerms {
    type Item = Complex64;

    fn next(&mut self) -> Option<Complex64> {
        let current = self.term?;
        let k = self.k as f64;
        let mut ratio = 1.0;
        let mut hit_zero = false;
        for &a in &self.upper {
            let f = a + k;
            if f == 0.0 {
                hit_zero = true;
            }
            ratio *= f;
        }
        for &b in &self.lower {
            ratio /= b + k;
        }
        ratio /= k + 1.0;
        self.term = if hit_zero || self.z.is_zero() {
            None
        } else {
            Some(current * self.z * ratio)
        };
        self.k += 1;
        Some(current)
    }
}

/// Value of a truncated series with convergence diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: Complex64,
    pub terms_used: usize,
    pub tail_estimate: f64,
    pub converged: bool,
}

impl SeriesResult {
    pub(crate) fn exact(value: Complex64, terms_used: usize) -> Self {
        SeriesResult {
            value,
            terms_used,
            tail_estimate: 0.0,
            converged: true,
        }
    }
}

/// Sums a generalized hypergeometric series.
///
/// Stops once the geometric tail bound `|term_k| r / (1 - r)` drops to
/// `tol`, where `r` is the observed term ratio, floored at `|z|` when
/// `p = q + 1` since the ratio approaches `|z|` from below. Terminating
/// series are summed exactly.
pub fn pfq(spec: &HypergeometricSpec, tol: f64, max_terms: usize) -> Result<SeriesResult> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidInput("tolerance must be positive"));
    }
    if max_terms == 0 {
        return Err(Error::InvalidInput("max_terms must be positive"));
    }
    let z = spec.argument;
    if z.is_zero() {
        return Ok(SeriesResult::exact(Complex64::new(1.0, 0.0), 1));
    }
    let p = spec.upper.len();
    let q = spec.lower.len();
    let abs_z = z.norm();
    let terminating = spec.terminates();
    if !terminating {
        if p > q + 1 {
            return Err(Error::Divergence { abs_z });
        }
        if p == q + 1 {
            let excess: f64 = spec.lower.iter().map(rational_to_f64).sum::<f64>()
                - spec.upper.iter().map(rational_to_f64).sum::<f64>();
            if abs_z > 1.0 || (abs_z == 1.0 && (excess.is_nan() || excess <= 0.0)) {
                return Err(Error::Divergence { abs_z });
            }
        }
    }
    let ratio_floor = if p == q + 1 { abs_z } else { 0.0 };
    // Once k passes every negative parameter the term ratio is monotone
    // in k, so the observed ratio is a usable bound.
    let settle_k = spec
        .upper
        .iter()
        .chain(spec.lower.iter())
        .map(|r| -rational_to_f64(r))
        .fold(0.0, f64::max)
        .ceil() as usize;

    let mut terms = spec.terms();
    let mut sum = terms.next().expect("first term is always present");
    let mut prev_abs = sum.norm();
    let mut terms_used = 1usize;
    let mut tail = f64::INFINITY;
    loop {
        let Some(term) = terms.next() else {
            return Ok(SeriesResult::exact(sum, terms_used));
        };
        if terms_used >= max_terms {
            return Err(Error::NonConvergence {
                terms_used,
                tail_estimate: tail,
            });
        }
        sum += term;
        terms_used += 1;
        let abs = term.norm();
        let observed = if prev_abs > 0.0 {
            abs / prev_abs
        } else {
            f64::INFINITY
        };
        let r = observed.max(ratio_floor);
        tail = if r < 1.0 {
            abs * r / (1.0 - r)
        } else {
            abs * (max_terms - terms_used).max(1) as f64
        };
        if r < 1.0 && terms_used > settle_k && tail <= tol {
            return Ok(SeriesResult {
                value: sum,
                terms_used,
                tail_estimate: tail,
                converged: true,
            });
        }
        prev_abs = abs;
    }
}
