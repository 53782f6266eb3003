//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use trinomial_core::closed_forms::reciprocal_residual;
use trinomial_core::oracle::match_points;
use trinomial_core::*;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
}

fn quadratic_formula(t: f64) -> [Complex64; 2] {
    let d = c(1.0 - 4.0 * t, 0.0).sqrt();
    [(d + 1.0) / 2.0, (-d + 1.0) / 2.0]
}

fn max_matched(a: &[Complex64], b: &[Complex64]) -> f64 {
    match_points(a, b).expect("equal sizes").max_distance
}

/// 1. Quadratic recovery.
fn quadratic_recovery() -> Check {
    const TOL: f64 = 1e-10;
    let config = SolverConfig::default();
    let mut worst: f64 = 0.0;
    for t in linspace(-0.24, 0.24, 50) {
        let expected = quadratic_formula(t);
        let problem = TrinomialProblem::real(2, t).map_err(|e| e.to_string())?;

        let series =
            all_roots_series(&problem, &config).map_err(|e| format!("series t={t}: {e}"))?;
        let d_series = max_matched(&series.roots, &expected);

        let big = evaluate_decomposition(
            &decompose(&problem, BranchIndex::new(0, 2).unwrap()),
            &config,
        )
        .map_err(|e| format!("decomposition t={t}: {e}"))?;
        let small = evaluate_decomposition(&decompose_small_root(&problem), &config)
            .map_err(|e| format!("decomposition t={t}: {e}"))?;
        let d_decomp = max_matched(&[big.value, small.value], &expected);

        let closed = quadratic_roots(c(t, 0.0));
        let d_closed = max_matched(&closed.roots, &expected);

        for (name, d) in [
            ("series", d_series),
            ("decomposition", d_decomp),
            ("closed form", d_closed),
        ] {
            ensure(d <= TOL, || format!("{name} at t={t}: {d:e} > {TOL:e}"))?;
            worst = worst.max(d);
        }
    }
    Ok(format!(
        "50 t in [-0.24, 0.24], three methods, worst {worst:.2e} <= {TOL:e}"
    ))
}

/// 2. Cubic trigonometric forms, direct and continued.
fn cubic_trig_forms() -> Check {
    const TOL: f64 = 1e-9;
    let oracle_cfg = OracleConfig::default();
    let mut worst: f64 = 0.0;
    for t in linspace(0.0, 0.38, 50) {
        let closed = cubic_roots(c(t, 0.0));
        let oracle = oracle_roots(&TrinomialProblem::real(3, t).unwrap(), &oracle_cfg)
            .map_err(|e| format!("oracle t={t}: {e}"))?;
        let d = match_roots(&closed, &oracle).unwrap().max_distance;
        ensure(d <= TOL, || format!("direct t={t}: {d:e}"))?;
        worst = worst.max(d);
    }
    let tc = convergence_radius(3);
    for i in 1..=20 {
        let t = tc + (1.0 - tc) * f64::from(i) / 20.0;
        ensure(cubic_trig_state(c(t, 0.0)).continued, || {
            format!("t={t} not continued")
        })?;
        let closed = cubic_roots(c(t, 0.0));
        let oracle = oracle_roots(&TrinomialProblem::real(3, t).unwrap(), &oracle_cfg)
            .map_err(|e| format!("oracle t={t}: {e}"))?;
        let d = match_roots(&closed, &oracle).unwrap().max_distance;
        ensure(d <= TOL, || format!("continued t={t}: {d:e}"))?;
        worst = worst.max(d);
    }
    Ok(format!(
        "50 direct + 20 continued t, worst {worst:.2e} <= {TOL:e}"
    ))
}

/// 3. Quintic small-root branch.
fn quintic_branch() -> Check {
    let config = SolverConfig::default();
    let mut worst_res: f64 = 0.0;
    let mut worst_dist: f64 = 0.0;
    for t in linspace(0.0, 0.5, 30) {
        let x = quintic_small_root(c(t, 0.0), &config).map_err(|e| format!("t={t}: {e}"))?;
        let problem = TrinomialProblem::real(5, t).unwrap();
        let res = residual(&problem, x.value);
        let oracle = oracle_roots(&problem, &OracleConfig::default()).map_err(|e| e.to_string())?;
        let dist = oracle
            .roots
            .iter()
            .map(|r| (r - x.value).norm())
            .fold(f64::INFINITY, f64::min);
        ensure(res <= 1e-9, || format!("t={t}: residual {res:e}"))?;
        ensure(dist <= 1e-8, || format!("t={t}: oracle distance {dist:e}"))?;
        worst_res = worst_res.max(res);
        worst_dist = worst_dist.max(dist);
    }
    Ok(format!(
        "30 t in [0, 0.5], residual {worst_res:.2e} <= 1e-9, oracle distance {worst_dist:.2e} <= 1e-8"
    ))
}

/// 4. General series against the oracle, N = 2..8.
fn general_series() -> Check {
    let config = SolverConfig::default();
    let mut worst: f64 = 0.0;
    let mut worst_vieta: f64 = 0.0;
    for degree in 2..=8u32 {
        let limit = 0.8
            * (f64::from(degree) - 1.0)
            * f64::from(degree).powf(-f64::from(degree) / (f64::from(degree) - 1.0));
        for k in 0..10 {
            let modulus = limit * f64::from(k + 1) / 10.0;
            let phase = if k % 2 == 0 { 0.0 } else { 0.37 * f64::from(k) };
            let t = Complex64::from_polar(modulus, phase);
            let problem = TrinomialProblem::new(degree, t).unwrap();
            let series = all_roots_series(&problem, &config)
                .map_err(|e| format!("N={degree} t={t}: {e}"))?;
            let oracle =
                oracle_roots(&problem, &OracleConfig::default()).map_err(|e| e.to_string())?;
            let d = match_roots(&series, &oracle).unwrap().max_distance;
            ensure(d <= 1e-8, || format!("N={degree} t={t}: {d:e}"))?;
            let sum_err = (series.sum() - sum_rule_constant(degree)).norm();
            let sign = if degree % 2 == 0 { 1.0 } else { -1.0 };
            let prod_err = (series.product() - t * sign).norm();
            ensure(sum_err <= 1e-9 && prod_err <= 1e-9, || {
                format!("N={degree} t={t}: Vieta sum {sum_err:e} product {prod_err:e}")
            })?;
            worst = worst.max(d);
            worst_vieta = worst_vieta.max(sum_err).max(prod_err);
        }
    }
    Ok(format!(
        "N=2..8 x 10 t, match {worst:.2e} <= 1e-8, Vieta {worst_vieta:.2e} <= 1e-9"
    ))
}

/// 5. Decomposition identity, term level and whole value.
fn decomposition_identity() -> Check {
    let config = SolverConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7269_6e6f);
    let mut worst_term: f64 = 0.0;
    let mut worst_value: f64 = 0.0;
    for degree in 2..=6u32 {
        let tc = convergence_radius(degree);
        for _ in 0..20 {
            let t = Complex64::from_polar(
                rng.gen_range(0.0..0.5 * tc),
                rng.gen_range(0.0..std::f64::consts::TAU),
            );
            let problem = TrinomialProblem::new(degree, t).unwrap();
            let prefactor = -t / f64::from(degree - 1);
            for b in problem.branches() {
                let d = decompose(&problem, b);
                for class in &d.classes {
                    for (m, term) in class.spec.terms().take(11).enumerate() {
                        let n = u64::from(class.q) + m as u64 * u64::from(degree - 1);
                        let direct = prefactor * series_term(&problem, b, n);
                        let rel = (class.coefficient * term - direct).norm() / direct.norm();
                        ensure(rel <= 1e-10, || {
                            format!("N={degree} q={} m={m}: {rel:e}", class.q)
                        })?;
                        worst_term = worst_term.max(rel);
                    }
                }
                let split = evaluate_decomposition(&d, &config).map_err(|e| e.to_string())?;
                let direct = series_root(&problem, b, &config).map_err(|e| e.to_string())?;
                let diff = (split.value - direct.value).norm();
                ensure(diff <= 1e-9, || format!("N={degree} t={t}: {diff:e}"))?;
                worst_value = worst_value.max(diff);
            }
        }
    }
    Ok(format!(
        "N=2..6, m<=10: term rel {worst_term:.2e} <= 1e-10; value {worst_value:.2e} <= 1e-9"
    ))
}

/// 6. Convergence radius and term behaviour at ±5%.
fn radius_behaviour() -> Check {
    let expected = [
        (2u32, 0.25),
        (3, 2.0 / 27f64.sqrt()),
        (5, 4.0 * 5f64.powf(-1.25)),
    ];
    for (degree, value) in expected {
        let tc = convergence_radius(degree);
        ensure((tc - value).abs() <= 1e-15, || {
            format!("N={degree}: radius {tc} vs {value}")
        })?;
        let b = BranchIndex::new(degree - 2, degree).unwrap();
        let inside = TrinomialProblem::real(degree, 0.95 * tc).unwrap();
        let outside = TrinomialProblem::real(degree, 1.05 * tc).unwrap();
        let mag = |p: &TrinomialProblem, n| series_term(p, b, n).norm();
        for n in 200..220u64 {
            ensure(mag(&inside, n + 1) < mag(&inside, n), || {
                format!("N={degree} n={n}: no decay inside")
            })?;
            ensure(mag(&outside, n + 1) >= mag(&outside, n), || {
                format!("N={degree} n={n}: no growth outside")
            })?;
        }
    }
    Ok(
        "radii 0.25, 2/sqrt(27), 4*5^(-5/4); decay at 0.95 t_c, growth at 1.05 t_c (n=200..220)"
            .into(),
    )
}

/// 7. Reciprocal trinomial.
fn reciprocal_trinomial() -> Check {
    let config = SolverConfig::default();
    let mut worst_res: f64 = 0.0;
    let mut worst_back: f64 = 0.0;
    for degree in [2u32, 3, 5] {
        for k in 0..10 {
            let modulus = 2.0 + 1.5 * f64::from(k);
            let phase = if k < 5 {
                std::f64::consts::PI * f64::from(k % 2)
            } else {
                0.6 * f64::from(k)
            };
            let a = Complex64::from_polar(modulus, phase);
            let ys = reciprocal_roots(degree, a, &config)
                .map_err(|e| format!("N={degree} a={a}: {e}"))?;
            let scale = modulus.powi(degree as i32).max(1.0);
            for y in &ys.roots {
                let res = reciprocal_residual(degree, a, *y) / scale;
                ensure(res <= 1e-8, || {
                    format!("N={degree} a={a}: scaled residual {res:e}")
                })?;
                worst_res = worst_res.max(res);
            }
            // y -> 1/y recovers the reduced roots, and inverting again recovers y
            let xs: Vec<Complex64> = ys.roots.iter().map(|y| y.inv()).collect();
            let oracle = oracle_roots(
                &TrinomialProblem::new(degree, a.inv()).unwrap(),
                &OracleConfig::default(),
            )
            .map_err(|e| e.to_string())?;
            let d_x = max_matched(&xs, &oracle.roots);
            let back: Vec<Complex64> = xs.iter().map(|x| x.inv()).collect();
            let d_y = max_matched(&back, &ys.roots);
            ensure(d_x <= 1e-9 && d_y <= 1e-9, || {
                format!("N={degree} a={a}: round trip {d_x:e} / {d_y:e}")
            })?;
            worst_back = worst_back.max(d_x).max(d_y);
        }
    }
    Ok(format!(
        "N in {{2,3,5}} x 10 a: scaled residual {worst_res:.2e} <= 1e-8, round trip {worst_back:.2e} <= 1e-9"
    ))
}

/// 8. Γ(2n+1) = 4^n (1/2)_n (1)_n.
fn gauss_multiplication() -> Check {
    let mut worst: f64 = 0.0;
    for n in 0..=20u32 {
        let lhs = log_gamma(c(f64::from(2 * n + 1), 0.0))
            .map_err(|e| e.to_string())?
            .exp()
            .re;
        let mut rhs = 4f64.powi(n as i32);
        for k in 0..n {
            rhs *= (0.5 + f64::from(k)) * (1.0 + f64::from(k));
        }
        let rel = (lhs - rhs).abs() / rhs;
        ensure(rel <= 1e-11, || format!("n={n}: rel {rel:e}"))?;
        worst = worst.max(rel);
    }
    Ok(format!("n = 0..20, rel {worst:.2e} <= 1e-11"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            "AC1 quadratic recovery",
            quadratic_recovery,
            Duration::from_secs(1),
        ),
        (
            "AC2 cubic trig forms",
            cubic_trig_forms,
            Duration::from_secs(1),
        ),
        ("AC3 quintic branch", quintic_branch, Duration::from_secs(1)),
        (
            "AC4 general series vs oracle",
            general_series,
            Duration::from_secs(10),
        ),
        (
            "AC5 decomposition identity",
            decomposition_identity,
            Duration::from_secs(5),
        ),
        (
            "AC6 radius behaviour",
            radius_behaviour,
            Duration::from_secs(2),
        ),
        (
            "AC7 reciprocal trinomial",
            reciprocal_trinomial,
            Duration::MAX,
        ),
        (
            "AC8 Gauss multiplication",
            gauss_multiplication,
            Duration::MAX,
        ),
    ];
    let mut failed = 0;
    for (name, check, budget) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > budget => Err(format!("{msg}; took {elapsed:?} > {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS  {name}: {msg} ({elapsed:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {name}: {msg} ({elapsed:.2?})");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all 8 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 8 criteria failed");
        ExitCode::FAILURE
    }
}
