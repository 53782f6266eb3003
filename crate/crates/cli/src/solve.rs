use std::io::Write;

use serde::Serialize;
use trinomial_core::{Complex64, SolverConfig, TrinomialProblem};

use crate::args::{Format, MethodArg, SolveArgs};
use crate::failure::{is_outside_radius, Failure};
use crate::format::{
    complex12, csv_record, csv_writer, sig12, to_json, JsonComplex, Num, CSV_HEADER,
};
use crate::methods::{compute, has_full_closed_form, Computed, Method};

#[derive(Serialize)]
struct Metadata {
    degree: u32,
    t: JsonComplex,
    method: &'static str,
    radius: Num,
    terms_used: usize,
}

#[derive(Serialize)]
struct RootJson {
    re: Num,
    im: Num,
    residual: Num,
    provenance: String,
    multiplicity: usize,
}

#[derive(Serialize)]
struct SolveJson {
    metadata: Metadata,
    roots: Vec<RootJson>,
}

/// The method that ran, and what it produced.
pub struct Solution {
    pub method: Method,
    pub computed: Computed,
    /// Set when `auto` fell back to the oracle.
    pub fallback_reason: Option<String>,
}

/// Resolves `auto`, runs the method and enforces the residual bound.
pub fn solve_problem(
    problem: &TrinomialProblem,
    method: MethodArg,
    allow_fallback: bool,
    config: &SolverConfig,
) -> Result<Solution, Failure> {
    let degree = problem.degree();
    let (method, fallback) = match Method::from_arg(method) {
        Some(Method::ClosedForm) if !has_full_closed_form(degree) => {
            return Err(Failure::Usage(format!(
                "closed forms cover every root only for N = 2 and 3 (got N = {degree})"
            )))
        }
        Some(m) => (m, false),
        None if has_full_closed_form(degree) => (Method::ClosedForm, false),
        None => (Method::Series, allow_fallback),
    };
    let context = format!("{} for N = {degree}", method.name());
    let solution = match compute(method, problem, config) {
        Ok(computed) => Solution {
            method,
            computed,
            fallback_reason: None,
        },
        Err(e) if fallback && is_outside_radius(&e) => {
            let computed = compute(Method::Oracle, problem, config)
                .map_err(|e| Failure::from_core("oracle", &e))?;
            Solution {
                method: Method::Oracle,
                computed,
                fallback_reason: Some(e.to_string()),
            }
        }
        Err(e) => return Err(Failure::from_core(&context, &e)),
    };
    let bound = residual_bound(problem.t(), config);
    let worst = solution.computed.set.max_residual();
    if worst.is_nan() || worst > bound {
        return Err(Failure::Numeric(format!(
            "{}: max residual {worst:e} exceeds {bound:e}",
            solution.method.name()
        )));
    }
    Ok(solution)
}

/// Residuals scale with the size of the roots, which grow with `|t|`.
pub fn residual_bound(t: Complex64, config: &SolverConfig) -> f64 {
    config.residual_tol * t.norm().max(1.0)
}

pub fn run(
    args: &SolveArgs,
    format: Format,
    config: &SolverConfig,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let t = Complex64::new(args.t, args.t_im);
    let problem =
        TrinomialProblem::new(args.degree, t).map_err(|e| Failure::Usage(e.to_string()))?;
    let solution = solve_problem(&problem, args.method, !args.no_fallback, config)?;
    if let Some(reason) = &solution.fallback_reason {
        eprintln!("note: {reason}; using the oracle");
    }
    let text = match format {
        Format::Json => to_json(&json(&problem, &solution)) + "\n",
        Format::Csv => csv(&problem, &solution),
        Format::Plain => plain(&problem, &solution),
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Numeric(format!("writing output: {e}")))
}

fn json(problem: &TrinomialProblem, s: &Solution) -> SolveJson {
    let set = &s.computed.set;
    SolveJson {
        metadata: Metadata {
            degree: problem.degree(),
            t: problem.t().into(),
            method: s.method.name(),
            radius: Num(problem.radius()),
            terms_used: s.computed.max_terms(),
        },
        roots: (0..set.len())
            .map(|i| RootJson {
                re: Num(set.roots[i].re),
                im: Num(set.roots[i].im),
                residual: Num(set.residuals[i]),
                provenance: set.provenance[i].to_string(),
                multiplicity: set.multiplicity(i),
            })
            .collect(),
    }
}

fn csv(problem: &TrinomialProblem, s: &Solution) -> String {
    let mut w = csv_writer(Vec::new());
    let set = &s.computed.set;
    w.write_record(CSV_HEADER).expect("in-memory write");
    for i in 0..set.len() {
        w.write_record(csv_record(
            problem.t(),
            s.method.name(),
            Some((i, set.roots[i], set.residuals[i])),
            Some(s.computed.terms[i]),
            true,
        ))
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory write")).expect("ascii")
}

fn plain(problem: &TrinomialProblem, s: &Solution) -> String {
    let t = problem.t();
    let radius = problem.radius();
    let set = &s.computed.set;
    let mut text = format!(
        "x^{} - x + t = 0, t = {}\nmethod {}, series radius t_c = {}, |t|/t_c = {}\n",
        problem.degree(),
        crate::format::short_complex(t),
        s.method.name(),
        sig12(radius),
        sig12(t.norm() / radius),
    );
    for i in 0..set.len() {
        let m = set.multiplicity(i);
        let note = if m > 1 {
            format!("  (multiplicity {m})")
        } else {
            String::new()
        };
        text += &format!(
            "{i:>3}  {:<40}  residual {:.1e}  {}{note}\n",
            complex12(set.roots[i]),
            set.residuals[i],
            set.provenance[i],
        );
    }
    text
}
