use std::io::Write;

use serde::Serialize;
use trinomial_core::{
    match_roots, oracle_roots, quintic_small_root, Complex64, OracleConfig, RootSet, SolverConfig,
    TrinomialProblem,
};

use crate::args::{Format, MethodArg, VerifyArgs};
use crate::failure::{is_outside_radius, Failure};
use crate::format::{csv_writer, sig12, sig17, to_json, JsonComplex, Num};
use crate::methods::{compute, has_full_closed_form, Method};
use crate::solve::solve_problem;

#[derive(Debug, Clone, PartialEq)]
enum Status {
    Pass(f64),
    Fail {
        distance: Option<f64>,
        detail: String,
    },
    Skipped(String),
    NotApplicable,
}

impl Status {
    fn label(&self) -> &'static str {
        match self {
            Status::Pass(_) => "pass",
            Status::Fail { .. } => "fail",
            Status::Skipped(_) => "skipped",
            Status::NotApplicable => "n/a",
        }
    }

    fn distance(&self) -> Option<f64> {
        match self {
            Status::Pass(d) => Some(*d),
            Status::Fail { distance, .. } => *distance,
            _ => None,
        }
    }

    fn detail(&self) -> &str {
        match self {
            Status::Fail { detail, .. } | Status::Skipped(detail) => detail,
            _ => "",
        }
    }
}

struct Case {
    degree: u32,
    t: Complex64,
    method: String,
    status: Status,
}

impl Case {
    fn describe(&self) -> String {
        let mut s = format!(
            "N={} t={} {}: {}",
            self.degree,
            crate::format::short_complex(self.t),
            self.method,
            self.status.label()
        );
        if let Some(d) = self.status.distance() {
            s += &format!(", max distance {d:.3e}");
        }
        if !self.status.detail().is_empty() {
            s += &format!(" ({})", self.status.detail());
        }
        s
    }
}

fn method_label(m: MethodArg) -> &'static str {
    match Method::from_arg(m) {
        Some(m) => m.name(),
        None => "auto",
    }
}

fn classify(result: Result<f64, trinomial_core::Error>, tol: f64, allow_skip: bool) -> Status {
    match result {
        Ok(d) if d <= tol => Status::Pass(d),
        Ok(d) => Status::Fail {
            distance: Some(d),
            detail: format!("exceeds {tol:e}"),
        },
        Err(e) if allow_skip && is_outside_radius(&e) => Status::Skipped(e.to_string()),
        Err(e) => Status::Fail {
            distance: None,
            detail: e.to_string(),
        },
    }
}

fn check_method(
    problem: &TrinomialProblem,
    method: MethodArg,
    oracle: &RootSet,
    config: &SolverConfig,
    allow_skip: bool,
) -> Status {
    let tol = config.residual_tol;
    let degree = problem.degree();
    let full = |m: Method| {
        compute(m, problem, config)
            .and_then(|c| match_roots(&c.set, oracle).map(|r| r.max_distance))
    };
    match Method::from_arg(method) {
        Some(Method::ClosedForm) if degree == 5 => {
            let nearest = quintic_small_root(problem.t(), config).map(|r| {
                oracle
                    .roots
                    .iter()
                    .map(|x| (x - r.value).norm())
                    .fold(f64::INFINITY, f64::min)
            });
            classify(nearest, tol, allow_skip)
        }
        Some(Method::ClosedForm) if !has_full_closed_form(degree) => Status::NotApplicable,
        Some(m) => classify(full(m), tol, allow_skip),
        None => match solve_problem(problem, MethodArg::Auto, false, config) {
            Ok(s) => classify(
                match_roots(&s.computed.set, oracle).map(|r| r.max_distance),
                tol,
                allow_skip,
            ),
            Err(Failure::OutsideRadius(m)) if allow_skip => Status::Skipped(m),
            Err(f) => Status::Fail {
                distance: None,
                detail: f.to_string(),
            },
        },
    }
}

fn run_cases(args: &VerifyArgs, config: &SolverConfig) -> Result<Vec<Case>, Failure> {
    let mut cases = Vec::new();
    for &degree in &args.degrees.0 {
        for &t in &args.t {
            let problem = TrinomialProblem::real(degree, t)
                .map_err(|e| Failure::Usage(format!("t = {t}: {e}")))?;
            let oracle = match oracle_roots(&problem, &OracleConfig::default()) {
                Ok(o) => o,
                Err(e) => {
                    cases.push(Case {
                        degree,
                        t: problem.t(),
                        method: "oracle".into(),
                        status: Status::Fail {
                            distance: None,
                            detail: e.to_string(),
                        },
                    });
                    continue;
                }
            };
            for &m in &args.methods {
                cases.push(Case {
                    degree,
                    t: problem.t(),
                    method: method_label(m).into(),
                    status: check_method(&problem, m, &oracle, config, args.allow_skip),
                });
            }
        }
    }
    Ok(cases)
}

#[derive(Serialize)]
struct CaseJson<'a> {
    degree: u32,
    t: JsonComplex,
    method: &'a str,
    status: &'static str,
    max_distance: Option<Num>,
    detail: &'a str,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    tolerance: Num,
    passed: usize,
    failed: usize,
    skipped: usize,
    cases: Vec<CaseJson<'a>>,
    worst: Option<CaseJson<'a>>,
}

fn case_json(c: &Case) -> CaseJson<'_> {
    CaseJson {
        degree: c.degree,
        t: c.t.into(),
        method: &c.method,
        status: c.status.label(),
        max_distance: c.status.distance().map(Num),
        detail: c.status.detail(),
    }
}

/// The failing case with the largest distance; errors without a distance rank first.
fn worst_failure(cases: &[Case]) -> Option<&Case> {
    cases
        .iter()
        .filter(|c| matches!(c.status, Status::Fail { .. }))
        .max_by(|a, b| {
            let key = |c: &Case| c.status.distance().unwrap_or(f64::INFINITY);
            key(a).total_cmp(&key(b))
        })
}

pub fn run(
    args: &VerifyArgs,
    format: Format,
    config: &SolverConfig,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    if args.t.is_empty() || args.methods.is_empty() {
        return Err(Failure::Usage(
            "verify needs at least one t and one method".into(),
        ));
    }
    let cases = run_cases(args, config)?;
    let count = |label: &str| cases.iter().filter(|c| c.status.label() == label).count();
    let (passed, failed, skipped) = (count("pass"), count("fail"), count("skipped"));
    let worst = worst_failure(&cases);

    let text = match format {
        Format::Json => {
            to_json(&ReportJson {
                tolerance: Num(config.residual_tol),
                passed,
                failed,
                skipped,
                cases: cases.iter().map(case_json).collect(),
                worst: worst.map(case_json),
            }) + "\n"
        }
        Format::Csv => {
            let mut w = csv_writer(Vec::new());
            let io = |e: csv::Error| Failure::Numeric(format!("writing csv: {e}"));
            w.write_record([
                "degree",
                "t_re",
                "t_im",
                "method",
                "status",
                "max_distance",
                "detail",
            ])
            .map_err(io)?;
            for c in &cases {
                w.write_record([
                    c.degree.to_string(),
                    sig17(c.t.re),
                    sig17(c.t.im),
                    c.method.clone(),
                    c.status.label().to_string(),
                    c.status.distance().map(sig17).unwrap_or_default(),
                    c.status.detail().to_string(),
                ])
                .map_err(io)?;
            }
            String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8")
        }
        Format::Plain => {
            let mut s: String = cases.iter().map(|c| c.describe() + "\n").collect();
            s += &format!(
                "{} cases: {passed} passed, {failed} failed, {skipped} skipped (tolerance {})\n",
                cases.len(),
                sig12(config.residual_tol)
            );
            if let Some(w) = worst {
                s += &format!("worst: {}\n", w.describe());
            }
            s
        }
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Numeric(format!("writing output: {e}")))?;
    match worst {
        Some(w) => Err(Failure::Mismatch(format!(
            "{failed} of {} cases failed; worst {}",
            cases.len(),
            w.describe()
        ))),
        None => Ok(()),
    }
}
