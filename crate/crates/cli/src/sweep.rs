use std::io::Write;

use trinomial_core::{quintic_small_root, Complex64, Error, SolverConfig, TrinomialProblem};

use crate::args::SweepArgs;
use crate::failure::{is_outside_radius, Failure};
use crate::format::{csv_record, csv_writer, CSV_HEADER};
use crate::methods::{compute, has_full_closed_form, Computed, Method};

/// `steps` evenly spaced values with both endpoints exact.
pub fn grid(lo: f64, hi: f64, steps: u32) -> Vec<f64> {
    let last = steps - 1;
    (0..steps)
        .map(|i| {
            if i == last {
                hi
            } else {
                lo + (hi - lo) * f64::from(i) / f64::from(last)
            }
        })
        .collect()
}

type Row = [String; 9];

fn full_rows(t: Complex64, method: Method, c: &Computed) -> Vec<Row> {
    (0..c.set.len())
        .map(|i| {
            csv_record(
                t,
                method.name(),
                Some((i, c.set.roots[i], c.set.residuals[i])),
                Some(c.terms[i]),
                true,
            )
        })
        .collect()
}

fn failure_row(t: Complex64, method: Method, e: &Error) -> Row {
    let terms = match e {
        Error::NonConvergence { terms_used, .. } => Some(*terms_used),
        _ => None,
    };
    csv_record(t, method.name(), None, terms, false)
}

/// Rows for one `t`: series, decomposition and any closed form, plus the
/// oracle whenever the series refuses `t`.
fn rows_for(problem: &TrinomialProblem, config: &SolverConfig) -> Result<Vec<Row>, Failure> {
    let t = problem.t();
    let degree = problem.degree();
    let mut rows = Vec::new();
    let mut outside = false;
    for method in [Method::Series, Method::Decomposition] {
        match compute(method, problem, config) {
            Ok(c) => rows.extend(full_rows(t, method, &c)),
            Err(e) => {
                outside |= method == Method::Series && is_outside_radius(&e);
                rows.push(failure_row(t, method, &e));
            }
        }
    }
    if has_full_closed_form(degree) {
        let c = compute(Method::ClosedForm, problem, config)
            .map_err(|e| Failure::from_core("closed form", &e))?;
        rows.extend(full_rows(t, Method::ClosedForm, &c));
    } else if degree == 5 {
        rows.push(match quintic_small_root(t, config) {
            Ok(r) => csv_record(
                t,
                Method::ClosedForm.name(),
                Some((0, r.value, trinomial_core::residual(problem, r.value))),
                Some(r.terms_used),
                true,
            ),
            Err(e) => failure_row(t, Method::ClosedForm, &e),
        });
    }
    if outside {
        let c = compute(Method::Oracle, problem, config)
            .map_err(|e| Failure::from_core("oracle", &e))?;
        rows.extend(full_rows(t, Method::Oracle, &c));
    }
    Ok(rows)
}

pub fn run(args: &SweepArgs, config: &SolverConfig, out: &mut dyn Write) -> Result<(), Failure> {
    if !(args.t_min.is_finite() && args.t_max.is_finite()) {
        return Err(Failure::Usage("t range must be finite".into()));
    }
    let io = |e: csv::Error| Failure::Numeric(format!("writing csv: {e}"));
    let mut w = csv_writer(out);
    w.write_record(CSV_HEADER).map_err(io)?;
    for t in grid(args.t_min, args.t_max, args.steps) {
        let problem =
            TrinomialProblem::real(args.degree, t).map_err(|e| Failure::Usage(e.to_string()))?;
        for row in rows_for(&problem, config)? {
            w.write_record(row).map_err(io)?;
        }
    }
    w.flush()
        .map_err(|e| Failure::Numeric(format!("writing csv: {e}")))
}
