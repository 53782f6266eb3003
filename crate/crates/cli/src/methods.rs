use trinomial_core::{
    all_roots_decomposition, all_roots_series_detailed, cubic_roots, oracle_roots, quadratic_roots,
    Error, OracleConfig, RootSet, SeriesResult, SolverConfig, TrinomialProblem,
};

use crate::args::MethodArg;

/// A concrete algorithm (`auto` is resolved before reaching here).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Series,
    Decomposition,
    ClosedForm,
    Oracle,
}

impl Method {
    pub fn from_arg(m: MethodArg) -> Option<Self> {
        match m {
            MethodArg::Series => Some(Method::Series),
            MethodArg::Decomposition => Some(Method::Decomposition),
            MethodArg::ClosedForm => Some(Method::ClosedForm),
            MethodArg::Oracle => Some(Method::Oracle),
            MethodArg::Auto => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::Decomposition => "decomposition",
            Method::ClosedForm => "closed-form",
            Method::Oracle => "oracle",
        }
    }
}

/// Whether a closed form gives every root for this degree.
pub fn has_full_closed_form(degree: u32) -> bool {
    matches!(degree, 2 | 3)
}

/// A full root set plus the series terms spent on each root (0 where none).
#[derive(Debug, Clone)]
pub struct Computed {
    pub set: RootSet,
    pub terms: Vec<usize>,
}

impl Computed {
    pub fn max_terms(&self) -> usize {
        self.terms.iter().copied().max().unwrap_or(0)
    }
}

fn terms_of(stats: &[SeriesResult], total: usize) -> Vec<usize> {
    let mut terms: Vec<usize> = stats.iter().map(|r| r.terms_used).collect();
    terms.resize(total, 0);
    terms
}

/// All roots by `method`. Closed forms exist only for `N = 2, 3`;
/// callers check [`has_full_closed_form`] first.
pub fn compute(
    method: Method,
    problem: &TrinomialProblem,
    config: &SolverConfig,
) -> Result<Computed, Error> {
    let n = problem.degree() as usize;
    match method {
        Method::Series => {
            let (set, stats) = all_roots_series_detailed(problem, config)?;
            Ok(Computed {
                terms: terms_of(&stats, n),
                set,
            })
        }
        Method::Decomposition => {
            let (set, stats) = all_roots_decomposition(problem, config)?;
            Ok(Computed {
                terms: terms_of(&stats, n),
                set,
            })
        }
        Method::ClosedForm => {
            let set = match problem.degree() {
                2 => quadratic_roots(problem.t()),
                3 => cubic_roots(problem.t()),
                _ => return Err(Error::InvalidInput("no closed form for this degree")),
            };
            Ok(Computed {
                set,
                terms: vec![0; n],
            })
        }
        Method::Oracle => Ok(Computed {
            set: oracle_roots(problem, &OracleConfig::default())?,
            terms: vec![0; n],
        }),
    }
}
