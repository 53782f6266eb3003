use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "trinomial",
    version,
    about = "Roots of x^N - x + t = 0 by Lagrange series, hypergeometric sums and closed forms"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Bound on the estimated series truncation tail [default: 1e-12]
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Largest accepted |x^N - x + t| [default: 1e-9]
    #[arg(long, global = true)]
    pub residual_tol: Option<f64>,
    /// Cap on series terms per sum [default: 100000]
    #[arg(long, global = true)]
    pub max_terms: Option<usize>,
    /// Series are refused for |t| >= t_c (1 - margin) [default: 0.02]
    #[arg(long, global = true)]
    pub radius_margin: Option<f64>,
    /// Output format [default: plain; sweep writes CSV only]
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// TOML file with any of tol, residual_tol, max_terms, radius_margin;
    /// flags override it
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Series,
    Decomposition,
    ClosedForm,
    Oracle,
    /// Closed form for N = 2, 3, series otherwise, oracle outside the radius
    Auto,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute all N roots for one t
    Solve(SolveArgs),
    /// Compare each method against the oracle over a grid
    Verify(VerifyArgs),
    /// Stream per-t root rows as CSV
    Sweep(SweepArgs),
    /// Print the hypergeometric decomposition for a degree
    Decompose(DecomposeArgs),
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long, short = 'n', value_parser = clap::value_parser!(u32).range(2..))]
    pub degree: u32,
    /// Real part of t
    #[arg(long, allow_negative_numbers = true)]
    pub t: f64,
    /// Imaginary part of t
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub t_im: f64,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    /// With --method auto, exit instead of using the oracle outside the radius
    #[arg(long)]
    pub no_fallback: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Degrees as a range `2..6` (inclusive) or a list `2,3,5`
    #[arg(long, default_value = "2..6", value_parser = parse_degrees)]
    pub degrees: DegreeList,
    /// Real t values
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "0.02,0.05,0.1,0.15",
        allow_hyphen_values = true
    )]
    pub t: Vec<f64>,
    #[arg(
        long,
        value_enum,
        value_delimiter = ',',
        default_value = "series,decomposition,closed-form"
    )]
    pub methods: Vec<MethodArg>,
    /// Report t outside a method's radius as skipped rather than failed
    #[arg(long, visible_alias = "allow-oracle-only")]
    pub allow_skip: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, short = 'n', value_parser = clap::value_parser!(u32).range(2..))]
    pub degree: u32,
    #[arg(long, allow_negative_numbers = true)]
    pub t_min: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub t_max: f64,
    /// Number of t values, endpoints included
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    pub steps: u32,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[arg(long, short = 'n', value_parser = clap::value_parser!(u32).range(2..))]
    pub degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeList(pub Vec<u32>);

fn parse_degrees(s: &str) -> Result<DegreeList, String> {
    let parse = |x: &str| -> Result<u32, String> {
        let n: u32 = x
            .trim()
            .parse()
            .map_err(|_| format!("`{x}` is not a degree"))?;
        if n < 2 {
            return Err(format!("degree {n} is below 2"));
        }
        Ok(n)
    };
    let degrees = if let Some((lo, hi)) = s.split_once("..") {
        let (lo, hi) = (parse(lo)?, parse(hi.trim_start_matches('='))?);
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        (lo..=hi).collect()
    } else {
        s.split(',').map(parse).collect::<Result<Vec<_>, _>>()?
    };
    Ok(DegreeList(degrees))
}
