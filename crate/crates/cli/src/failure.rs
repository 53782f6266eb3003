use std::fmt;
use std::process::ExitCode;

use trinomial_core::Error;

/// Why a command did not succeed, and the exit status it maps to.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments or configuration.
    Usage(String),
    /// `t` outside the series radius and no fallback allowed.
    OutsideRadius(String),
    /// Nonconvergence, residual failure, or any other numeric problem.
    Numeric(String),
    /// `verify` found a method disagreeing with the oracle.
    Mismatch(String),
}

impl Failure {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            Failure::Mismatch(_) => 1,
            Failure::OutsideRadius(_) => 2,
            Failure::Numeric(_) => 3,
            Failure::Usage(_) => 64,
        })
    }

    pub fn from_core(context: &str, e: &Error) -> Self {
        let msg = format!("{context}: {e}");
        if is_outside_radius(e) {
            Failure::OutsideRadius(msg)
        } else {
            Failure::Numeric(msg)
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::OutsideRadius(m) => write!(f, "outside radius: {m}"),
            Failure::Numeric(m) => write!(f, "numeric failure: {m}"),
            Failure::Mismatch(m) => write!(f, "verification failed: {m}"),
        }
    }
}

pub fn is_outside_radius(e: &Error) -> bool {
    match e {
        Error::OutsideRadius { .. } | Error::Divergence { .. } => true,
        Error::InClass { source, .. } => is_outside_radius(source),
        _ => false,
    }
}
