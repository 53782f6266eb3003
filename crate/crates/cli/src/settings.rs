use std::path::Path;

use anyhow::{Context, Result};
use serde::Deserialize;
use trinomial_core::SolverConfig;

use crate::args::GlobalOpts;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    tol: Option<f64>,
    residual_tol: Option<f64>,
    max_terms: Option<usize>,
    radius_margin: Option<f64>,
}

fn read_file(path: &Path) -> Result<FileConfig> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Defaults, then the config file, then flags.
pub fn resolve(opts: &GlobalOpts) -> Result<SolverConfig> {
    let file = match &opts.config {
        Some(path) => read_file(path)?,
        None => FileConfig::default(),
    };
    let d = SolverConfig::default();
    let config = SolverConfig {
        tol: opts.tol.or(file.tol).unwrap_or(d.tol),
        residual_tol: opts
            .residual_tol
            .or(file.residual_tol)
            .unwrap_or(d.residual_tol),
        max_terms: opts.max_terms.or(file.max_terms).unwrap_or(d.max_terms),
        radius_margin: opts
            .radius_margin
            .or(file.radius_margin)
            .unwrap_or(d.radius_margin),
    };
    config.validate()?;
    Ok(config)
}
