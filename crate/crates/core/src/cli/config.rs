//! Flag and config-file resolution for `verify`.

use std::path::Path;

use clap::Args;

use crate::identities::ParamGrid;
use crate::params::QParams;
use crate::rat::Rat;
use crate::suites::{validate_grid, Suite};

use super::{ConfigError, Format, VerifyArgs};

#[derive(Debug, Default, Args)]
pub struct GridArgs {
    /// q parameters as `t,s` with `t = q^(1/4)`, `s = β^(1/2)`; repeatable.
    #[arg(long = "qparams")]
    pub qparams: Vec<String>,
    #[arg(long = "grid-lmax")]
    pub lmax: Option<usize>,
    #[arg(long = "grid-mmax")]
    pub mmax: Option<usize>,
    /// Classical parameter α; repeatable.
    #[arg(long = "alpha")]
    pub alphas: Vec<String>,
}

#[derive(Debug)]
pub struct Resolved {
    pub suite: Suite,
    pub grid: ParamGrid,
    pub format: Format,
    pub jobs: usize,
}

/// Settings read from a config file, all optional.
#[derive(Debug, Default)]
struct FileConfig {
    suite: Option<String>,
    format: Option<Format>,
    jobs: Option<usize>,
    qparams: Vec<String>,
    alphas: Vec<String>,
    lmax: Option<usize>,
    mmax: Option<usize>,
    classical_lmax: Option<usize>,
    nmax: Option<usize>,
    discrete_nmax: Option<usize>,
}

fn number(key: &str, value: &str) -> Result<usize, ConfigError> {
    value
        .parse()
        .map_err(|_| ConfigError(format!("{key}: expected a natural number, got {value:?}")))
}

fn read_config(path: &Path) -> Result<FileConfig, ConfigError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ConfigError(format!("cannot read {}: {e}", path.display())))?;
    let mut cfg = FileConfig::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| ConfigError(format!("{}:{}: expected key = value", path.display(), i + 1)))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "suite" => cfg.suite = Some(value.to_string()),
            "format" => {
                cfg.format = Some(match value {
                    "json" => Format::Json,
                    "text" => Format::Text,
                    "csv" => Format::Csv,
                    _ => return Err(ConfigError(format!("unknown format {value:?}"))),
                })
            }
            "jobs" => cfg.jobs = Some(number(key, value)?),
            "qparams" => cfg.qparams.extend(value.split(';').map(|s| s.trim().to_string())),
            "alpha" => cfg.alphas.extend(value.split(';').map(|s| s.trim().to_string())),
            "grid-lmax" => cfg.lmax = Some(number(key, value)?),
            "grid-mmax" => cfg.mmax = Some(number(key, value)?),
            "classical-lmax" => cfg.classical_lmax = Some(number(key, value)?),
            "nmax" => cfg.nmax = Some(number(key, value)?),
            "discrete-nmax" => cfg.discrete_nmax = Some(number(key, value)?),
            _ => return Err(ConfigError(format!("{}:{}: unknown key {key:?}", path.display(), i + 1))),
        }
    }
    Ok(cfg)
}

fn parse_qparams(list: &[String]) -> Result<Vec<QParams>, ConfigError> {
    list.iter()
        .map(|s| s.parse::<QParams>().map_err(|e| ConfigError(format!("--qparams {s}: {e}"))))
        .collect()
}

fn parse_alphas(list: &[String]) -> Result<Vec<Rat>, ConfigError> {
    list.iter()
        .map(|s| s.parse::<Rat>().map_err(|e| ConfigError(format!("--alpha {s}: {e}"))))
        .collect()
}

/// Defaults, then the config file, then flags.
pub fn resolve(args: &VerifyArgs) -> Result<Resolved, ConfigError> {
    let cfg = match &args.config {
        Some(p) => read_config(p)?,
        None => FileConfig::default(),
    };
    let suite_name = args
        .suite
        .clone()
        .or(cfg.suite)
        .ok_or_else(|| ConfigError("no suite given (use --suite)".into()))?;
    let suite: Suite = suite_name.parse()?;
    let mut grid = ParamGrid::default();
    let qlist = if args.grid.qparams.is_empty() { &cfg.qparams } else { &args.grid.qparams };
    if !qlist.is_empty() {
        grid.qparams = parse_qparams(qlist)?;
    }
    let alist = if args.grid.alphas.is_empty() { &cfg.alphas } else { &args.grid.alphas };
    if !alist.is_empty() {
        grid.alphas = parse_alphas(alist)?;
    }
    if let Some(l) = args.grid.lmax.or(cfg.lmax) {
        grid.lmax = l;
    }
    grid.mmax = args.grid.mmax.or(cfg.mmax).or(grid.mmax);
    if let Some(v) = cfg.classical_lmax {
        grid.classical_lmax = v;
    }
    if let Some(v) = cfg.nmax {
        grid.nmax = v;
    }
    if let Some(v) = cfg.discrete_nmax {
        grid.discrete_nmax = v;
    }
    validate_grid(&grid)?;
    Ok(Resolved {
        suite,
        grid,
        format: args.format.or(cfg.format).unwrap_or(Format::Json),
        jobs: args.jobs.or(cfg.jobs).unwrap_or(0),
    })
}
