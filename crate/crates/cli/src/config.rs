//! Sweep configuration: flag values merged over an optional flat key-value
//! config file (flags win key by key).

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use kerrcat_core::Method;

use crate::error::{CliError, Result};

/// `gram`, `fock`, or `both` engines per grid point.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum MethodChoice {
    Gram,
    Fock,
    Both,
}

impl MethodChoice {
    /// The engines to run, in emission order.
    pub fn methods(self) -> &'static [Method] {
        match self {
            MethodChoice::Gram => &[Method::Gram],
            MethodChoice::Fock => &[Method::Fock],
            MethodChoice::Both => &[Method::Gram, Method::Fock],
        }
    }
}

impl FromStr for MethodChoice {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gram" => Ok(MethodChoice::Gram),
            "fock" => Ok(MethodChoice::Fock),
            "both" => Ok(MethodChoice::Both),
            other => Err(CliError::Config(format!(
                "unknown method '{other}' (expected gram, fock or both)"
            ))),
        }
    }
}

/// Fully merged and validated sweep parameters.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub alpha_squared: Vec<f64>,
    pub m: Vec<usize>,
    pub method: MethodChoice,
    pub cutoff: Option<usize>,
    pub out: Option<PathBuf>,
    pub tau_grid: Option<Vec<f64>>,
}

/// Raw, possibly partial inputs from either the command line or a file.
#[derive(Debug, Default, Clone)]
pub struct RawSweepInputs {
    pub alpha_squared: Option<Vec<f64>>,
    pub m: Option<Vec<String>>,
    pub method: Option<String>,
    pub cutoff: Option<usize>,
    pub out: Option<PathBuf>,
    pub tau_grid: Option<Vec<f64>>,
}

impl RawSweepInputs {
    /// Key-by-key merge; `self` (the flags) wins over `file`.
    fn or(self, file: RawSweepInputs) -> RawSweepInputs {
        RawSweepInputs {
            alpha_squared: self.alpha_squared.or(file.alpha_squared),
            m: self.m.or(file.m),
            method: self.method.or(file.method),
            cutoff: self.cutoff.or(file.cutoff),
            out: self.out.or(file.out),
            tau_grid: self.tau_grid.or(file.tau_grid),
        }
    }
}

/// Expand integer list tokens, each either a plain value or an inclusive
/// `lo..hi` range, e.g. `2..20` or `2,4,8`.
pub fn parse_m_tokens(tokens: &[String]) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for token in tokens {
        let token = token.trim();
        if let Some((lo, hi)) = token.split_once("..") {
            let lo: usize = lo
                .trim()
                .parse()
                .map_err(|_| CliError::Config(format!("bad range start in '{token}'")))?;
            let hi: usize = hi
                .trim()
                .parse()
                .map_err(|_| CliError::Config(format!("bad range end in '{token}'")))?;
            if lo > hi {
                return Err(CliError::Config(format!("empty range '{token}'")));
            }
            out.extend(lo..=hi);
        } else {
            out.push(
                token
                    .parse()
                    .map_err(|_| CliError::Config(format!("bad integer '{token}'")))?,
            );
        }
    }
    Ok(out)
}

fn parse_f64_list(value: &str, key: &str) -> Result<Vec<f64>> {
    value
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Config(format!("bad number '{}' for {key}", t.trim())))
        })
        .collect()
}

/// Read a flat `key = value` config file. Keys use the same names as the
/// long flags; `#` starts a comment.
pub fn read_config_file(path: &Path) -> Result<RawSweepInputs> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read config {}: {e}", path.display())))?;
    let mut raw = RawSweepInputs::default();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::Config(format!(
                "config line {} is not 'key = value': '{line}'",
                lineno + 1
            ))
        })?;
        let key = key.trim();
        let value = value.trim();
        match key {
            "alpha-squared" => raw.alpha_squared = Some(parse_f64_list(value, key)?),
            "m" => raw.m = Some(value.split(',').map(|t| t.trim().to_string()).collect()),
            "method" => raw.method = Some(value.to_string()),
            "cutoff" => {
                raw.cutoff = Some(value.parse().map_err(|_| {
                    CliError::Config(format!("bad integer '{value}' for cutoff"))
                })?)
            }
            "out" => raw.out = Some(PathBuf::from(value)),
            "tau-grid" => raw.tau_grid = Some(parse_f64_list(value, key)?),
            other => {
                return Err(CliError::Config(format!(
                    "unknown config key '{other}' on line {}",
                    lineno + 1
                )))
            }
        }
    }
    Ok(raw)
}

/// Merge flags over an optional config file and validate the result.
pub fn resolve_sweep_config(
    flags: RawSweepInputs,
    config_path: Option<&Path>,
) -> Result<SweepConfig> {
    let merged = match config_path {
        Some(path) => flags.or(read_config_file(path)?),
        None => flags,
    };

    let alpha_squared = merged
        .alpha_squared
        .ok_or_else(|| CliError::Config("missing alpha-squared list".into()))?;
    if alpha_squared.is_empty() {
        return Err(CliError::Config("alpha-squared list is empty".into()));
    }
    if alpha_squared.iter().any(|a| !a.is_finite() || *a < 0.0) {
        return Err(CliError::Config(
            "alpha-squared values must be finite and nonnegative".into(),
        ));
    }

    let method = merged
        .method
        .as_deref()
        .unwrap_or("gram")
        .parse::<MethodChoice>()?;

    let tau_grid = merged.tau_grid;
    let m = match (&tau_grid, merged.m) {
        (Some(taus), m_tokens) => {
            if m_tokens.is_some() {
                return Err(CliError::Config(
                    "pass either --m or --tau-grid, not both".into(),
                ));
            }
            if taus.is_empty() {
                return Err(CliError::Config("tau-grid list is empty".into()));
            }
            if taus.iter().any(|t| !t.is_finite()) {
                return Err(CliError::Config("tau values must be finite".into()));
            }
            if method != MethodChoice::Fock {
                return Err(CliError::Config(
                    "tau-grid rows are computed by the fock engine; pass --method fock".into(),
                ));
            }
            Vec::new()
        }
        (None, Some(tokens)) => {
            let m = parse_m_tokens(&tokens)?;
            if m.is_empty() {
                return Err(CliError::Config("m list is empty".into()));
            }
            if m.contains(&0) {
                return Err(CliError::Config("m values must be at least 1".into()));
            }
            m
        }
        (None, None) => return Err(CliError::Config("missing m list".into())),
    };

    if let Some(cutoff) = merged.cutoff {
        if cutoff == 0 {
            return Err(CliError::Config("cutoff must be at least 1".into()));
        }
    }

    Ok(SweepConfig {
        alpha_squared,
        m,
        method,
        cutoff: merged.cutoff,
        out: merged.out,
        tau_grid,
    })
}
