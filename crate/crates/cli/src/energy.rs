//! The `energy-scaling` search: for each cat order, the smallest coherent
//! energy `|α|²` whose entanglement reaches a target fraction of `log₂ M`.

use num_complex::Complex64 as C64;

use kerrcat_core::{entanglement_of_cat, Method};

use crate::error::{CliError, Result};
use crate::format::sig12;

pub const ENERGY_CSV_HEADER: &str = "m,alpha_squared_min,entropy_bits";

/// Bisection stops when the bracket is this small relative to its upper end.
const BISECTION_REL_TOL: f64 = 1e-3;

/// Doubling the bracket past this is reported as a search failure.
const BRACKET_CAP: f64 = 1e9;

#[derive(Debug, Clone)]
pub struct EnergyRow {
    pub m: usize,
    pub alpha_squared_min: f64,
    pub entropy_bits: f64,
}

impl EnergyRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{}",
            self.m,
            sig12(self.alpha_squared_min),
            sig12(self.entropy_bits)
        )
    }
}

fn entropy_at(alpha_squared: f64, m: usize) -> Result<f64> {
    let alpha = C64::new(alpha_squared.sqrt(), 0.0);
    Ok(entanglement_of_cat(alpha, m, Method::Gram)?.entropy_bits)
}

/// Smallest `|α|²` with `E ≥ fraction·log₂ M`, found by doubling a bracket
/// and bisecting to 1e-3 relative tolerance. The returned point is the
/// verified-feasible upper end of the final bracket.
fn minimal_alpha_squared(m: usize, fraction: f64) -> Result<f64> {
    let target = fraction * (m as f64).log2();
    if entropy_at(0.0, m)? >= target {
        return Ok(0.0);
    }
    let mut lo = 0.0;
    let mut hi = 1.0;
    while entropy_at(hi, m)? < target {
        lo = hi;
        hi *= 2.0;
        if hi > BRACKET_CAP {
            return Err(CliError::Runtime(format!(
                "bracket search failed for m={m}: entropy below target on [{lo:.3e}, {hi:.3e}]"
            )));
        }
    }
    while hi - lo > BISECTION_REL_TOL * hi {
        let mid = 0.5 * (lo + hi);
        if entropy_at(mid, m)? >= target {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

pub fn run_energy_scaling(m_list: &[usize], fraction: f64) -> Result<Vec<EnergyRow>> {
    if !(fraction > 0.0 && fraction < 1.0) {
        return Err(CliError::Config(format!(
            "fraction must lie strictly between 0 and 1 (the log₂M asymptote \
             is only reached at infinite amplitude); got {fraction}"
        )));
    }
    if m_list.is_empty() {
        return Err(CliError::Config("m list is empty".into()));
    }
    if m_list.contains(&0) {
        return Err(CliError::Config("m values must be at least 1".into()));
    }
    let mut rows = Vec::new();
    for &m in m_list {
        let alpha_squared_min = minimal_alpha_squared(m, fraction)?;
        rows.push(EnergyRow {
            m,
            alpha_squared_min,
            entropy_bits: entropy_at(alpha_squared_min, m)?,
        });
    }
    rows.sort_by_key(|r| r.m);
    Ok(rows)
}

pub fn to_csv(rows: &[EnergyRow]) -> String {
    let mut out = String::from(ENERGY_CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.to_csv());
        out.push('\n');
    }
    out
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(x, y) in points {
        let (lx, ly) = (x.ln(), y.ln());
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}
