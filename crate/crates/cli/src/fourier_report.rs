//! The `verify-fourier` report: closed-form coefficients against the
//! expansion-inversion oracle, for every order up to a maximum.

use serde::Serialize;

use kerrcat_core::{fourier_coefficients, fourier_coefficients_dft};

pub const DEVIATION_TOL: f64 = 1e-10;
pub const RESIDUAL_TOL: f64 = 1e-12;

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FourierEntry {
    pub m: usize,
    pub parity: &'static str,
    pub max_closed_vs_dft: f64,
    pub resubstitution_residual: f64,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FourierReport {
    pub max_m: usize,
    pub deviation_tolerance: f64,
    pub residual_tolerance: f64,
    pub entries: Vec<FourierEntry>,
    pub pass: bool,
}

pub fn run_verify_fourier(max_m: usize) -> FourierReport {
    let entries: Vec<FourierEntry> = (1..=max_m)
        .map(|m| {
            let closed = fourier_coefficients(m);
            let dft = fourier_coefficients_dft(m);
            let max_closed_vs_dft = closed.max_deviation(&dft);
            let resubstitution_residual = closed
                .resubstitution_residual()
                .max(dft.resubstitution_residual());
            FourierEntry {
                m,
                parity: closed.parity().label(),
                max_closed_vs_dft,
                resubstitution_residual,
                pass: max_closed_vs_dft <= DEVIATION_TOL
                    && resubstitution_residual <= RESIDUAL_TOL,
            }
        })
        .collect();
    let pass = entries.iter().all(|e| e.pass);
    FourierReport {
        max_m,
        deviation_tolerance: DEVIATION_TOL,
        residual_tolerance: RESIDUAL_TOL,
        entries,
        pass,
    }
}
