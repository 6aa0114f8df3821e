//! Kerr-nonlinearity evolution and the coherent-state cat generator.
//!
//! The evolution is diagonal in the number basis with phase
//! `exp(-i τ n(n-1))`, so it is computed exactly — no integrator. At the
//! special times `τ = π/M` the phase profile is periodic in `n` with period
//! `M` and therefore expands into a finite Fourier series over the phases
//! `exp(-2πiqn/M)`. Applied to a coherent state, each series term rotates
//! the amplitude in the complex plane, which turns `|α⟩` into an `M`-term
//! cat: a superposition of coherent states equally spaced on a circle.
//!
//! Two independent routes produce the series coefficients:
//! [`fourier_coefficients`] evaluates a closed form (a quadratic Gauss sum),
//! and [`fourier_coefficients_dft`] inverts the defining expansion over one
//! period. They must agree to ~1e-12; `kerrcat verify-fourier` checks this
//! from the command line.

use num_complex::Complex64 as C64;
use std::f64::consts::PI;

use crate::coherent::{CoherentSuperposition, CoherentTerm};
use crate::fock::FockVector;

/// Dimensionless interaction time (nonlinear rate × physical time).
#[derive(Debug, Copy, Clone, PartialEq)]
pub struct DimensionlessTime(pub f64);

impl DimensionlessTime {
    /// The cat-generation time `π/M`.
    pub fn cat_time(m: usize) -> Self {
        assert!(m >= 1);
        DimensionlessTime(PI / m as f64)
    }
}

/// Phase picked up by `|n⟩` under Kerr evolution: `exp(-i τ n(n-1))`.
pub fn kerr_phase(n: usize, t: DimensionlessTime) -> C64 {
    C64::from_polar(1.0, -t.0 * n as f64 * (n as f64 - 1.0))
}

/// Apply the diagonal Kerr evolution to a truncated state. Every `|c_n|`
/// is preserved exactly.
pub fn evolve_fock(s: &FockVector, t: DimensionlessTime) -> FockVector {
    FockVector::new(
        s.amps()
            .iter()
            .enumerate()
            .map(|(n, c)| kerr_phase(n, t) * c)
            .collect(),
    )
}

/// Parity of the cat order `M`, selecting which periodic phase profile the
/// Fourier series expands.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(m: usize) -> Self {
        if m % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        }
    }
}

/// The `M` series coefficients for one cat order, tagged with the parity of
/// the expansion they solve. Every coefficient has modulus `1/√M`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierCoefficients {
    m: usize,
    parity: Parity,
    values: Vec<C64>,
}

impl FourierCoefficients {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    /// Max componentwise distance to another coefficient set of the same order.
    pub fn max_deviation(&self, other: &Self) -> f64 {
        assert_eq!(self.m, other.m, "coefficient sets have different orders");
        self.values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Residual of the defining expansion: feed the coefficients back into
    /// `Σ_q f_q exp(-2πiqn/M)` and compare with the periodic phase profile
    /// at every `n` in one period. Machine-small iff the coefficients are
    /// correct, including their overall phase.
    pub fn resubstitution_residual(&self) -> f64 {
        let m = self.m as f64;
        let mut worst = 0.0f64;
        for n in 0..self.m {
            let recon: C64 = self
                .values
                .iter()
                .enumerate()
                .map(|(q, f)| f * C64::from_polar(1.0, -2.0 * PI * (q * n) as f64 / m))
                .sum();
            worst = worst.max((recon - periodic_phase(n, self.m, self.parity)).norm());
        }
        worst
    }
}

/// The diagonal phase profile that is periodic in `n` with period `M`:
/// `exp(-iπ n(n-1)/M)` for odd `M`, `exp(-iπ n²/M)` for even `M`.
fn periodic_phase(n: usize, m: usize, parity: Parity) -> C64 {
    let m = m as f64;
    let n = n as f64;
    let angle = match parity {
        Parity::Odd => -PI * n * (n - 1.0) / m,
        Parity::Even => -PI * n * n / m,
    };
    C64::from_polar(1.0, angle)
}

/// Closed-form series coefficients for cat order `M ≥ 1`.
///
/// Both parities evaluate to quadratic Gauss sums:
///
/// * odd `M`:  `f_q = (1/√M) · exp(iπ((2q+1)² − M)/(4M))`
///   (equivalently `(1/√M) exp(iπq(q+1)/M) exp(-iπ(M-1)/(4M))`),
/// * even `M`: `f_q = (1/√M) · exp(iπq²/M) · exp(-iπ/4)`.
///
/// The overall phases are pinned by the resubstitution identity — see
/// [`fourier_coefficients_dft`] for the independent route.
pub fn fourier_coefficients(m: usize) -> FourierCoefficients {
    assert!(m >= 1, "cat order must be at least 1");
    let parity = Parity::of(m);
    let mf = m as f64;
    let scale = 1.0 / mf.sqrt();
    let values = (0..m)
        .map(|q| {
            let angle = match parity {
                Parity::Odd => {
                    let odd = (2 * q + 1) as f64;
                    PI * (odd * odd - mf) / (4.0 * mf)
                }
                Parity::Even => {
                    let qf = q as f64;
                    PI * qf * qf / mf - PI / 4.0
                }
            };
            scale * C64::from_polar(1.0, angle)
        })
        .collect();
    FourierCoefficients { m, parity, values }
}

/// Independent oracle for the series coefficients: invert the expansion over
/// one period, `f_q = (1/M) Σ_{n=0}^{M-1} g(n) exp(+2πiqn/M)` with `g` the
/// periodic phase profile for the parity of `M`.
pub fn fourier_coefficients_dft(m: usize) -> FourierCoefficients {
    assert!(m >= 1, "cat order must be at least 1");
    let parity = Parity::of(m);
    let mf = m as f64;
    let values = (0..m)
        .map(|q| {
            let sum: C64 = (0..m)
                .map(|n| {
                    periodic_phase(n, m, parity)
                        * C64::from_polar(1.0, 2.0 * PI * (q * n) as f64 / mf)
                })
                .sum();
            sum / mf
        })
        .collect();
    FourierCoefficients { m, parity, values }
}

/// Kerr evolution of `|α⟩` at `τ = π/M`, written exactly as an `M`-term
/// superposition of coherent states:
///
/// * odd `M`:  `Σ_q f_q |α·exp(-2πiq/M)⟩`,
/// * even `M`: `Σ_q f_q |α·exp(iπ(1-2q)/M)⟩`.
pub fn kerr_cat(alpha: C64, m: usize) -> CoherentSuperposition {
    assert!(m >= 1, "cat order must be at least 1");
    let coeffs = fourier_coefficients(m);
    let mf = m as f64;
    let terms = coeffs
        .values()
        .iter()
        .enumerate()
        .map(|(q, f)| {
            let angle = match coeffs.parity() {
                Parity::Odd => -2.0 * PI * q as f64 / mf,
                Parity::Even => PI * (1.0 - 2.0 * q as f64) / mf,
            };
            CoherentTerm::new(*f, vec![alpha * C64::from_polar(1.0, angle)])
        })
        .collect();
    CoherentSuperposition::single_mode(terms).expect("single-mode terms by construction")
}
