//! Passive linear-optical transformations of two modes.
//!
//! A 2×2 unitary `u` mixes the mode operators, `a'_j = Σ_i u_{ji} a_i`.
//! On the exact side this maps each coherent product amplitude pair through
//! `u` and nothing else — coherent states stay coherent, term counts never
//! change, so no entanglement is created there. On the truncated-Fock side
//! the same unitary lifts to a number-conserving transformation applied
//! block-by-block on fixed total-photon sectors.

use nalgebra::{DMatrix, DVector, Matrix2, Vector2};
use num_complex::Complex64 as C64;

use crate::coherent::{CoherentSuperposition, CoherentTerm};
use crate::error::{Error, Result};
use crate::fock::{Truncated, TwoModeFock};
use crate::kerr::kerr_cat;

/// Unitarity tolerance for [`ModeUnitary::new`].
const UNITARY_TOL: f64 = 1e-12;

/// A validated 2×2 unitary mode transformation.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeUnitary {
    u: Matrix2<C64>,
}

impl ModeUnitary {
    /// Wrap a matrix, rejecting anything whose `u†u` strays from the
    /// identity by more than 1e-12 in any entry.
    pub fn new(u: Matrix2<C64>) -> Result<Self> {
        let dev = (u.adjoint() * u - Matrix2::identity())
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);
        if dev > UNITARY_TOL {
            return Err(Error::NotUnitary { deviation: dev });
        }
        Ok(Self { u })
    }

    /// The 50/50 beam splitter `[[1, 1], [1, -1]]/√2`: real, symmetric and
    /// involutive, mixing the modes into their sum and difference.
    pub fn balanced_splitter() -> Self {
        let s = C64::new(0.5f64.sqrt(), 0.0);
        Self {
            u: Matrix2::new(s, s, s, -s),
        }
    }

    pub fn matrix(&self) -> &Matrix2<C64> {
        &self.u
    }

    /// Hermitian generator `h` with `exp(ih) = u`, via the closed-form
    /// eigendecomposition of a normal 2×2 matrix. Which branch of the
    /// logarithm is taken does not matter downstream: shifting an eigenphase
    /// by 2π shifts the lifted sector phases by full turns.
    fn generator(&self) -> Matrix2<C64> {
        let u = &self.u;
        let (a, b, c, d) = (u[(0, 0)], u[(0, 1)], u[(1, 0)], u[(1, 1)]);
        if b.norm() <= 1e-14 && c.norm() <= 1e-14 {
            // already diagonal
            return Matrix2::new(
                C64::new(a.arg(), 0.0),
                C64::ZERO,
                C64::ZERO,
                C64::new(d.arg(), 0.0),
            );
        }
        let tr = a + d;
        let det = a * d - b * c;
        let disc = (tr * tr - 4.0 * det).sqrt();
        let lam_plus = (tr + disc) / 2.0;
        let lam_minus = (tr - disc) / 2.0;
        // eigenvector of lam_plus: pick the better-conditioned candidate
        let cand1 = Vector2::new(b, lam_plus - a);
        let cand2 = Vector2::new(lam_plus - d, c);
        let v = if cand1.norm() >= cand2.norm() { cand1 } else { cand2 };
        let v = v / C64::new(v.norm(), 0.0);
        // orthogonal complement; eigenvector of lam_minus since u is normal
        let w = Vector2::new(-v[1].conj(), v[0].conj());
        let theta_plus = C64::new(lam_plus.arg(), 0.0);
        let theta_minus = C64::new(lam_minus.arg(), 0.0);
        v * v.adjoint() * theta_plus + w * w.adjoint() * theta_minus
    }
}

/// Map every term's amplitude pair through the unitary; coefficients and
/// term count are untouched.
pub fn transform_coherent(
    s: &CoherentSuperposition,
    u: &ModeUnitary,
) -> Result<CoherentSuperposition> {
    if s.mode_count() != 2 {
        return Err(Error::ModeCountMismatch {
            expected: 2,
            actual: s.mode_count(),
        });
    }
    let terms = s
        .terms()
        .iter()
        .map(|t| {
            let mapped = u.u * Vector2::new(t.amps[0], t.amps[1]);
            CoherentTerm::new(t.coeff, vec![mapped[0], mapped[1]])
        })
        .collect();
    CoherentSuperposition::two_mode(terms)
}

/// Apply the number-conserving Fock-space lift of the unitary.
///
/// A sector of total photon number `p` is complete inside the truncation box
/// iff `p ≤ min(cutoff_a, cutoff_b) - 1`; on each complete sector the lift is
/// the exact induced representation, computed by exponentiating the sector
/// restriction of the Hermitian generator (a tridiagonal matrix, so the
/// eigendecomposition is stable even when binomial-sum matrix elements would
/// cancel catastrophically). Sectors that poke out of the box cannot be
/// transformed unitarily and are dropped, with their probability mass
/// reported.
pub fn transform_fock(s: &TwoModeFock, u: &ModeUnitary) -> Truncated<TwoModeFock> {
    let (da, db) = (s.cutoff_a(), s.cutoff_b());
    let dmin = da.min(db);
    let h = u.generator();
    let mut out = DMatrix::<C64>::zeros(da, db);

    for p in 0..dmin {
        let dim = p + 1;
        // sector basis |k, p-k⟩ for k = 0..p; the generator restricts to a
        // Hermitian tridiagonal matrix on it
        let mut hp = DMatrix::<C64>::zeros(dim, dim);
        for k in 0..=p {
            let diag = h[(0, 0)].re * k as f64 + h[(1, 1)].re * (p - k) as f64;
            hp[(k, k)] = C64::new(diag, 0.0);
            if k < p {
                let weight = (((k + 1) * (p - k)) as f64).sqrt();
                hp[(k + 1, k)] = h[(0, 1)] * weight;
                hp[(k, k + 1)] = h[(1, 0)] * weight;
            }
        }
        let eig = hp.symmetric_eigen();
        let x = DVector::from_fn(dim, |k, _| s.amp(k, p - k));
        let rotated = eig.eigenvectors.adjoint() * x;
        let phased = DVector::from_fn(dim, |k, _| {
            C64::from_polar(1.0, eig.eigenvalues[k]) * rotated[k]
        });
        let y = &eig.eigenvectors * phased;
        for k in 0..=p {
            out[(k, p - k)] = y[k];
        }
    }

    let mut dropped = 0.0;
    for n in 0..da {
        for m in 0..db {
            if n + m >= dmin {
                dropped += s.amp(n, m).norm_sqr();
            }
        }
    }
    Truncated {
        value: TwoModeFock::new(out),
        lost_mass: dropped,
    }
}

/// The two-mode entangled cat: Kerr-evolve `|α⟩` for time `π/M`, attach a
/// vacuum mode, and split on the balanced beam splitter. Each of the `M`
/// terms carries the same coherent amplitude `α·phase/√2` on both output
/// modes.
pub fn make_entangled_cat(alpha: C64, m: usize) -> CoherentSuperposition {
    let cat = kerr_cat(alpha, m)
        .with_vacuum_mode()
        .expect("kerr_cat is single-mode");
    transform_coherent(&cat, &ModeUnitary::balanced_splitter())
        .expect("vacuum attachment yields two modes")
}
