//! Exact algebra of finite superpositions of coherent states.
//!
//! A state is kept as a list of `(coefficient, per-mode amplitudes)` terms.
//! Inner products between terms have the closed form [`overlap`], so norms
//! and Gram matrices are exact — no cutoff enters until a superposition is
//! embedded into truncated Fock space with [`CoherentSuperposition::to_fock_single`]
//! or [`CoherentSuperposition::to_fock_two`].

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{make_coherent_state, tensor, truncation_tail, FockVector, Truncated, TwoModeFock};

/// One coherent-product term `coeff · |amps[0]⟩ ⊗ |amps[1]⟩ ⊗ …`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoherentTerm {
    pub coeff: C64,
    pub amps: Vec<C64>,
}

impl CoherentTerm {
    pub fn new(coeff: C64, amps: Vec<C64>) -> Self {
        Self { coeff, amps }
    }
}

/// Finite superposition of one- or two-mode coherent products.
#[derive(Debug, Clone, PartialEq)]
pub struct CoherentSuperposition {
    mode_count: usize,
    terms: Vec<CoherentTerm>,
}

/// `⟨α|β⟩ = exp(−|α|²/2 − |β|²/2 + conj(α)·β)`, exact closed form.
pub fn overlap(alpha: C64, beta: C64) -> C64 {
    (C64::new(-(alpha.norm_sqr() + beta.norm_sqr()) / 2.0, 0.0) + alpha.conj() * beta).exp()
}

/// Tolerance on the imaginary residue of quantities that must come out real.
const IMAG_RESIDUE_TOL: f64 = 1e-12;

/// Coefficients smaller than this are dropped when merging terms.
const COEFF_DROP_TOL: f64 = 1e-14;

impl CoherentSuperposition {
    pub fn new(mode_count: usize, terms: Vec<CoherentTerm>) -> Result<Self> {
        assert!(
            mode_count == 1 || mode_count == 2,
            "mode count must be 1 or 2"
        );
        for term in &terms {
            if term.amps.len() != mode_count {
                return Err(Error::ModeCountMismatch {
                    expected: mode_count,
                    actual: term.amps.len(),
                });
            }
        }
        Ok(Self { mode_count, terms })
    }

    pub fn single_mode(terms: Vec<CoherentTerm>) -> Result<Self> {
        Self::new(1, terms)
    }

    pub fn two_mode(terms: Vec<CoherentTerm>) -> Result<Self> {
        Self::new(2, terms)
    }

    pub fn mode_count(&self) -> usize {
        self.mode_count
    }

    pub fn terms(&self) -> &[CoherentTerm] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Extend a single-mode superposition with a vacuum second mode.
    pub fn with_vacuum_mode(&self) -> Result<Self> {
        if self.mode_count != 1 {
            return Err(Error::ModeCountMismatch {
                expected: 1,
                actual: self.mode_count,
            });
        }
        let terms = self
            .terms
            .iter()
            .map(|t| CoherentTerm::new(t.coeff, vec![t.amps[0], C64::ZERO]))
            .collect();
        Self::new(2, terms)
    }

    /// Squared norm via the double sum of coefficient-weighted overlap
    /// products. The result must be real; an imaginary residue above 1e-12
    /// means the coefficients are corrupt and is reported as an error rather
    /// than discarded.
    pub fn norm_squared(&self) -> Result<f64> {
        if self.terms.is_empty() {
            return Err(Error::EmptySuperposition);
        }
        let mut total = C64::ZERO;
        for q in &self.terms {
            for r in &self.terms {
                let mut gram = r.coeff.conj() * q.coeff;
                for (ar, aq) in r.amps.iter().zip(q.amps.iter()) {
                    gram *= overlap(*ar, *aq);
                }
                total += gram;
            }
        }
        if total.im.abs() >= IMAG_RESIDUE_TOL {
            return Err(Error::ImaginaryResidue {
                residue: total.im.abs(),
                tolerance: IMAG_RESIDUE_TOL,
            });
        }
        Ok(total.re)
    }

    /// Combine terms whose amplitude tuples coincide within `tol` per mode
    /// (absolute, on the complex modulus of the difference), then drop terms
    /// with negligible coefficients. Term order is preserved by first
    /// occurrence, so the result is deterministic.
    pub fn merge_terms(&self, tol: f64) -> Self {
        assert!(tol >= 0.0, "tolerance must be nonnegative");
        let mut merged: Vec<CoherentTerm> = Vec::new();
        for term in &self.terms {
            let slot = merged.iter_mut().find(|m| {
                m.amps
                    .iter()
                    .zip(term.amps.iter())
                    .all(|(a, b)| (a - b).norm() <= tol)
            });
            match slot {
                Some(m) => m.coeff += term.coeff,
                None => merged.push(term.clone()),
            }
        }
        merged.retain(|t| t.coeff.norm() >= COEFF_DROP_TOL);
        Self {
            mode_count: self.mode_count,
            terms: merged,
        }
    }

    /// Embed a single-mode superposition into Fock space at the given cutoff.
    ///
    /// `lost_mass` bounds the squared norm lost to truncation:
    /// `(Σ_q |c_q| √tail_q)²`.
    pub fn to_fock_single(&self, cutoff: usize) -> Result<Truncated<FockVector>> {
        if self.mode_count != 1 {
            return Err(Error::ModeCountMismatch {
                expected: 1,
                actual: self.mode_count,
            });
        }
        let mut amps = vec![C64::ZERO; cutoff];
        let mut tail_amp = 0.0;
        for term in &self.terms {
            let state = make_coherent_state(term.amps[0], cutoff);
            for (n, c) in state.amps().iter().enumerate() {
                amps[n] += term.coeff * c;
            }
            tail_amp += term.coeff.norm() * truncation_tail(term.amps[0], cutoff).sqrt();
        }
        Ok(Truncated {
            value: FockVector::new(amps),
            lost_mass: tail_amp * tail_amp,
        })
    }

    /// Embed a two-mode superposition into Fock space at the given cutoffs.
    pub fn to_fock_two(&self, cutoff_a: usize, cutoff_b: usize) -> Result<Truncated<TwoModeFock>> {
        if self.mode_count != 2 {
            return Err(Error::ModeCountMismatch {
                expected: 2,
                actual: self.mode_count,
            });
        }
        let mut amps = TwoModeFock::zero(cutoff_a, cutoff_b).matrix().clone();
        let mut tail_amp = 0.0;
        for term in &self.terms {
            let a = make_coherent_state(term.amps[0], cutoff_a);
            let b = make_coherent_state(term.amps[1], cutoff_b);
            let product = tensor(&a, &b);
            amps += product.matrix() * term.coeff;
            // per-term squared tail of the product state is ≤ tail_A + tail_B
            let t = truncation_tail(term.amps[0], cutoff_a)
                + truncation_tail(term.amps[1], cutoff_b);
            tail_amp += term.coeff.norm() * t.sqrt();
        }
        Ok(Truncated {
            value: TwoModeFock::new(amps),
            lost_mass: tail_amp * tail_amp,
        })
    }
}

// JSON wire format: { "modeCount": n, "terms": [{ "coeff": [re, im],
// "amps": [[re, im], ...] }] } — field names are part of the contract.

#[derive(Serialize, Deserialize)]
struct TermWire {
    coeff: [f64; 2],
    amps: Vec<[f64; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct SuperpositionWire {
    mode_count: usize,
    terms: Vec<TermWire>,
}

impl Serialize for CoherentSuperposition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let wire = SuperpositionWire {
            mode_count: self.mode_count,
            terms: self
                .terms
                .iter()
                .map(|t| TermWire {
                    coeff: [t.coeff.re, t.coeff.im],
                    amps: t.amps.iter().map(|a| [a.re, a.im]).collect(),
                })
                .collect(),
        };
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CoherentSuperposition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = SuperpositionWire::deserialize(deserializer)?;
        let terms = wire
            .terms
            .into_iter()
            .map(|t| {
                CoherentTerm::new(
                    C64::new(t.coeff[0], t.coeff[1]),
                    t.amps.iter().map(|a| C64::new(a[0], a[1])).collect(),
                )
            })
            .collect();
        CoherentSuperposition::new(wire.mode_count, terms).map_err(serde::de::Error::custom)
    }
}
