//! Schmidt spectra and entanglement entropy by two independent engines.
//!
//! The Fock engine takes the singular values of the truncated amplitude
//! matrix. The Gram engine never truncates: for a state
//! `Σ_q c_q |a_q⟩|b_q⟩` over non-orthogonal coherent states it builds the
//! `M×M` overlap (Gram) matrices and reads the nonzero reduced-state
//! eigenvalues off a similarity-transformed `M×M` Hermitian problem. The two
//! engines share no code path past the state construction, which is what
//! makes their agreement a meaningful check.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;

use crate::coherent::{overlap, CoherentSuperposition};
use crate::error::{Error, Result};
use crate::fock::{default_cutoff, FockVector, TwoModeFock};
use crate::optics::make_entangled_cat;

/// Schmidt probabilities, descending, clipped to `[0, 1]`, summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtSpectrum {
    probs: Vec<f64>,
}

impl SchmidtSpectrum {
    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }
}

/// Which engine produced a result.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum Method {
    Gram,
    Fock,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::Gram => "gram",
            Method::Fock => "fock",
        }
    }
}

/// Entropy plus the spectrum it came from and an error estimate for the
/// route that produced it (truncation tail for Fock, conditioning for Gram).
#[derive(Debug, Clone)]
pub struct EntanglementResult {
    pub entropy_bits: f64,
    pub spectrum: SchmidtSpectrum,
    pub method: Method,
    pub certified_error: f64,
}

/// Eigenvalues in `[-1e-12, 0)` are rounding noise and get clipped to zero;
/// anything more negative is a construction bug and is reported as an error.
const EIGEN_CLIP_FLOOR: f64 = -1e-12;

/// Schmidt probabilities below this are dropped from spectra.
const PROB_DROP_TOL: f64 = 1e-14;

/// Gram eigenvalues below `1e-12 · max` count as the numerical null space.
const GRAM_NULL_REL_TOL: f64 = 1e-12;

/// Trace recovered from the clamped Gram problem must be within this of one.
const GRAM_TRACE_TOL: f64 = 1e-6;

fn clip_and_sort(mut raw: Vec<f64>) -> Result<Vec<f64>> {
    for value in &mut raw {
        if *value < EIGEN_CLIP_FLOOR {
            return Err(Error::NegativeEigenvalue { value: *value });
        }
        if *value < 0.0 {
            *value = 0.0;
        }
    }
    raw.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
    Ok(raw)
}

/// Schmidt probabilities of a truncated two-mode state: squared singular
/// values of the amplitude matrix. The state is renormalized internally; a
/// zero-norm state is an error.
pub fn schmidt_fock(s: &TwoModeFock) -> Result<SchmidtSpectrum> {
    let norm_sqr = s.norm_sqr();
    if norm_sqr < 1e-12 {
        return Err(Error::ZeroNorm);
    }
    let singular = s.matrix().clone().singular_values();
    let raw: Vec<f64> = singular.iter().map(|sv| sv * sv / norm_sqr).collect();
    let mut probs = clip_and_sort(raw)?;
    probs.retain(|p| *p >= PROB_DROP_TOL);
    Ok(SchmidtSpectrum { probs })
}

/// Full Schmidt decomposition of a truncated two-mode state: probabilities
/// along with the orthonormal factor states of each mode, so that
/// `Σ_q √p_q |left_q⟩|right_q⟩` reconstructs the (normalized) input.
pub struct SchmidtDecomposition {
    pub spectrum: SchmidtSpectrum,
    pub left: Vec<FockVector>,
    pub right: Vec<FockVector>,
}

pub fn schmidt_decomposition_fock(s: &TwoModeFock) -> Result<SchmidtDecomposition> {
    let norm_sqr = s.norm_sqr();
    if norm_sqr < 1e-12 {
        return Err(Error::ZeroNorm);
    }
    let svd = s.matrix().clone().svd(true, true);
    let u = svd.u.expect("requested");
    let v_t = svd.v_t.expect("requested");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&i, &j| {
        svd.singular_values[j]
            .partial_cmp(&svd.singular_values[i])
            .expect("finite")
    });

    let mut probs = Vec::new();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for &q in &order {
        let p = svd.singular_values[q].powi(2) / norm_sqr;
        if p < PROB_DROP_TOL {
            continue;
        }
        probs.push(p);
        left.push(FockVector::new(u.column(q).iter().copied().collect()));
        right.push(FockVector::new(v_t.row(q).iter().copied().collect()));
    }
    Ok(SchmidtDecomposition {
        spectrum: SchmidtSpectrum { probs },
        left,
        right,
    })
}

struct GramDiagnostics {
    condition: f64,
    trace_deviation: f64,
    dropped_dims: usize,
}

/// Shared core of the Gram engine.
///
/// With `W_{qr} = c_q conj(c_r) (G_B)_{rq}` the reduced state of mode A is
/// `ρ_A = Σ_{qr} W_{qr} |a_q⟩⟨a_r|`, whose nonzero eigenvalues solve
/// `W G_A v = λ v`. That product is similar to the Hermitian matrix
/// `G_A^{1/2} W G_A^{1/2}`, which is what gets diagonalized here. The square
/// root comes from an eigendecomposition of `G_A` in which eigenvalues below
/// `1e-12 · max` are treated as exact null directions and dropped; how much
/// state weight the dropping cost shows up as the trace deviation.
fn gram_spectrum_diagnosed(
    s: &CoherentSuperposition,
) -> Result<(SchmidtSpectrum, GramDiagnostics)> {
    if s.mode_count() != 2 {
        return Err(Error::ModeCountMismatch {
            expected: 2,
            actual: s.mode_count(),
        });
    }
    if s.terms().is_empty() {
        return Err(Error::EmptySuperposition);
    }
    let norm_sqr = s.norm_squared()?;
    if norm_sqr < 1e-12 {
        return Err(Error::ZeroNorm);
    }
    let terms = s.terms();
    let m = terms.len();

    let gram_a = DMatrix::<C64>::from_fn(m, m, |i, j| overlap(terms[i].amps[0], terms[j].amps[0]));
    let gram_b = DMatrix::<C64>::from_fn(m, m, |i, j| overlap(terms[i].amps[1], terms[j].amps[1]));
    let w = DMatrix::<C64>::from_fn(m, m, |q, r| {
        terms[q].coeff * terms[r].coeff.conj() * gram_b[(r, q)] / norm_sqr
    });

    let eig = gram_a.symmetric_eigen();
    let g_max = eig.eigenvalues.iter().cloned().fold(f64::MIN, f64::max);
    let kept: Vec<usize> = (0..m)
        .filter(|&i| eig.eigenvalues[i] >= GRAM_NULL_REL_TOL * g_max)
        .collect();
    let dropped_dims = m - kept.len();
    let g_min_kept = kept
        .iter()
        .map(|&i| eig.eigenvalues[i])
        .fold(f64::MAX, f64::min);
    let condition = g_max / g_min_kept;

    // B = D^{1/2} Q† W Q D^{1/2} restricted to the kept directions
    let k = kept.len();
    let mut q_kept = DMatrix::<C64>::zeros(m, k);
    for (col, &i) in kept.iter().enumerate() {
        q_kept.set_column(col, &eig.eigenvectors.column(i));
    }
    let sqrt_g = DVector::<f64>::from_iterator(k, kept.iter().map(|&i| eig.eigenvalues[i].sqrt()));
    let mut b = q_kept.adjoint() * w * &q_kept;
    for row in 0..k {
        for col in 0..k {
            b[(row, col)] *= sqrt_g[row] * sqrt_g[col];
        }
    }
    let b = (b.clone() + b.adjoint()) / C64::new(2.0, 0.0);

    let raw: Vec<f64> = b.symmetric_eigenvalues().iter().cloned().collect();
    let mut probs = clip_and_sort(raw)?;
    let trace: f64 = probs.iter().sum();
    let trace_deviation = (trace - 1.0).abs();
    if trace_deviation > GRAM_TRACE_TOL {
        return Err(Error::IllConditioned {
            condition,
            trace_deviation,
        });
    }
    for p in &mut probs {
        *p /= trace;
    }
    probs.retain(|p| *p >= PROB_DROP_TOL);
    Ok((
        SchmidtSpectrum { probs },
        GramDiagnostics {
            condition,
            trace_deviation,
            dropped_dims,
        },
    ))
}

/// Exact Schmidt probabilities of a two-mode coherent superposition via the
/// Gram-matrix spectral route; no Fock cutoff is involved.
pub fn gram_spectrum(s: &CoherentSuperposition) -> Result<SchmidtSpectrum> {
    gram_spectrum_diagnosed(s).map(|(spectrum, _)| spectrum)
}

/// Entanglement entropy in bits, with the `0·log 0 = 0` convention.
pub fn entropy(spectrum: &SchmidtSpectrum) -> f64 {
    spectrum
        .probs
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.log2())
        .sum()
}

/// End-to-end pipeline: build the entangled cat for `(α, M)`, collapse
/// coincident branches, and run the chosen entropy engine. `cutoff` overrides
/// the per-mode Fock cutoff heuristic and is ignored by the Gram engine.
pub fn entanglement_of_cat_with_cutoff(
    alpha: C64,
    m: usize,
    method: Method,
    cutoff: Option<usize>,
) -> Result<EntanglementResult> {
    let cat = make_entangled_cat(alpha, m).merge_terms(1e-12);
    match method {
        Method::Gram => {
            let (spectrum, diag) = gram_spectrum_diagnosed(&cat)?;
            let certified_error =
                diag.trace_deviation + f64::EPSILON * cat.terms().len() as f64 * diag.condition;
            let _ = diag.dropped_dims;
            Ok(EntanglementResult {
                entropy_bits: entropy(&spectrum),
                spectrum,
                method,
                certified_error,
            })
        }
        Method::Fock => {
            let per_mode = |mode: usize| {
                cat.terms()
                    .iter()
                    .map(|t| t.amps[mode])
                    .max_by(|a, b| a.norm().partial_cmp(&b.norm()).expect("finite"))
                    .unwrap_or(C64::ZERO)
            };
            let da = cutoff.unwrap_or_else(|| default_cutoff(per_mode(0)));
            let db = cutoff.unwrap_or_else(|| default_cutoff(per_mode(1)));
            let embedded = cat.to_fock_two(da, db)?;
            let norm_deviation = (embedded.value.norm_sqr() - 1.0).abs();
            let spectrum = schmidt_fock(&embedded.value)?;
            let certified_error =
                embedded.lost_mass + norm_deviation + da.max(db) as f64 * f64::EPSILON;
            Ok(EntanglementResult {
                entropy_bits: entropy(&spectrum),
                spectrum,
                method,
                certified_error,
            })
        }
    }
}

pub fn entanglement_of_cat(alpha: C64, m: usize, method: Method) -> Result<EntanglementResult> {
    entanglement_of_cat_with_cutoff(alpha, m, method, None)
}
