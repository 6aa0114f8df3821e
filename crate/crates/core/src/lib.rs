//! Entangled coherent states of two optical modes, built from a Kerr
//! nonlinearity and a beam splitter, with their entanglement entropy
//! computed by two independent engines.
//!
//! The crate is organized around two representations of the same states:
//!
//! * [`fock`] — truncated number-basis vectors and matrices with explicit
//!   tail accounting;
//! * [`coherent`] — exact finite superpositions of coherent states with
//!   closed-form overlaps.
//!
//! [`kerr`] generates the cat superpositions, [`optics`] mixes modes (on
//! either representation), and [`entanglement`] extracts Schmidt spectra and
//! entropies, again on either representation, so every pipeline result can
//! be cross-checked against an independently-built one.

pub mod coherent;
pub mod entanglement;
pub mod error;
pub mod fock;
pub mod kerr;
pub mod optics;

// these types appear in the public API
pub use nalgebra;
pub use num_complex;

pub use error::{Error, Result};

pub use coherent::{overlap, CoherentSuperposition, CoherentTerm};
pub use entanglement::{
    entanglement_of_cat, entanglement_of_cat_with_cutoff, entropy, gram_spectrum, schmidt_fock,
    EntanglementResult, Method, SchmidtSpectrum,
};
pub use fock::{
    apply_annihilation, apply_creation, apply_number, default_cutoff, inner_product,
    make_coherent_state, make_number_state, tensor, truncation_tail, FockVector, Truncated,
    TwoModeFock,
};
pub use kerr::{
    evolve_fock, fourier_coefficients, fourier_coefficients_dft, kerr_cat, kerr_phase,
    DimensionlessTime, FourierCoefficients, Parity,
};
pub use optics::{make_entangled_cat, transform_coherent, transform_fock, ModeUnitary};
