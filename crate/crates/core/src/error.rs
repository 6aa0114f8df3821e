//! Error type shared by all modules of the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("fock index {index} is out of range for cutoff {cutoff}")]
    IndexOutOfRange { index: usize, cutoff: usize },

    #[error("cutoff mismatch: {left} vs {right}")]
    CutoffMismatch { left: usize, right: usize },

    #[error("expected a superposition with {expected} mode(s), got {actual}")]
    ModeCountMismatch { expected: usize, actual: usize },

    #[error("matrix is not unitary: max deviation from identity {deviation:.3e}")]
    NotUnitary { deviation: f64 },

    #[error("superposition has no terms")]
    EmptySuperposition,

    /// A quantity that must be real came out with a nonnegligible imaginary
    /// part; this signals a coefficient bookkeeping bug upstream, not noise.
    #[error("imaginary residue {residue:.3e} exceeds tolerance {tolerance:.3e}")]
    ImaginaryResidue { residue: f64, tolerance: f64 },

    #[error("state has zero norm")]
    ZeroNorm,

    #[error(
        "gram matrix too ill-conditioned (condition number {condition:.3e}, \
         spectrum trace deviation {trace_deviation:.3e})"
    )]
    IllConditioned { condition: f64, trace_deviation: f64 },

    #[error("eigenvalue {value:.3e} is below the -1e-12 clipping floor")]
    NegativeEigenvalue { value: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
