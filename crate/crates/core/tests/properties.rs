//! Property tests for the algebraic invariants the library is built on.

use nalgebra::Matrix2;
use num_complex::Complex64 as C64;
use proptest::prelude::*;

use kerrcat_core::{
    apply_annihilation, apply_creation, default_cutoff, evolve_fock, fourier_coefficients,
    fourier_coefficients_dft, inner_product, kerr_cat, make_coherent_state, make_number_state,
    overlap, transform_coherent, CoherentSuperposition, CoherentTerm, DimensionlessTime,
    ModeUnitary,
};

fn amp_strategy() -> impl Strategy<Value = C64> {
    (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(re, im)| C64::new(re, im))
}

fn unitary_strategy() -> impl Strategy<Value = ModeUnitary> {
    (
        0.0f64..std::f64::consts::PI,
        -3.0f64..3.0,
        -3.0f64..3.0,
        -3.0f64..3.0,
    )
        .prop_map(|(theta, phi, psi, chi)| {
            let (ct, st) = (theta.cos(), theta.sin());
            let g = C64::from_polar(1.0, phi);
            ModeUnitary::new(Matrix2::new(
                g * C64::from_polar(ct, psi),
                g * C64::from_polar(st, chi),
                g * C64::from_polar(st, -chi) * -1.0,
                g * C64::from_polar(ct, -psi),
            ))
            .expect("parametrized matrices are unitary")
        })
}

proptest! {
    #[test]
    fn overlap_is_hermitian(a in amp_strategy(), b in amp_strategy()) {
        let lhs = overlap(a, b);
        let rhs = overlap(b, a).conj();
        prop_assert!((lhs - rhs).norm() < 1e-14);
    }

    #[test]
    fn overlap_modulus_bounded_by_one(a in amp_strategy(), b in amp_strategy()) {
        let m = overlap(a, b).norm();
        prop_assert!(m <= 1.0 + 1e-14);
        // equality only on the diagonal
        if (a - b).norm() > 1e-3 {
            prop_assert!(m < 1.0);
        }
    }

    #[test]
    fn overlap_law_against_truncated_inner_product(a in amp_strategy(), b in amp_strategy()) {
        let d = default_cutoff(a).max(default_cutoff(b));
        let u = make_coherent_state(a, d);
        let v = make_coherent_state(b, d);
        let ip = inner_product(&u, &v).unwrap();
        let expected = (-(a - b).norm_sqr()).exp();
        prop_assert!((ip.norm_sqr() - expected).abs() < 1e-8);
    }

    #[test]
    fn ladder_identity_on_basis_states(n in 0usize..20, extra in 2usize..10) {
        // a a† |n⟩ = (n+1)|n⟩ whenever n+1 is below the cutoff
        let d = n + extra;
        let s = make_number_state(n, d).unwrap();
        let out = apply_annihilation(&apply_creation(&s).value);
        prop_assert!((out.amp(n) - C64::new((n + 1) as f64, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn kerr_evolution_preserves_norm(a in amp_strategy(), tau in -4.0f64..4.0) {
        let s = make_coherent_state(a, default_cutoff(a));
        let out = evolve_fock(&s, DimensionlessTime(tau));
        prop_assert!((out.norm_sqr() - s.norm_sqr()).abs() < 1e-13);
    }

    #[test]
    fn closed_form_coefficients_match_dft(m in 1usize..=64) {
        let dev = fourier_coefficients(m).max_deviation(&fourier_coefficients_dft(m));
        prop_assert!(dev < 1e-10);
        prop_assert!(fourier_coefficients(m).resubstitution_residual() < 1e-12);
    }

    #[test]
    fn cat_states_are_normalized(a in amp_strategy(), m in 1usize..=12) {
        let n = kerr_cat(a, m).norm_squared().unwrap();
        prop_assert!((n - 1.0).abs() < 1e-10);
    }

    #[test]
    fn mode_mixing_preserves_norm(a in amp_strategy(), m in 1usize..=8, u in unitary_strategy()) {
        let cat = kerr_cat(a, m).with_vacuum_mode().unwrap();
        let out = transform_coherent(&cat, &u).unwrap();
        let before = cat.norm_squared().unwrap();
        let after = out.norm_squared().unwrap();
        prop_assert!((before - after).abs() < 1e-10);
    }

    #[test]
    fn single_terms_stay_single(a in amp_strategy(), b in amp_strategy(), u in unitary_strategy()) {
        let s = CoherentSuperposition::two_mode(
            vec![CoherentTerm::new(C64::new(0.8, -0.6), vec![a, b])],
        ).unwrap();
        let out = transform_coherent(&s, &u).unwrap();
        prop_assert_eq!(out.terms().len(), 1);
        prop_assert_eq!(out.terms()[0].coeff, s.terms()[0].coeff);
    }

    #[test]
    fn to_fock_norm_error_within_certified_tail(
        a in amp_strategy(),
        b in amp_strategy(),
        re in -0.9f64..0.9,
        im in -0.9f64..0.9,
    ) {
        let s = CoherentSuperposition::single_mode(vec![
            CoherentTerm::new(C64::new(re, im), vec![a]),
            CoherentTerm::new(C64::new(0.5, 0.1), vec![b]),
        ]).unwrap();
        let exact = s.norm_squared().unwrap();
        let cutoff = default_cutoff(a).max(default_cutoff(b));
        let embedded = s.to_fock_single(cutoff).unwrap();
        let diff = (embedded.value.norm_sqr() - exact).abs();
        let slack = embedded.lost_mass + 2.0 * embedded.lost_mass.sqrt() * exact.sqrt();
        prop_assert!(diff <= slack + 1e-12);
    }
}
