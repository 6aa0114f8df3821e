//! Acceptance suite: every release criterion as an executable check, one
//! test per criterion, each printing a single pass/fail line (visible with
//! `cargo test --test acceptance -- --nocapture`).

use std::time::Instant;

use kerrcat_core::nalgebra::{DMatrix, Matrix2};
use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kerrcat::config::{MethodChoice, SweepConfig};
use kerrcat::energy::{log_log_slope, run_energy_scaling};
use kerrcat::sweep::run_sweep;
use kerrcat_core::{
    entanglement_of_cat, entropy, fourier_coefficients, fourier_coefficients_dft, kerr_cat,
    make_coherent_state, make_number_state, schmidt_fock, tensor, transform_coherent,
    transform_fock, CoherentSuperposition, CoherentTerm, Method, ModeUnitary, TwoModeFock,
};

struct Criterion {
    label: &'static str,
    limit_secs: f64,
    started: Instant,
}

impl Criterion {
    fn start(label: &'static str, limit_secs: f64) -> Self {
        Self {
            label,
            limit_secs,
            started: Instant::now(),
        }
    }

    fn finish(self, pass: bool, detail: String) {
        let elapsed = self.started.elapsed().as_secs_f64();
        println!(
            "criterion {}: {} ({elapsed:.2}s) {detail}",
            self.label,
            if pass { "PASS" } else { "FAIL" }
        );
        assert!(pass, "criterion {} failed: {detail}", self.label);
        assert!(
            elapsed < self.limit_secs,
            "criterion {} exceeded its {}s budget ({elapsed:.2}s)",
            self.label,
            self.limit_secs
        );
    }
}

#[test]
fn criterion_1_fourier_closed_form() {
    let c = Criterion::start("1 (fourier closed form)", 1.0);
    let mut worst_dev = 0.0f64;
    let mut worst_res = 0.0f64;
    for m in 1..=64 {
        let closed = fourier_coefficients(m);
        let dft = fourier_coefficients_dft(m);
        worst_dev = worst_dev.max(closed.max_deviation(&dft));
        worst_res = worst_res
            .max(closed.resubstitution_residual())
            .max(dft.resubstitution_residual());
    }
    let pass = worst_dev < 1e-10 && worst_res < 1e-12;
    c.finish(
        pass,
        format!("max closed-vs-dft {worst_dev:.3e} (< 1e-10), max residual {worst_res:.3e} (< 1e-12)"),
    );
}

#[test]
fn criterion_2_asymptote_log2_m() {
    let c = Criterion::start("2 (entropy asymptote)", 5.0);
    let mut worst = 0.0f64;
    for m in [2usize, 3, 4, 5] {
        let alpha_squared = 25.0 * (m * m) as f64;
        let alpha = C64::new(alpha_squared.sqrt(), 0.0);
        let result = entanglement_of_cat(alpha, m, Method::Gram).expect("gram engine");
        worst = worst.max((result.entropy_bits - (m as f64).log2()).abs());
    }
    c.finish(worst < 0.01, format!("max |E - log2 M| = {worst:.3e} (< 0.01)"));
}

#[test]
fn criterion_3_figure_curves() {
    let c = Criterion::start("3 (curve reproduction)", 30.0);

    // closed-form two-branch eigenvalues, confirmed by the independent
    // truncated-Fock oracle before being trusted
    let s = (-1.0f64).exp();
    let split = s * (2.0 - s * s).sqrt();
    let closed_probs = [(1.0 + split) / 2.0, (1.0 - split) / 2.0];
    let e_closed: f64 = -closed_probs.iter().map(|p| p * p.log2()).sum::<f64>();

    let cat = kerrcat_core::make_entangled_cat(C64::ONE, 2);
    let embedded = cat.to_fock_two(32, 32).expect("two-mode embedding");
    let e_fock = entropy(&schmidt_fock(&embedded.value).expect("schmidt"));
    let oracle_gap = (e_fock - e_closed).abs();
    assert!(
        oracle_gap < 1e-6,
        "fock oracle does not confirm the closed form: {e_fock} vs {e_closed}"
    );

    let config = SweepConfig {
        alpha_squared: vec![1.0, 10.0],
        m: (2..=20).collect(),
        method: MethodChoice::Gram,
        cutoff: None,
        out: None,
        tau_grid: None,
    };
    let rows = run_sweep(&config).expect("sweep");
    assert_eq!(rows.len(), 38);

    let entropy_of = |a2: f64, m: usize| {
        rows.iter()
            .find(|r| r.alpha_squared == a2 && r.m == m)
            .expect("row present")
            .entropy_bits
    };
    let mut ordered = true;
    for m in 2..=20 {
        let low = entropy_of(1.0, m);
        let high = entropy_of(10.0, m);
        ordered &= low <= high + 1e-12 && high <= (m as f64).log2() + 1e-9;
    }
    let anchor = entropy_of(1.0, 2);
    let anchored = (anchor - 0.809).abs() <= 0.001 && (anchor - e_closed).abs() < 1e-9;
    c.finish(
        ordered && anchored,
        format!(
            "curves ordered: {ordered}; E(1,2) = {anchor:.6} vs closed {e_closed:.6} \
             (fock oracle gap {oracle_gap:.2e})"
        ),
    );
}

#[test]
fn criterion_4_engine_equivalence() {
    let c = Criterion::start("4 (engine equivalence)", 60.0);
    let mut worst = 0.0f64;
    for a2 in [0.5f64, 1.0, 2.0, 4.0] {
        for m in 1..=5 {
            let alpha = C64::new(a2.sqrt(), 0.0);
            let gram = entanglement_of_cat(alpha, m, Method::Gram).expect("gram");
            let fock = entanglement_of_cat(alpha, m, Method::Fock).expect("fock");
            worst = worst.max((gram.entropy_bits - fock.entropy_bits).abs());
        }
    }
    c.finish(worst < 1e-6, format!("max |gram - fock| = {worst:.3e} (< 1e-6)"));
}

#[test]
fn criterion_5_single_photon_fixture() {
    let c = Criterion::start("5 (single-photon fixture)", 5.0);
    let d = 6;
    let mut amps = DMatrix::<C64>::zeros(d, d);
    amps[(0, 1)] = C64::new(0.5f64.sqrt(), 0.0);
    amps[(1, 0)] = C64::new(0.5f64.sqrt(), 0.0);
    let shared_photon = TwoModeFock::new(amps);

    let before = entropy(&schmidt_fock(&shared_photon).expect("schmidt"));
    let one_unit = (before - 1.0).abs() < 1e-12;

    let redefined = transform_fock(&shared_photon, &ModeUnitary::balanced_splitter());
    let target = tensor(
        &make_number_state(1, d).expect("in range"),
        &make_number_state(0, d).expect("in range"),
    );
    let fidelity = redefined.value.fidelity(&target).expect("same cutoffs");
    let after = entropy(&schmidt_fock(&redefined.value).expect("schmidt"));
    let collapsed = fidelity > 1.0 - 1e-12 && after < 1e-10;

    c.finish(
        one_unit && collapsed,
        format!("E before = {before:.12}; fidelity to |1,0⟩ = {fidelity:.12}; E after = {after:.2e}"),
    );
}

#[test]
fn criterion_6_linear_optics_closure() {
    let c = Criterion::start("6 (linear-optics closure)", 10.0);
    let splitter = ModeUnitary::balanced_splitter();

    let mut single_terms_stay_single = true;
    let generic = {
        let (ct, st) = (0.6, 0.8);
        let g = C64::from_polar(1.0, 0.3);
        ModeUnitary::new(Matrix2::new(
            g * C64::from_polar(ct, -1.1),
            g * C64::from_polar(st, 1.9),
            g * C64::from_polar(st, -1.9) * -1.0,
            g * C64::from_polar(ct, 1.1),
        ))
        .expect("unitary")
    };
    let sample_unitaries = [splitter.clone(), generic];
    let mut worst_fidelity = 1.0f64;

    for a2 in [0.5f64, 1.0, 2.0, 4.0] {
        let alpha = C64::new((a2 / 2.0).sqrt(), (a2 / 2.0).sqrt());
        let single = CoherentSuperposition::two_mode(vec![CoherentTerm::new(
            C64::new(0.9, -0.1),
            vec![alpha, C64::new(0.2, 0.0)],
        )])
        .expect("two-mode term");
        for u in &sample_unitaries {
            let out = transform_coherent(&single, u).expect("transform");
            single_terms_stay_single &=
                out.terms().len() == 1 && out.terms()[0].coeff == single.terms()[0].coeff;
        }

        // the same split coherent state built through both representations
        let d = kerrcat_core::default_cutoff(alpha);
        let via_fock = transform_fock(
            &tensor(
                &make_coherent_state(alpha, d),
                &make_number_state(0, d).expect("in range"),
            ),
            &splitter,
        );
        let exact = CoherentSuperposition::two_mode(vec![CoherentTerm::new(
            C64::ONE,
            vec![alpha, C64::ZERO],
        )])
        .expect("two-mode term");
        let via_coherent = transform_coherent(&exact, &splitter)
            .expect("transform")
            .to_fock_two(d, d)
            .expect("embedding");
        let fidelity = via_fock
            .value
            .fidelity(&via_coherent.value)
            .expect("same cutoffs");
        worst_fidelity = worst_fidelity.min(fidelity);
    }

    let pass = single_terms_stay_single && worst_fidelity > 1.0 - 1e-8;
    c.finish(
        pass,
        format!(
            "single-term closure: {single_terms_stay_single}; \
             worst cross-representation fidelity = {worst_fidelity:.12}"
        ),
    );
}

#[test]
fn criterion_7_energy_scaling_exponent() {
    let c = Criterion::start("7 (energy scaling)", 120.0);
    let rows = run_energy_scaling(&[2, 4, 8], 0.99).expect("search succeeds");
    let points: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| (r.m as f64, r.alpha_squared_min))
        .collect();
    let slope = log_log_slope(&points);
    let pass = (1.5..=2.5).contains(&slope);
    c.finish(
        pass,
        format!(
            "fitted log-log slope = {slope:.4} (window [1.5, 2.5]); thresholds {:?}",
            points
                .iter()
                .map(|(m, a2)| format!("M={m}: |α|²={a2:.3}"))
                .collect::<Vec<_>>()
        ),
    );
}

#[test]
fn criterion_8_randomized_norm_preservation() {
    let c = Criterion::start("8 (randomized unitarity)", 30.0);
    let mut rng = ChaCha8Rng::seed_from_u64(20260810);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let a2: f64 = rng.gen_range(0.0..25.0);
        let phase: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let alpha = C64::from_polar(a2.sqrt(), phase);
        let m: usize = rng.gen_range(1..=12);
        let u = {
            let theta: f64 = rng.gen_range(0.0..std::f64::consts::PI);
            let (phi, psi, chi): (f64, f64, f64) = (
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
            );
            let g = C64::from_polar(1.0, phi);
            ModeUnitary::new(Matrix2::new(
                g * C64::from_polar(theta.cos(), psi),
                g * C64::from_polar(theta.sin(), chi),
                g * C64::from_polar(theta.sin(), -chi) * -1.0,
                g * C64::from_polar(theta.cos(), -psi),
            ))
            .expect("parametrized unitary")
        };
        let state = kerr_cat(alpha, m).with_vacuum_mode().expect("one mode in");
        let out = transform_coherent(&state, &u).expect("two modes");
        let norm = out.norm_squared().expect("nonempty");
        worst = worst.max((norm - 1.0).abs());
    }
    c.finish(worst < 1e-9, format!("max |norm² - 1| = {worst:.3e} over 1000 cases (< 1e-9)"));
}
