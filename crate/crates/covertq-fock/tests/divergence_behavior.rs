//! The χ²-divergence: agreement with the classical divergence on diagonal
//! states, tensor factorization, rank diagnostics, the per-slot coefficient
//! anchors, and recovery of the covertness constant.

use approx::{assert_abs_diff_eq, assert_relative_eq};
use covertq_core::{covertness_constant, ChannelParams};
use covertq_fock::{
    c_cov_from_coefficient, chi2_coefficient, chi2_divergence, fock_state, thermal_state,
    willie_rail_state, willie_signal_state, DensityOperator, FockError, RailInput, SignalSpec,
};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Random strictly-positive diagonal density operator.
fn random_diagonal(rng: &mut ChaCha8Rng, cutoff: usize) -> DensityOperator {
    let raw: Vec<f64> = (0..cutoff).map(|_| rng.random_range(0.05..1.0)).collect();
    let norm: f64 = raw.iter().sum();
    let mut m = DMatrix::<Complex64>::zeros(cutoff, cutoff);
    for (k, w) in raw.iter().enumerate() {
        m[(k, k)] = Complex64::new(w / norm, 0.0);
    }
    DensityOperator::new(m, cutoff, 1).unwrap()
}

/// Classical χ² between two positive distributions.
fn classical_chi2(p: &[f64], q: &[f64]) -> f64 {
    p.iter()
        .zip(q)
        .map(|(&pk, &qk)| (pk - qk).powi(2) / qk)
        .sum()
}

#[test]
fn divergence_of_a_state_with_itself_vanishes() {
    let thermal = thermal_state(0.12, 8).unwrap();
    let outcome = chi2_divergence(&thermal, &thermal).unwrap();
    assert!(outcome.value >= 0.0);
    assert!(outcome.value <= 1e-10);
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let rho = random_diagonal(&mut rng, 6);
    let outcome = chi2_divergence(&rho, &rho).unwrap();
    assert!(outcome.value <= 1e-10);
}

#[test]
fn divergence_matches_the_classical_formula_on_diagonal_states() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..50 {
        let rho = random_diagonal(&mut rng, 6);
        let sigma = random_diagonal(&mut rng, 6);
        let outcome = chi2_divergence(&rho, &sigma).unwrap();
        let expected = classical_chi2(&rho.diagonal(), &sigma.diagonal());
        assert_relative_eq!(outcome.value, expected, max_relative = 1e-9);
        assert_eq!(outcome.rank_dropped, 0);
        assert!(!outcome.support_overlap);
    }
}

#[test]
fn divergence_is_nonnegative_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..50 {
        let rho = random_diagonal(&mut rng, 5);
        let sigma = random_diagonal(&mut rng, 5);
        assert!(chi2_divergence(&rho, &sigma).unwrap().value >= 0.0);
    }
}

#[test]
fn divergence_factorizes_over_tensor_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for _ in 0..20 {
        let rho1 = random_diagonal(&mut rng, 4);
        let rho2 = random_diagonal(&mut rng, 4);
        let sigma1 = random_diagonal(&mut rng, 4);
        let sigma2 = random_diagonal(&mut rng, 4);
        let joint = chi2_divergence(&rho1.tensor(&rho2).unwrap(), &sigma1.tensor(&sigma2).unwrap())
            .unwrap()
            .value;
        let chi1 = chi2_divergence(&rho1, &sigma1).unwrap().value;
        let chi2 = chi2_divergence(&rho2, &sigma2).unwrap().value;
        let expected = (1.0 + chi1) * (1.0 + chi2) - 1.0;
        assert_abs_diff_eq!(joint, expected, epsilon = 1e-9 * (1.0 + expected.abs()));
    }
}

#[test]
fn divergence_rejects_mismatched_dimensions() {
    let rho = thermal_state(0.12, 5).unwrap();
    let sigma = thermal_state(0.12, 6).unwrap();
    assert!(matches!(
        chi2_divergence(&rho, &sigma),
        Err(FockError::DimensionMismatch { .. })
    ));
}

#[test]
fn rank_deficient_reference_with_overlapping_signal_is_flagged() {
    // The vacuum reference has rank 1; a single-photon state lives entirely
    // in the dropped subspace.
    let sigma = thermal_state(0.0, 4).unwrap();
    let rho = fock_state(1, 4).unwrap();
    let outcome = chi2_divergence(&rho, &sigma).unwrap();
    assert_eq!(outcome.rank_dropped, 3);
    assert!(outcome.support_overlap);
}

#[test]
fn working_point_drops_no_meaningful_support_at_cutoff_ten() {
    // At cutoff 10 the two-rail background state has eigenvalue products
    // below the rank threshold, but the signal state carries no measurable
    // mass there: the diagnostics must not cry wolf.
    let w_vac = willie_rail_state(RailInput::Vacuum, 0.9, 0.12, 10).unwrap();
    let w_photon = willie_rail_state(RailInput::SinglePhoton, 0.9, 0.12, 10).unwrap();
    let rho = w_vac.tensor(&w_photon).unwrap();
    let sigma = w_vac.tensor(&w_vac).unwrap();
    let outcome = chi2_divergence(&rho, &sigma).unwrap();
    assert!(!outcome.support_overlap);
}

#[test]
fn coefficient_converges_to_the_published_values() {
    assert_abs_diff_eq!(
        chi2_coefficient(0.9, 0.12, 7).unwrap(),
        0.08357102,
        epsilon = 2e-6
    );
    assert_abs_diff_eq!(
        chi2_coefficient(0.9, 0.12, 10).unwrap(),
        0.08356733,
        epsilon = 1e-6
    );
}

#[test]
fn coefficient_rejects_zero_background() {
    assert!(matches!(
        chi2_coefficient(0.9, 0.0, 6),
        Err(FockError::InvalidThermalOccupation(_))
    ));
}

#[test]
fn rail_choice_does_not_change_the_coefficient() {
    let cutoff = 7;
    let background = willie_signal_state(SignalSpec::Vacuum, 0.9, 0.12, cutoff).unwrap();
    let zero = willie_signal_state(SignalSpec::logical_zero(), 0.9, 0.12, cutoff).unwrap();
    let one = willie_signal_state(SignalSpec::logical_one(), 0.9, 0.12, cutoff).unwrap();
    let chi_zero = chi2_divergence(&zero, &background).unwrap().value;
    let chi_one = chi2_divergence(&one, &background).unwrap().value;
    assert_abs_diff_eq!(chi_zero, chi_one, epsilon = 1e-12);
    // The dual-rail construction reduces to the rail tensor product for a
    // definite logical state.
    let w_vac = willie_rail_state(RailInput::Vacuum, 0.9, 0.12, cutoff).unwrap();
    let w_photon = willie_rail_state(RailInput::SinglePhoton, 0.9, 0.12, cutoff).unwrap();
    let direct = w_vac.tensor(&w_photon).unwrap();
    let dev = zero.matrix() - direct.matrix();
    let max_dev = dev.iter().map(|z| z.norm()).fold(0.0, f64::max);
    assert!(max_dev <= 1e-12);
    // And it matches the coefficient entry point.
    assert_abs_diff_eq!(
        chi_zero,
        chi2_coefficient(0.9, 0.12, cutoff).unwrap(),
        epsilon = 1e-12
    );
}

#[test]
fn superposition_signals_are_also_certified() {
    let spec = SignalSpec::dual_rail(
        Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0),
        Complex64::new(0.0, std::f64::consts::FRAC_1_SQRT_2),
    )
    .unwrap();
    let state = willie_signal_state(spec, 0.9, 0.12, 5).unwrap();
    assert_eq!(state.modes(), 2);
    assert_abs_diff_eq!(state.matrix().trace().re, 1.0, epsilon = 1e-12);
}

#[test]
fn covertness_constant_recovered_from_the_coefficient() {
    assert_abs_diff_eq!(
        c_cov_from_coefficient(0.08356732).unwrap(),
        4.89212,
        epsilon = 1e-4
    );
    assert_eq!(c_cov_from_coefficient(2.0).unwrap(), 1.0);
    for bad in [0.0, -1.0, f64::NAN, f64::INFINITY] {
        assert!(matches!(
            c_cov_from_coefficient(bad),
            Err(FockError::NonpositiveCoefficient(_))
        ));
    }
}

#[test]
fn simulated_coefficient_reproduces_the_planner_constant() {
    let coeff = chi2_coefficient(0.9, 0.12, 10).unwrap();
    let simulated = c_cov_from_coefficient(coeff).unwrap();
    let analytic = covertness_constant(ChannelParams::new(0.9, 0.12).unwrap());
    assert_relative_eq!(simulated, analytic, max_relative = 1e-5);
}
