//! The channel unitary and the eavesdropper's reduced states: unitarity,
//! the Heisenberg input-output relation, single-photon amplitudes, and the
//! limiting cases with known closed forms.

use approx::assert_abs_diff_eq;
use covertq_fock::{
    annihilation, beamsplitter_unitary, thermal_state, willie_rail_state, FockError, RailInput,
};
use nalgebra::DMatrix;
use num_complex::Complex64;

fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

#[test]
fn beamsplitter_is_unitary_at_every_working_cutoff() {
    for cutoff in 3..=10 {
        let u = beamsplitter_unitary(0.9, cutoff).unwrap();
        let dim = cutoff * cutoff;
        let dev = &u * u.adjoint() - DMatrix::<Complex64>::identity(dim, dim);
        assert!(
            max_abs(&dev) <= 1e-10,
            "unitarity violated at cutoff {cutoff}: {}",
            max_abs(&dev)
        );
    }
}

#[test]
fn beamsplitter_approaches_identity_at_full_transmittance() {
    let cutoff = 6;
    let u = beamsplitter_unitary(1.0 - 1e-10, cutoff).unwrap();
    let dev = &u - DMatrix::<Complex64>::identity(cutoff * cutoff, cutoff * cutoff);
    assert!(max_abs(&dev) <= 1e-4);
}

#[test]
fn beamsplitter_rejects_invalid_transmittance() {
    for eta in [0.0, 1.0, 1.5, -0.2, f64::NAN] {
        assert!(matches!(
            beamsplitter_unitary(eta, 6),
            Err(FockError::InvalidTransmittance(_))
        ));
    }
    assert!(matches!(
        beamsplitter_unitary(0.9, 1),
        Err(FockError::CutoffTooSmall(1))
    ));
}

#[test]
fn single_photon_splits_with_the_expected_amplitudes() {
    let cutoff = 6;
    let eta: f64 = 0.9;
    let u = beamsplitter_unitary(eta, cutoff).unwrap();
    // Column of |1, 0⟩ (one photon in the signal mode, environment empty).
    let col_in = cutoff; // index of |1,0⟩ = 1·cutoff + 0
    let amp_10 = u[(cutoff, col_in)];
    let amp_01 = u[(1, col_in)]; // index of |0,1⟩
    assert_abs_diff_eq!(amp_10.re, eta.sqrt(), epsilon = 1e-12);
    assert_abs_diff_eq!(amp_01.re, -(1.0 - eta).sqrt(), epsilon = 1e-12);
    assert_abs_diff_eq!(amp_10.im, 0.0, epsilon = 1e-15);
    assert_abs_diff_eq!(amp_01.im, 0.0, epsilon = 1e-15);
    // No leakage outside the single-photon subspace.
    let leaked: f64 = (0..cutoff * cutoff)
        .filter(|&r| r != cutoff && r != 1)
        .map(|r| u[(r, col_in)].norm_sqr())
        .sum();
    assert!(leaked <= 1e-20);
}

#[test]
fn heisenberg_relation_holds_on_low_photon_states() {
    let cutoff = 8;
    let eta: f64 = 0.73;
    let u = beamsplitter_unitary(eta, cutoff).unwrap();
    let a = annihilation(cutoff)
        .unwrap()
        .map(|x| Complex64::new(x, 0.0));
    let id = DMatrix::<Complex64>::identity(cutoff, cutoff);
    let a_sig = a.kronecker(&id);
    let a_env = id.kronecker(&a);
    let transformed = u.adjoint() * &a_sig * &u;
    let expected = &a_sig * Complex64::new(eta.sqrt(), 0.0)
        + &a_env * Complex64::new((1.0 - eta).sqrt(), 0.0);
    // Compare columns on basis states holding at most cutoff/2 photons in
    // total; higher columns feel the truncation.
    for j_sig in 0..cutoff {
        for j_env in 0..cutoff {
            if j_sig + j_env > cutoff / 2 {
                continue;
            }
            let col = j_sig * cutoff + j_env;
            let dev = (transformed.column(col) - expected.column(col)).norm();
            assert!(
                dev <= 1e-8,
                "input-output relation broken on |{j_sig},{j_env}⟩: {dev}"
            );
        }
    }
}

#[test]
fn willie_vacuum_state_has_the_background_mean_photon_number() {
    let w = willie_rail_state(RailInput::Vacuum, 0.9, 0.12, 10).unwrap();
    let mean = w.mean_photon_number(0).unwrap();
    assert_abs_diff_eq!(mean, 0.108, epsilon = 1e-6);
}

#[test]
fn willie_receives_the_full_environment_at_full_transmittance() {
    let cutoff = 10;
    let w = willie_rail_state(RailInput::Vacuum, 1.0 - 1e-8, 0.12, cutoff).unwrap();
    let thermal = thermal_state(0.12, cutoff).unwrap();
    let dev = w.matrix() - thermal.matrix();
    assert!(max_abs(&dev) <= 1e-6);
}

#[test]
fn willie_single_photon_state_without_background_is_a_coin_flip() {
    let cutoff = 8;
    let eta = 0.9;
    let w = willie_rail_state(RailInput::SinglePhoton, eta, 0.0, cutoff).unwrap();
    // Lossless environment: the photon reaches the eavesdropper's port with
    // probability 1−η, otherwise he sees vacuum.
    let diag = w.diagonal();
    assert_abs_diff_eq!(diag[0], eta, epsilon = 1e-12);
    assert_abs_diff_eq!(diag[1], 1.0 - eta, epsilon = 1e-12);
    for &d in &diag[2..] {
        assert_abs_diff_eq!(d, 0.0, epsilon = 1e-12);
    }
    let off_diag_mass: f64 = (0..cutoff)
        .flat_map(|i| (0..cutoff).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j)
        .map(|(i, j)| w.matrix()[(i, j)].norm())
        .sum();
    assert!(off_diag_mass <= 1e-12);
}

#[test]
fn willie_states_are_certified_densities_across_parameters() {
    // Constructors re-certify every produced operator; reaching Ok is the
    // assertion. Spot-check trace and positivity stayed comfortably inside
    // tolerance anyway.
    for &(eta, nbar) in &[(0.9, 0.12), (0.95, 0.05), (0.5, 1.0), (0.1, 0.3)] {
        for input in [RailInput::Vacuum, RailInput::SinglePhoton] {
            let w = willie_rail_state(input, eta, nbar, 7).unwrap();
            assert_abs_diff_eq!(w.matrix().trace().re, 1.0, epsilon = 1e-12);
        }
    }
}
