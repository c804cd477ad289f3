//! Worked examples for the closed-form channel quantities, checked against
//! independently computed high-precision reference values, plus the fail-fast
//! validation behavior of the parameter constructors.

// Reference values below are kept verbatim as produced by the
// high-precision oracle, even where f64 round-trips with fewer digits.
#![allow(clippy::excessive_precision)]

use approx::{assert_abs_diff_eq, assert_relative_eq};
use covertq_core::{
    covertness_constant, depolarizing_p, hashing_rate, pauli_vector, shannon_entropy,
    ChannelParams, Error, PolicyParams,
};

fn params(eta: f64, nb: f64) -> ChannelParams {
    ChannelParams::new(eta, nb).expect("valid test parameters")
}

#[test]
fn covertness_constant_matches_reference_values() {
    assert_relative_eq!(
        covertness_constant(params(0.9, 0.12)),
        4.892116106553482,
        max_relative = 1e-13
    );
    assert_relative_eq!(
        covertness_constant(params(0.90, 0.02)),
        1.914366736025258,
        max_relative = 1e-13
    );
    assert_relative_eq!(
        covertness_constant(params(0.80, 0.001)),
        0.2000799840063968,
        max_relative = 1e-13
    );
    assert_relative_eq!(
        covertness_constant(params(0.855, 0.114)),
        3.1899127709587613,
        max_relative = 1e-13
    );
    assert_relative_eq!(
        covertness_constant(params(0.855, 0.126)),
        3.3692426088709654,
        max_relative = 1e-13
    );
}

#[test]
fn depolarizing_probability_matches_reference_values() {
    assert_relative_eq!(
        depolarizing_p(params(0.9, 0.12)),
        0.1419344631351994,
        max_relative = 1e-13
    );
    assert_relative_eq!(
        depolarizing_p(params(0.855, 0.126)),
        0.20473051396834493,
        max_relative = 1e-13
    );
    assert_relative_eq!(
        depolarizing_p(params(0.80, 0.02)),
        0.21267301687760151,
        max_relative = 1e-13
    );
}

#[test]
fn depolarizing_probability_limits() {
    // Noiseless limit: p -> 1 - eta as n_bar_b -> 0.
    let p = depolarizing_p(params(0.9, 1e-12));
    assert_abs_diff_eq!(p, 0.1, epsilon = 1e-9);
    // Strong noise drives p toward 1.
    assert!(depolarizing_p(params(0.5, 50.0)) > 0.99);
}

#[test]
fn pauli_vector_entries_and_entropy() {
    let v = pauli_vector(0.1419).expect("p in range");
    let probs = v.probs();
    assert_abs_diff_eq!(probs[0], 0.893575, epsilon = 1e-15);
    for &flip in &probs[1..] {
        assert_abs_diff_eq!(flip, 0.035475, epsilon = 1e-15);
    }
    assert_relative_eq!(v.entropy(), 0.65771723386192116, max_relative = 1e-12);
}

#[test]
fn pauli_vector_endpoints() {
    assert_eq!(pauli_vector(0.0).unwrap().probs(), [1.0, 0.0, 0.0, 0.0]);
    assert_eq!(pauli_vector(1.0).unwrap().probs(), [0.25, 0.25, 0.25, 0.25]);
    // Entropy at the endpoints: deterministic and uniform-over-four.
    assert_eq!(pauli_vector(0.0).unwrap().entropy(), 0.0);
    assert_abs_diff_eq!(pauli_vector(1.0).unwrap().entropy(), 2.0, epsilon = 1e-15);
}

#[test]
fn hashing_rate_matches_reference_values() {
    assert_relative_eq!(
        hashing_rate(0.1419344631351994).unwrap(),
        0.3421624591708432,
        max_relative = 1e-12
    );
    assert_relative_eq!(
        hashing_rate(0.20473051396834493).unwrap(),
        0.13798422866983338,
        max_relative = 1e-12
    );
    assert_relative_eq!(
        hashing_rate(0.21267301687760151).unwrap(),
        0.11406746023419395,
        max_relative = 1e-12
    );
}

#[test]
fn hashing_rate_clamps_to_exact_zero_past_threshold() {
    // The entropy crosses 1 bit near p = 0.2524; beyond it the rate must be
    // exactly zero, not a small negative number.
    assert_eq!(hashing_rate(0.26).unwrap(), 0.0);
    assert_eq!(hashing_rate(0.3).unwrap(), 0.0);
    assert_eq!(hashing_rate(1.0).unwrap(), 0.0);
}

#[test]
fn hashing_rate_is_one_for_noiseless_channel() {
    assert_eq!(hashing_rate(0.0).unwrap(), 1.0);
}

#[test]
fn shannon_entropy_examples() {
    assert_abs_diff_eq!(shannon_entropy(&[0.5, 0.5]).unwrap(), 1.0, epsilon = 1e-15);
    assert_abs_diff_eq!(
        shannon_entropy(&[0.25, 0.25, 0.25, 0.25]).unwrap(),
        2.0,
        epsilon = 1e-15
    );
    // Exact zeros contribute nothing (0 * log 0 = 0 by convention).
    assert_eq!(shannon_entropy(&[1.0, 0.0, 0.0]).unwrap(), 0.0);
    assert_abs_diff_eq!(
        shannon_entropy(&[0.5, 0.5, 0.0]).unwrap(),
        1.0,
        epsilon = 1e-15
    );
}

#[test]
fn shannon_entropy_rejects_bad_vectors() {
    assert!(matches!(
        shannon_entropy(&[0.5, -0.5, 1.0]),
        Err(Error::NegativeProbability(_))
    ));
    assert!(matches!(
        shannon_entropy(&[0.5, f64::NAN]),
        Err(Error::NegativeProbability(_))
    ));
    assert!(matches!(
        shannon_entropy(&[0.5, 0.4]),
        Err(Error::UnnormalizedDistribution(_))
    ));
    assert!(matches!(
        shannon_entropy(&[0.7, 0.7]),
        Err(Error::UnnormalizedDistribution(_))
    ));
}

#[test]
fn pauli_vector_rejects_out_of_range() {
    assert!(matches!(
        pauli_vector(-0.1),
        Err(Error::ProbabilityOutOfRange(_))
    ));
    assert!(matches!(
        pauli_vector(1.1),
        Err(Error::ProbabilityOutOfRange(_))
    ));
    assert!(matches!(
        pauli_vector(f64::NAN),
        Err(Error::ProbabilityOutOfRange(_))
    ));
    assert!(matches!(
        hashing_rate(-0.1),
        Err(Error::ProbabilityOutOfRange(_))
    ));
}

#[test]
fn channel_params_rejects_invalid_inputs() {
    for eta in [0.0, 1.0, 1.2, -3.0, f64::NAN, f64::INFINITY] {
        assert!(
            matches!(
                ChannelParams::new(eta, 0.12),
                Err(Error::TransmittanceOutOfRange(_))
            ),
            "eta = {eta} should be rejected"
        );
    }
    for nb in [0.0, -1.0, f64::NAN, f64::INFINITY] {
        assert!(
            matches!(
                ChannelParams::new(0.9, nb),
                Err(Error::ThermalNoiseOutOfRange(_))
            ),
            "n_bar_b = {nb} should be rejected"
        );
    }
    let p = params(0.9, 0.12);
    assert_eq!(p.eta(), 0.9);
    assert_eq!(p.n_bar_b(), 0.12);
}

#[test]
fn policy_params_rejects_invalid_inputs() {
    assert!(matches!(
        PolicyParams::new(0, 0.05),
        Err(Error::ChannelUsesOutOfRange(0))
    ));
    for delta in [0.0, 0.5, 0.7, -0.1, f64::NAN] {
        assert!(
            matches!(
                PolicyParams::new(100_000_000, delta),
                Err(Error::DeltaOutOfRange(_))
            ),
            "delta = {delta} should be rejected"
        );
    }
    let p = PolicyParams::new(100_000_000, 0.05).unwrap();
    assert_eq!(p.n(), 100_000_000);
    assert_eq!(p.delta(), 0.05);
}
