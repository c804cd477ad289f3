//! Property checks for the closed-form channel quantities: monotonicity in
//! each parameter, agreement of finite differences with the closed-form
//! derivatives, and basic invariants of the error-probability machinery.

use covertq_core::{
    covertness_constant, depolarizing_p, hashing_rate, pauli_vector, ChannelParams,
};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn params(eta: f64, nb: f64) -> ChannelParams {
    ChannelParams::new(eta, nb).expect("valid test parameters")
}

/// Draws (eta, n_bar_b) pairs well inside the valid domain so that small
/// perturbations stay valid.
fn sample_points(count: usize, seed: u64) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (
                rng.random_range(0.01..0.99),
                rng.random_range(0.001..2.0),
            )
        })
        .collect()
}

#[test]
fn covertness_constant_increases_in_both_parameters() {
    const EPS: f64 = 1e-4;
    for (eta, nb) in sample_points(1000, 11) {
        let base = covertness_constant(params(eta, nb));
        assert!(
            covertness_constant(params(eta + EPS, nb)) > base,
            "not increasing in eta at ({eta}, {nb})"
        );
        assert!(
            covertness_constant(params(eta, nb + EPS)) > base,
            "not increasing in n_bar_b at ({eta}, {nb})"
        );
    }
}

#[test]
fn depolarizing_probability_monotone_directions() {
    const EPS: f64 = 1e-4;
    for (eta, nb) in sample_points(1000, 12) {
        let base = depolarizing_p(params(eta, nb));
        assert!(
            depolarizing_p(params(eta + EPS, nb)) < base,
            "not decreasing in eta at ({eta}, {nb})"
        );
        assert!(
            depolarizing_p(params(eta, nb + EPS)) > base,
            "not increasing in n_bar_b at ({eta}, {nb})"
        );
    }
}

/// Closed-form partial derivatives of the covertness constant and the
/// depolarizing probability, used as an independent cross-check on the
/// implemented formulas via central differences.
mod derivatives {
    pub fn c_by_eta(eta: f64, nb: f64) -> f64 {
        let s = (eta * nb * (1.0 + eta * nb)).sqrt();
        std::f64::consts::SQRT_2 * nb * (1.0 + eta + 2.0 * eta * nb)
            / (2.0 * s * (1.0 - eta).powi(2))
    }

    pub fn c_by_nb(eta: f64, nb: f64) -> f64 {
        let s = (eta * nb * (1.0 + eta * nb)).sqrt();
        std::f64::consts::SQRT_2 * eta * (1.0 + 2.0 * eta * nb) / (2.0 * s * (1.0 - eta))
    }

    pub fn p_by_eta(eta: f64, nb: f64) -> f64 {
        -(1.0 + nb * (1.0 + 3.0 * eta)) / (1.0 + (1.0 - eta) * nb).powi(5)
    }

    pub fn p_by_nb(eta: f64, nb: f64) -> f64 {
        4.0 * eta * (1.0 - eta) / (1.0 + (1.0 - eta) * nb).powi(5)
    }
}

#[test]
fn central_differences_match_closed_form_derivatives() {
    const H: f64 = 1e-6;
    for (eta, nb) in sample_points(1000, 13) {
        let cd_c_eta = (covertness_constant(params(eta + H, nb))
            - covertness_constant(params(eta - H, nb)))
            / (2.0 * H);
        let cd_c_nb = (covertness_constant(params(eta, nb + H))
            - covertness_constant(params(eta, nb - H)))
            / (2.0 * H);
        let cd_p_eta =
            (depolarizing_p(params(eta + H, nb)) - depolarizing_p(params(eta - H, nb))) / (2.0 * H);
        let cd_p_nb =
            (depolarizing_p(params(eta, nb + H)) - depolarizing_p(params(eta, nb - H))) / (2.0 * H);

        for (cd, exact, label) in [
            (cd_c_eta, derivatives::c_by_eta(eta, nb), "dc/deta"),
            (cd_c_nb, derivatives::c_by_nb(eta, nb), "dc/dnb"),
            (cd_p_eta, derivatives::p_by_eta(eta, nb), "dp/deta"),
            (cd_p_nb, derivatives::p_by_nb(eta, nb), "dp/dnb"),
        ] {
            assert_eq!(
                cd.signum(),
                exact.signum(),
                "{label} sign mismatch at ({eta}, {nb})"
            );
            let rel = (cd - exact).abs() / exact.abs().max(1e-12);
            assert!(
                rel < 1e-3,
                "{label} mismatch at ({eta}, {nb}): central diff {cd}, closed form {exact}"
            );
        }
    }
}

#[test]
fn hashing_rate_is_nonincreasing_in_p() {
    const GRID: usize = 10_000;
    let mut prev = hashing_rate(0.0).unwrap();
    for i in 1..=GRID {
        let p = i as f64 / GRID as f64;
        let r = hashing_rate(p).unwrap();
        assert!(
            r <= prev + 1e-12,
            "rate increased between p = {} and p = {p}",
            (i - 1) as f64 / GRID as f64
        );
        prev = r;
    }
    assert_eq!(prev, 0.0);
}

proptest! {
    #[test]
    fn pauli_vector_is_a_distribution(p in 0.0f64..=1.0) {
        let v = pauli_vector(p).unwrap();
        let probs = v.probs();
        for &q in &probs {
            prop_assert!((0.0..=1.0).contains(&q));
        }
        let sum: f64 = probs.iter().sum();
        prop_assert!((sum - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pauli_entropy_is_within_two_bits(p in 0.0f64..=1.0) {
        let h = pauli_vector(p).unwrap().entropy();
        prop_assert!(h.is_finite());
        prop_assert!((0.0..=2.0 + 1e-12).contains(&h));
    }

    #[test]
    fn hashing_rate_is_within_unit_interval(p in 0.0f64..=1.0) {
        let r = hashing_rate(p).unwrap();
        prop_assert!((0.0..=1.0).contains(&r));
    }

    #[test]
    fn covertness_constant_is_positive_and_finite(
        eta in 0.001f64..0.999,
        nb in 0.0001f64..10.0,
    ) {
        let c = covertness_constant(params(eta, nb));
        prop_assert!(c.is_finite());
        prop_assert!(c > 0.0);
    }

    #[test]
    fn depolarizing_probability_stays_in_unit_interval(
        eta in 0.001f64..0.999,
        nb in 0.0001f64..10.0,
    ) {
        let p = depolarizing_p(params(eta, nb));
        prop_assert!((0.0..=1.0).contains(&p));
    }
}
