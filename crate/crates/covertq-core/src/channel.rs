//! Closed-form figures of merit for a single lossy thermal-noise bosonic link.
//!
//! A link is the point `(η, n̄_B)`: a beamsplitter of transmittance `η ∈ (0,1)`
//! mixing the signal with an environment mode in a thermal state of mean
//! photon number `n̄_B > 0`. Two scalars summarize it:
//!
//! * the covertness constant
//!   `c_cov(η, n̄_B) = √(2·η·n̄_B·(1 + η·n̄_B)) / (1 − η)`,
//!   which caps the covert per-slot transmission probability at
//!   `q ≤ 2·δ·c_cov/√n` over `n` channel uses;
//! * the effective depolarizing parameter
//!   `p(η, n̄_B) = 1 − η/(1 + (1−η)·n̄_B)⁴`
//!   of the induced logical qubit channel, with Pauli error vector
//!   `[1−3p/4, p/4, p/4, p/4]` and hashing-bound rate `R = [1 − H(p⃗)]⁺`.
//!
//! Both are monotone in each coordinate (`c_cov` increases in `η` and `n̄_B`;
//! `p` increases in `n̄_B` and decreases in `η`), which is what lets the
//! planner reduce worst-case analysis over a rectangle to two corners.

use crate::error::{Error, Result};

/// A channel operating point: transmittance `η` and mean thermal photon
/// number `n̄_B`. Construction validates `0 < η < 1` and `n̄_B > 0`; all
/// formulas in this module assume (and get) a valid point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    eta: f64,
    n_bar_b: f64,
}

impl ChannelParams {
    pub fn new(eta: f64, n_bar_b: f64) -> Result<Self> {
        // `!(x > 0.0 && ...)` also rejects NaN.
        if !(eta > 0.0 && eta < 1.0) {
            return Err(Error::TransmittanceOutOfRange(eta));
        }
        if !(n_bar_b > 0.0 && n_bar_b.is_finite()) {
            return Err(Error::ThermalNoiseOutOfRange(n_bar_b));
        }
        Ok(Self { eta, n_bar_b })
    }

    pub fn eta(self) -> f64 {
        self.eta
    }

    pub fn n_bar_b(self) -> f64 {
        self.n_bar_b
    }
}

/// Frame policy: `n` channel uses per frame and covertness parameter
/// `δ ∈ (0, 1/2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolicyParams {
    n: u64,
    delta: f64,
}

impl PolicyParams {
    pub fn new(n: u64, delta: f64) -> Result<Self> {
        if n < 1 {
            return Err(Error::ChannelUsesOutOfRange(n));
        }
        if !(delta > 0.0 && delta < 0.5) {
            return Err(Error::DeltaOutOfRange(delta));
        }
        Ok(Self { n, delta })
    }

    pub fn n(self) -> u64 {
        self.n
    }

    pub fn delta(self) -> f64 {
        self.delta
    }
}

/// Covertness constant `c_cov(η, n̄_B) = √(2·η·n̄_B·(1 + η·n̄_B)) / (1 − η)`.
///
/// Strictly positive and finite for every valid point, and strictly
/// increasing in both coordinates.
pub fn covertness_constant(params: ChannelParams) -> f64 {
    let eta = params.eta();
    let nb = params.n_bar_b();
    (2.0 * eta * nb * (1.0 + eta * nb)).sqrt() / (1.0 - eta)
}

/// Effective depolarizing parameter `p(η, n̄_B) = 1 − η/(1 + (1−η)·n̄_B)⁴`.
///
/// Lies in `(0, 1)` for every valid point; strictly increasing in `n̄_B` and
/// strictly decreasing in `η`.
pub fn depolarizing_p(params: ChannelParams) -> f64 {
    let eta = params.eta();
    let nb = params.n_bar_b();
    1.0 - eta / (1.0 + (1.0 - eta) * nb).powi(4)
}

/// Pauli error probabilities `[p_I, p_X, p_Y, p_Z]` of a depolarizing channel:
/// `[1−3p/4, p/4, p/4, p/4]`. Entries sum to 1 within 1e-12 by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliErrorVector {
    probs: [f64; 4],
}

impl PauliErrorVector {
    pub fn probs(self) -> [f64; 4] {
        self.probs
    }

    /// Shannon entropy of the error vector in bits, with `0·log₂0 = 0`.
    pub fn entropy(self) -> f64 {
        let mut h = 0.0;
        for p in self.probs {
            // Explicit branch implements the 0·log 0 = 0 convention.
            if p > 0.0 {
                h -= p * p.log2();
            }
        }
        h
    }
}

/// Builds the depolarizing Pauli error vector for `p ∈ [0, 1]`.
pub fn pauli_vector(p: f64) -> Result<PauliErrorVector> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ProbabilityOutOfRange(p));
    }
    Ok(PauliErrorVector {
        probs: [1.0 - 0.75 * p, 0.25 * p, 0.25 * p, 0.25 * p],
    })
}

/// Shannon entropy in bits, `−Σ pᵢ·log₂ pᵢ`, with `0·log₂0 = 0` handled by an
/// explicit branch. Rejects negative entries and vectors whose sum deviates
/// from 1 by more than 1e-9.
pub fn shannon_entropy(probs: &[f64]) -> Result<f64> {
    let mut sum = 0.0;
    for &p in probs {
        if p.is_nan() || p < 0.0 {
            return Err(Error::NegativeProbability(p));
        }
        sum += p;
    }
    if (sum - 1.0).abs() > 1e-9 {
        return Err(Error::UnnormalizedDistribution(sum));
    }
    let mut h = 0.0;
    for &p in probs {
        if p > 0.0 {
            h -= p * p.log2();
        }
    }
    Ok(h)
}

/// Hashing-bound rate of the depolarizing channel,
/// `R(p) = [1 − H([1−3p/4, p/4, p/4, p/4])]⁺` in qubits per use.
///
/// The clamp is an exact `max(·, 0)`: values within one rounding step of the
/// cliff may come out as tiny positives, which downstream solvers tolerate
/// because the cliff is located on `p`, not on `R`.
pub fn hashing_rate(p: f64) -> Result<f64> {
    let vec = pauli_vector(p)?;
    Ok((1.0 - vec.entropy()).max(0.0))
}

/// Hashing rate at a valid operating point; infallible because
/// [`depolarizing_p`] always lands in `[0, 1]` for a valid point.
pub(crate) fn hashing_rate_at(params: ChannelParams) -> f64 {
    hashing_rate(depolarizing_p(params))
        .expect("depolarizing_p of a valid point lies in [0, 1]")
}
