//! The quantum χ²-divergence, the per-slot divergence coefficient of the
//! eavesdropper's two hypotheses, and the convergence sweep across Fock
//! cutoffs.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use crate::beamsplitter::{willie_rail_state, RailInput};
use crate::density::DensityOperator;
use crate::error::{FockError, Result};

/// Relative threshold (w.r.t. the largest eigenvalue of `σ`) below which an
/// eigenvalue of `σ` is treated as zero and pseudo-inverted to zero.
const RANK_TOL_REL: f64 = 1e-14;

/// Threshold on `⟨v|ρ|v⟩` above which a dropped eigenvector of `σ` counts as
/// genuinely overlapping the support of `ρ`.
const SUPPORT_OVERLAP_TOL: f64 = 1e-12;

/// Result of a χ²-divergence evaluation, with the numerical-rank diagnostics
/// of the pseudo-inversion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Chi2Outcome {
    /// `tr[σ^{−1/2}·ρ·σ^{−1/2}·ρ] − 1`, clamped at 0.
    pub value: f64,
    /// Number of eigenvalues of `σ` below the rank threshold (pseudo-inverted
    /// to zero).
    pub rank_dropped: usize,
    /// True when a dropped eigenvector carries more than `1e-12` of `ρ`'s
    /// mass: the reported value then underestimates a divergence that is
    /// infinite in exact arithmetic.
    pub support_overlap: bool,
}

/// χ²-divergence `tr[σ^{−1/2}·ρ·σ^{−1/2}·ρ] − 1` via the eigendecomposition
/// of `σ`. Eigenvalues below `1e-14` of the largest are pseudo-inverted to
/// zero and reported through [`Chi2Outcome`].
pub fn chi2_divergence(rho: &DensityOperator, sigma: &DensityOperator) -> Result<Chi2Outcome> {
    if rho.dim() != sigma.dim() {
        return Err(FockError::DimensionMismatch {
            dim: rho.dim(),
            expected: sigma.dim(),
        });
    }
    let dim = sigma.dim();
    let eig = SymmetricEigen::new(sigma.matrix().clone());
    let lambda_max = eig.eigenvalues.max();
    let threshold = RANK_TOL_REL * lambda_max;
    let mut inv_sqrt = DVector::<Complex64>::zeros(dim);
    let mut rank_dropped = 0;
    let mut support_overlap = false;
    for k in 0..dim {
        let lambda = eig.eigenvalues[k];
        if lambda > threshold {
            inv_sqrt[k] = Complex64::new(1.0 / lambda.sqrt(), 0.0);
        } else {
            rank_dropped += 1;
            let v = eig.eigenvectors.column(k);
            let mass = (v.adjoint() * rho.matrix() * v)[(0, 0)].re;
            if mass > SUPPORT_OVERLAP_TOL {
                support_overlap = true;
            }
        }
    }
    let s = &eig.eigenvectors * DMatrix::from_diagonal(&inv_sqrt) * eig.eigenvectors.adjoint();
    let conjugated = &s * rho.matrix() * &s;
    let value = ((conjugated * rho.matrix()).trace().re - 1.0).max(0.0);
    Ok(Chi2Outcome {
        value,
        rank_dropped,
        support_overlap,
    })
}

/// Per-slot χ²-divergence coefficient of the eavesdropper's hypotheses: the
/// divergence between his two-rail state when the slot carries a logical
/// `|01⟩` signal and his all-background state. Because the signal enters each
/// slot with probability `q` linearly, the per-slot divergence is exactly
/// `q²` times this coefficient.
pub fn chi2_coefficient(eta: f64, nbar: f64, cutoff: usize) -> Result<f64> {
    if !(nbar > 0.0 && nbar.is_finite()) {
        return Err(FockError::InvalidThermalOccupation(nbar));
    }
    let w_vac = willie_rail_state(RailInput::Vacuum, eta, nbar, cutoff)?;
    let w_photon = willie_rail_state(RailInput::SinglePhoton, eta, nbar, cutoff)?;
    // Logical |01⟩: vacuum on the first rail, the photon on the second.
    let signal_state = w_vac.tensor(&w_photon)?;
    let background = w_vac.tensor(&w_vac)?;
    Ok(chi2_divergence(&signal_state, &background)?.value)
}

/// Closed-form limit of [`chi2_coefficient`] as the cutoff grows:
/// `(1−η)² / (η·nbar·(1+η·nbar))`.
pub fn analytic_coefficient(eta: f64, nbar: f64) -> Result<f64> {
    if !(eta > 0.0 && eta < 1.0) {
        return Err(FockError::InvalidTransmittance(eta));
    }
    if !(nbar > 0.0 && nbar.is_finite()) {
        return Err(FockError::InvalidThermalOccupation(nbar));
    }
    Ok((1.0 - eta).powi(2) / (eta * nbar * (1.0 + eta * nbar)))
}

/// Recovers the covertness constant from a divergence coefficient:
/// `c = √(2/coeff)`.
pub fn c_cov_from_coefficient(coeff: f64) -> Result<f64> {
    if !(coeff > 0.0 && coeff.is_finite()) {
        return Err(FockError::NonpositiveCoefficient(coeff));
    }
    Ok((2.0 / coeff).sqrt())
}

/// One row of the convergence sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub cutoff: usize,
    pub chi2_sim: f64,
    pub abs_err: f64,
    pub rel_err_pct: f64,
}

/// Evaluates [`chi2_coefficient`] at each cutoff and reports absolute and
/// relative error against the closed form. Cutoffs must be strictly
/// ascending, each at least 3.
pub fn convergence_sweep(eta: f64, nbar: f64, cutoffs: &[usize]) -> Result<Vec<ConvergenceRow>> {
    if cutoffs.is_empty()
        || cutoffs[0] < 3
        || cutoffs.windows(2).any(|w| w[0] >= w[1])
    {
        return Err(FockError::InvalidCutoffList);
    }
    let analytic = analytic_coefficient(eta, nbar)?;
    cutoffs
        .iter()
        .map(|&cutoff| {
            let chi2_sim = chi2_coefficient(eta, nbar, cutoff)?;
            let abs_err = (chi2_sim - analytic).abs();
            Ok(ConvergenceRow {
                cutoff,
                chi2_sim,
                abs_err,
                rel_err_pct: 100.0 * abs_err / analytic,
            })
        })
        .collect()
}
