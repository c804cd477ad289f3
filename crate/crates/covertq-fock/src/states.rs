//! Input states: truncated thermal states, Fock states, and the dual-rail
//! signal specification.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::density::DensityOperator;
use crate::error::{FockError, Result};

/// Single-mode thermal state with mean photon number `nbar`, truncated at
/// `cutoff` levels and renormalized to unit trace: diagonal weights
/// proportional to `nbar^k / (1 + nbar)^(k+1)`.
pub fn thermal_state(nbar: f64, cutoff: usize) -> Result<DensityOperator> {
    if cutoff < 2 {
        return Err(FockError::CutoffTooSmall(cutoff));
    }
    if !(nbar >= 0.0 && nbar.is_finite()) {
        return Err(FockError::InvalidThermalOccupation(nbar));
    }
    let ratio = nbar / (1.0 + nbar);
    let weights: Vec<f64> = (0..cutoff)
        .map(|k| ratio.powi(k as i32) / (1.0 + nbar))
        .collect();
    let norm: f64 = weights.iter().sum();
    let mut m = DMatrix::<Complex64>::zeros(cutoff, cutoff);
    for (k, w) in weights.iter().enumerate() {
        m[(k, k)] = Complex64::new(w / norm, 0.0);
    }
    DensityOperator::new(m, cutoff, 1)
}

/// Single-mode Fock (number) state `|k⟩⟨k|`.
pub fn fock_state(index: usize, cutoff: usize) -> Result<DensityOperator> {
    if cutoff < 2 {
        return Err(FockError::CutoffTooSmall(cutoff));
    }
    if index >= cutoff {
        return Err(FockError::FockIndexOutOfRange { index, cutoff });
    }
    let mut m = DMatrix::<Complex64>::zeros(cutoff, cutoff);
    m[(index, index)] = Complex64::new(1.0, 0.0);
    DensityOperator::new(m, cutoff, 1)
}

/// What the sender puts on the pair of signal rails in one slot: nothing, or
/// one photon in superposition across the two rails (`alpha·|01⟩ + beta·|10⟩`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SignalSpec {
    Vacuum,
    DualRail { alpha: Complex64, beta: Complex64 },
}

impl SignalSpec {
    /// Dual-rail qubit `alpha·|01⟩ + beta·|10⟩`; the amplitudes must be
    /// normalized within `1e-12`.
    pub fn dual_rail(alpha: Complex64, beta: Complex64) -> Result<Self> {
        let norm = alpha.norm_sqr() + beta.norm_sqr();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(FockError::UnnormalizedSignal(norm));
        }
        Ok(SignalSpec::DualRail { alpha, beta })
    }

    /// Logical zero, `|01⟩`: the photon rides the second rail.
    pub fn logical_zero() -> Self {
        SignalSpec::DualRail {
            alpha: Complex64::new(1.0, 0.0),
            beta: Complex64::new(0.0, 0.0),
        }
    }

    /// Logical one, `|10⟩`: the photon rides the first rail.
    pub fn logical_one() -> Self {
        SignalSpec::DualRail {
            alpha: Complex64::new(0.0, 0.0),
            beta: Complex64::new(1.0, 0.0),
        }
    }
}
