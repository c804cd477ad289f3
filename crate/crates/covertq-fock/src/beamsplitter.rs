//! The lossy-channel beamsplitter and the eavesdropper's reduced states.
//!
//! The channel couples each signal mode `â` to a thermal environment mode
//! `ê` on a beamsplitter of transmittance `η`: the receiver keeps
//! `b̂ = √η·â + √(1−η)·ê` while the eavesdropper collects the reflected port
//! `ŵ = √(1−η)·â − √η·ê`. Everything here is evaluated exactly on the
//! truncated Fock space via the matrix exponential of the generator.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::density::{trace_out_first, DensityOperator};
use crate::error::{FockError, Result};
use crate::operators::annihilation;
use crate::states::{fock_state, thermal_state, SignalSpec};

/// Two-mode beamsplitter unitary `U = exp(θ·(â†ê − âê†))` with
/// `θ = arccos(√η)`, on `cutoff²` dimensions (signal mode first). The
/// generator is real antisymmetric, so `U` is real orthogonal; it is promoted
/// to a complex matrix for downstream algebra.
pub fn beamsplitter_unitary(eta: f64, cutoff: usize) -> Result<DMatrix<Complex64>> {
    if !(eta > 0.0 && eta < 1.0) {
        return Err(FockError::InvalidTransmittance(eta));
    }
    let a = annihilation(cutoff)?;
    let id = DMatrix::<f64>::identity(cutoff, cutoff);
    let a_sig = a.kronecker(&id);
    let a_env = id.kronecker(&a);
    let theta = eta.sqrt().acos();
    let generator = (a_sig.transpose() * &a_env - &a_sig * a_env.transpose()) * theta;
    let real_u = generator.exp();
    Ok(real_u.map(|x| Complex64::new(x, 0.0)))
}

/// What the sender launches into one rail in one slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RailInput {
    Vacuum,
    SinglePhoton,
}

/// The eavesdropper's single-rail reduced state: the rail input meets a
/// thermal environment on the beamsplitter and the receiver's output port is
/// traced out. For vacuum input the mean photon number is `η·nbar` up to
/// truncation error.
pub fn willie_rail_state(
    input: RailInput,
    eta: f64,
    nbar: f64,
    cutoff: usize,
) -> Result<DensityOperator> {
    let signal = match input {
        RailInput::Vacuum => fock_state(0, cutoff)?,
        RailInput::SinglePhoton => fock_state(1, cutoff)?,
    };
    let joint = signal.tensor(&thermal_state(nbar, cutoff)?)?;
    let u = beamsplitter_unitary(eta, cutoff)?;
    let evolved = &u * joint.matrix() * u.adjoint();
    DensityOperator::new(trace_out_first(&evolved, cutoff), cutoff, 1)
}

/// Pushes one raw rail operator `X` through the channel:
/// `tr_receiver[U·(X ⊗ ρ_thermal)·U†]`. Linear in `X`, so it extends the
/// channel from density operators to the operator basis elements needed for
/// dual-rail coherences.
fn rail_channel(
    x: &DMatrix<Complex64>,
    u: &DMatrix<Complex64>,
    thermal: &DMatrix<Complex64>,
    cutoff: usize,
) -> DMatrix<Complex64> {
    let joint = x.kronecker(thermal);
    let evolved = u * joint * u.adjoint();
    trace_out_first(&evolved, cutoff)
}

/// The eavesdropper's two-rail reduced state for a signal slot.
///
/// For `SignalSpec::Vacuum` both rails carry vacuum. For a dual-rail qubit
/// `alpha·|01⟩ + beta·|10⟩` the two rails pass through independent copies of
/// the channel; cross-rail coherences survive via the operator-basis
/// expansion of the rail channel.
pub fn willie_signal_state(
    signal: SignalSpec,
    eta: f64,
    nbar: f64,
    cutoff: usize,
) -> Result<DensityOperator> {
    match signal {
        SignalSpec::Vacuum => {
            let w_vac = willie_rail_state(RailInput::Vacuum, eta, nbar, cutoff)?;
            w_vac.tensor(&w_vac)
        }
        SignalSpec::DualRail { alpha, beta } => {
            let norm = alpha.norm_sqr() + beta.norm_sqr();
            if (norm - 1.0).abs() > 1e-12 {
                return Err(FockError::UnnormalizedSignal(norm));
            }
            let u = beamsplitter_unitary(eta, cutoff)?;
            let thermal = thermal_state(nbar, cutoff)?.matrix().clone();
            let basis = |bra: usize, ket: usize| {
                let mut x = DMatrix::<Complex64>::zeros(cutoff, cutoff);
                x[(bra, ket)] = Complex64::new(1.0, 0.0);
                x
            };
            let w00 = rail_channel(&basis(0, 0), &u, &thermal, cutoff);
            let w01 = rail_channel(&basis(0, 1), &u, &thermal, cutoff);
            let w10 = rail_channel(&basis(1, 0), &u, &thermal, cutoff);
            let w11 = rail_channel(&basis(1, 1), &u, &thermal, cutoff);
            // |ψ⟩⟨ψ| = |α|²·|0⟩⟨0|⊗|1⟩⟨1| + αβ̄·|0⟩⟨1|⊗|1⟩⟨0|
            //        + ᾱβ·|1⟩⟨0|⊗|0⟩⟨1| + |β|²·|1⟩⟨1|⊗|0⟩⟨0|,
            // and the channel acts factor-wise.
            let matrix = w00.kronecker(&w11) * Complex64::new(alpha.norm_sqr(), 0.0)
                + w01.kronecker(&w10) * (alpha * beta.conj())
                + w10.kronecker(&w01) * (alpha.conj() * beta)
                + w11.kronecker(&w00) * Complex64::new(beta.norm_sqr(), 0.0);
            DensityOperator::new(matrix, cutoff, 2)
        }
    }
}
