//! Truncated Fock-space simulation of a lossy thermal-noise bosonic channel.
//!
//! Each signal rail couples to a thermal environment mode (mean occupation
//! `nbar`) on a beamsplitter of transmittance `η`; the eavesdropper collects
//! the reflected port. This crate builds the eavesdropper's reduced states
//! exactly on a truncated Fock basis and evaluates the quantum χ²-divergence
//! between his signal and background hypotheses. The headline output,
//! [`chi2_coefficient`], converges with increasing cutoff to the closed form
//! `(1−η)²/(η·nbar·(1+η·nbar))` — the quantity that fixes the covertness
//! constant `c = √(2/coeff)` used by the closed-form planner.
//!
//! - [`operators`]: truncated mode operators.
//! - [`density`]: certified density operators (Hermitian, unit trace, PSD).
//! - [`states`]: thermal and Fock states, dual-rail signal specification.
//! - [`beamsplitter`]: the channel unitary and the eavesdropper's reduced
//!   states.
//! - [`chi2`]: divergence, per-slot coefficient, convergence sweep.

pub mod beamsplitter;
pub mod chi2;
pub mod density;
mod error;
pub mod operators;
pub mod states;

pub use beamsplitter::{beamsplitter_unitary, willie_rail_state, willie_signal_state, RailInput};
pub use chi2::{
    analytic_coefficient, c_cov_from_coefficient, chi2_coefficient, chi2_divergence,
    convergence_sweep, Chi2Outcome, ConvergenceRow,
};
pub use density::DensityOperator;
pub use error::{FockError, Result};
pub use operators::annihilation;
pub use states::{fock_state, thermal_state, SignalSpec};
