//! Robust planning for covert quantum communication over lossy thermal-noise
//! bosonic channels whose parameters are known only up to bounded intervals.
//!
//! The model: a sender couples a dual-rail photonic qubit into a beamsplitter
//! of transmittance `η` whose environment port carries a thermal state with
//! mean photon number `n̄_B`. Covertness against a warden limits the per-slot
//! transmission probability to `q ≤ 2·δ·c_cov(η, n̄_B)/√n` over `n` channel
//! uses (a square-root law), while the received qubit passes through an
//! effective depolarizing channel with parameter `p(η, n̄_B)` whose hashing
//! bound certifies an achievable coding rate.
//!
//! When `(η, n̄_B)` is only known to lie in a rectangle, covertness and
//! reliability are each worst at a *corner* of that rectangle — and at
//! *different* corners. This crate computes the resulting guaranteed payload
//!
//! ```text
//! M_rob = 2·√n · c_cov(η_min, n̄_B,min) · R(p(η_min, n̄_B,max)) · δ ,
//! ```
//!
//! shows that the naive nominally-tuned policy guarantees nothing over the
//! same rectangle, locates the uncertainty level at which the guaranteed rate
//! collapses to zero (the rate cliff), and quantifies the payload fraction
//! lost to the corner mismatch (the security tax).
//!
//! Organization:
//! - [`channel`]: closed-form point formulas (`c_cov`, `p`, Pauli vector,
//!   entropy, hashing rate).
//! - [`boxes`]: rectangular uncertainty sets and their extremizing corners.
//! - [`plan`]: robust and naive policies, feasibility witnesses, aligned
//!   payload, and the security tax.
//! - [`cliff`]: bisection solvers for the critical depolarizing parameter
//!   `p_crit` and the critical uncertainty level `u_crit`.
//! - [`sweep`]: design maps and parameter sweeps built from the above.

pub mod boxes;
pub mod channel;
pub mod cliff;
mod error;
pub mod plan;
pub mod sweep;

pub use boxes::{BoxProvenance, UncertaintyBox};
pub use channel::{
    covertness_constant, depolarizing_p, hashing_rate, pauli_vector, shannon_entropy,
    ChannelParams, PauliErrorVector, PolicyParams,
};
pub use cliff::{locate_cliff, solve_p_crit, solve_u_crit, CliffResult};
pub use error::{Error, Result};
pub use plan::{
    aligned_payload, naive_feasibility, naive_plan, robust_plan, security_tax,
    FeasibilityVerdict, NaivePlan, RobustPlan, TaxReport,
};
pub use sweep::{
    compare_sym_asym, design_map, linspace, logspace_u64, sweep_payload_vs_n,
    sweep_payload_vs_u, MapCell, PayloadVsNRow, PayloadVsURow, SymAsymComparison, SymAsymRow,
};
