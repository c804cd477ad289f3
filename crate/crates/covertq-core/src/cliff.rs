//! Bisection solvers for the rate cliff.
//!
//! The hashing rate hits zero when the Pauli-vector entropy reaches one bit.
//! `p_crit` is the unique depolarizing parameter with
//! `H([1−3p/4, p/4, p/4, p/4]) = 1` (the entropy is strictly increasing in
//! `p` on `[0, 1]`, so the root is unique). `u_crit` is the smallest
//! symmetric uncertainty level at which the worst-corner depolarizing
//! parameter `p_worst(u) = p(η₀(1−u), n̄_B,0(1+u))` reaches `p_crit`; beyond
//! it no positive rate can be certified and the guaranteed payload is zero.
//!
//! Both solvers use plain bisection: the brackets are guaranteed by
//! monotonicity, the iteration count is fixed by the tolerance, and the
//! output is deterministic.

use crate::channel::{depolarizing_p, pauli_vector, ChannelParams};

/// Bisection stops when the bracket is narrower than this. Tight enough that
/// the residual `|p_worst(u_crit) − p_crit|` stays below 1e-8.
const BISECTION_TOL: f64 = 1e-12;

/// The rate-cliff location: the critical depolarizing parameter, and (when
/// the cliff is reachable with relative uncertainty below 1) the critical
/// uncertainty level of a given nominal point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CliffResult {
    /// Unique `p ∈ (0, 1)` with `H(pauli_vector(p)) = 1`.
    pub p_crit: f64,
    /// Minimal `u ∈ [0, 1)` with `p_worst(u) ≥ p_crit`; `None` when the
    /// threshold is not crossed for any `u < 1`.
    pub u_crit: Option<f64>,
}

fn depolarizing_entropy(p: f64) -> f64 {
    pauli_vector(p)
        .expect("bisection keeps p inside [0, 1]")
        .entropy()
}

/// Solves `H(pauli_vector(p)) = 1` for `p` by bisection on `[0, 1]`
/// (`H(0) = 0`, `H(1) = 2`, strictly increasing), to a bracket width of
/// 1e-12. Returns the bracket midpoint.
pub fn solve_p_crit() -> f64 {
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    while hi - lo > BISECTION_TOL {
        let mid = 0.5 * (lo + hi);
        if depolarizing_entropy(mid) < 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Worst-corner depolarizing parameter of the symmetric box at level `u`:
/// `p(η₀(1−u), n̄_B,0(1+u))`. Strictly increasing in `u`.
fn p_worst(nominal: ChannelParams, u: f64) -> f64 {
    let point = ChannelParams::new(nominal.eta() * (1.0 - u), nominal.n_bar_b() * (1.0 + u))
        .expect("scaled point stays inside the valid domain for u in [0, 1)");
    depolarizing_p(point)
}

/// Finds the minimal `u ∈ [0, 1)` with `p_worst(u) ≥ p_crit` by bisection on
/// the monotone map `u ↦ p_worst(u)` over `[0, 1 − 1e-9]`.
///
/// Returns `Some(0.0)` when the nominal point is already past the cliff, and
/// `None` when the threshold is not crossed anywhere on the search interval
/// (absence is a value, not an error). The returned level is the upper end of
/// the final bracket, so `p_worst(u_crit) ≥ p_crit` holds exactly and the
/// certified payload is exactly zero at and above it.
pub fn solve_u_crit(nominal: ChannelParams) -> Option<f64> {
    let p_crit = solve_p_crit();
    if p_worst(nominal, 0.0) >= p_crit {
        return Some(0.0);
    }
    let u_max = 1.0 - 1e-9;
    if p_worst(nominal, u_max) < p_crit {
        return None;
    }
    let (mut lo, mut hi) = (0.0_f64, u_max);
    while hi - lo > BISECTION_TOL {
        let mid = 0.5 * (lo + hi);
        if p_worst(nominal, mid) < p_crit {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(hi)
}

/// Bundles [`solve_p_crit`] and [`solve_u_crit`] for one nominal point.
pub fn locate_cliff(nominal: ChannelParams) -> CliffResult {
    CliffResult {
        p_crit: solve_p_crit(),
        u_crit: solve_u_crit(nominal),
    }
}
