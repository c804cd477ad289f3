//! Robust and naive transmission policies over an uncertainty box, and the
//! comparisons between them.
//!
//! The robust policy takes the covertness budget from the covertness corner
//! and the coding rate from the reliability corner, so one static `(q, R)`
//! pair is simultaneously covert and decodable at every point of the box:
//!
//! ```text
//! q_rob = 2·δ·c_cov(η_min, n̄_B,min)/√n ,   r_rob = R(p(η_min, n̄_B,max)) ,
//! M_rob = n·q_rob·r_rob = 2·√n·c_cov(η_min, n̄_B,min)·r_rob·δ .
//! ```
//!
//! The naive policy tunes both knobs to the nominal point instead. Over any
//! box extending below the nominal transmittance it violates covertness at
//! the covertness corner and overshoots the decodable rate at the reliability
//! corner, so its guaranteed payload over the box is zero; both witnesses are
//! reported by [`naive_feasibility`].
//!
//! The *aligned* payload is the hypothetical bound with both constraints
//! evaluated at the reliability corner — the corners made to agree. The gap
//! between aligned and robust payload, as a fraction of aligned, is the
//! *security tax*: the price of the corner mismatch.

use crate::boxes::UncertaintyBox;
use crate::channel::{
    covertness_constant, depolarizing_p, hashing_rate_at, ChannelParams, PolicyParams,
};
use crate::error::{Error, Result};

/// Robust policy and guaranteed payload for one box and frame policy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RobustPlan {
    q_rob: f64,
    r_rob: f64,
    covert_corner: ChannelParams,
    reliab_corner: ChannelParams,
    c_cov_rob: f64,
    p_worst: f64,
    m_rob: f64,
}

impl RobustPlan {
    /// Per-slot transmission probability `2·δ·c_cov_rob/√n`.
    pub fn q_rob(&self) -> f64 {
        self.q_rob
    }

    /// Coding rate certified at the reliability corner.
    pub fn r_rob(&self) -> f64 {
        self.r_rob
    }

    pub fn covert_corner(&self) -> ChannelParams {
        self.covert_corner
    }

    pub fn reliab_corner(&self) -> ChannelParams {
        self.reliab_corner
    }

    /// Box-minimal covertness constant `c_cov(η_min, n̄_B,min)`.
    pub fn c_cov_rob(&self) -> f64 {
        self.c_cov_rob
    }

    /// Box-maximal depolarizing parameter `p(η_min, n̄_B,max)`.
    pub fn p_worst(&self) -> f64 {
        self.p_worst
    }

    /// Guaranteed expected covert qubits per frame, `n·q_rob·r_rob`.
    pub fn m_rob(&self) -> f64 {
        self.m_rob
    }
}

/// Computes the robust policy for `box × policy`.
///
/// Fails with [`Error::QOutOfRange`] when `q_rob > 1`: the square-root-law
/// regime needs more channel uses for the requested `δ` and box. Clamping
/// instead would silently break the payload identity `M_rob = n·q_rob·r_rob`.
pub fn robust_plan(ubox: &UncertaintyBox, policy: PolicyParams) -> Result<RobustPlan> {
    let covert_corner = ubox.covertness_corner()?;
    let reliab_corner = ubox.reliability_corner()?;
    let c_cov_rob = covertness_constant(covert_corner);
    let q_rob = 2.0 * policy.delta() * c_cov_rob / (policy.n() as f64).sqrt();
    if q_rob > 1.0 {
        return Err(Error::QOutOfRange { q: q_rob });
    }
    let p_worst = depolarizing_p(reliab_corner);
    let r_rob = hashing_rate_at(reliab_corner);
    let m_rob = policy.n() as f64 * q_rob * r_rob;
    Ok(RobustPlan {
        q_rob,
        r_rob,
        covert_corner,
        reliab_corner,
        c_cov_rob,
        p_worst,
        m_rob,
    })
}

/// Naive policy: both knobs tuned to one assumed operating point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NaivePlan {
    q_nom: f64,
    r_nom: f64,
    scheduled_payload: f64,
}

impl NaivePlan {
    pub fn q_nom(&self) -> f64 {
        self.q_nom
    }

    pub fn r_nom(&self) -> f64 {
        self.r_nom
    }

    /// Payload the naive policy *schedules* assuming its point is the truth:
    /// `n·q_nom·r_nom`. Not a guarantee over any larger set.
    pub fn scheduled_payload(&self) -> f64 {
        self.scheduled_payload
    }
}

/// Computes the naive policy tuned to `nominal`. Same `q ≤ 1` check as
/// [`robust_plan`].
pub fn naive_plan(nominal: ChannelParams, policy: PolicyParams) -> Result<NaivePlan> {
    let c_cov = covertness_constant(nominal);
    let q_nom = 2.0 * policy.delta() * c_cov / (policy.n() as f64).sqrt();
    if q_nom > 1.0 {
        return Err(Error::QOutOfRange { q: q_nom });
    }
    let r_nom = hashing_rate_at(nominal);
    let scheduled_payload = policy.n() as f64 * q_nom * r_nom;
    Ok(NaivePlan {
        q_nom,
        r_nom,
        scheduled_payload,
    })
}

/// Whether the naive policy survives every point of a box, and if not, where
/// it fails.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeasibilityVerdict {
    feasible: bool,
    covertness_witness: Option<ChannelParams>,
    reliability_witness: Option<ChannelParams>,
    guaranteed_payload: f64,
}

impl FeasibilityVerdict {
    pub fn feasible(&self) -> bool {
        self.feasible
    }

    /// Corner where the naive `q` exceeds the covertness cap, if any.
    pub fn covertness_witness(&self) -> Option<ChannelParams> {
        self.covertness_witness
    }

    /// Corner where the naive rate exceeds the certified rate, if any.
    pub fn reliability_witness(&self) -> Option<ChannelParams> {
        self.reliability_witness
    }

    /// Payload the naive policy can guarantee over the whole box: its
    /// scheduled payload when feasible, otherwise 0.
    pub fn guaranteed_payload(&self) -> f64 {
        self.guaranteed_payload
    }
}

/// Checks the naive policy (tuned to `nominal`) against the worst corners of
/// `ubox`.
///
/// Covertness fails at `(η_min, n̄_B,min)` when
/// `q_nom > 2·δ·c_cov(η_min, n̄_B,min)/√n`; reliability fails at
/// `(η_min, n̄_B,max)` when `r_nom > R(p(η_min, n̄_B,max))`. One witness
/// suffices to zero the guaranteed payload.
pub fn naive_feasibility(
    ubox: &UncertaintyBox,
    nominal: ChannelParams,
    policy: PolicyParams,
) -> Result<FeasibilityVerdict> {
    let plan = naive_plan(nominal, policy)?;
    let covert_corner = ubox.covertness_corner()?;
    let reliab_corner = ubox.reliability_corner()?;
    let q_cap = 2.0 * policy.delta() * covertness_constant(covert_corner)
        / (policy.n() as f64).sqrt();
    let r_cap = hashing_rate_at(reliab_corner);
    let covertness_witness = (plan.q_nom() > q_cap).then_some(covert_corner);
    let reliability_witness = (plan.r_nom() > r_cap).then_some(reliab_corner);
    let feasible = covertness_witness.is_none() && reliability_witness.is_none();
    let guaranteed_payload = if feasible {
        plan.scheduled_payload()
    } else {
        0.0
    };
    Ok(FeasibilityVerdict {
        feasible,
        covertness_witness,
        reliability_witness,
        guaranteed_payload,
    })
}

/// Hypothetical aligned payload: both constraints evaluated at the
/// reliability corner, `2·√n·c_cov(η_min, n̄_B,max)·R(p(η_min, n̄_B,max))·δ`.
///
/// Never smaller than the robust payload, because
/// `c_cov(η_min, n̄_B,max) ≥ c_cov(η_min, n̄_B,min)`.
pub fn aligned_payload(ubox: &UncertaintyBox, policy: PolicyParams) -> Result<f64> {
    let corner = ubox.reliability_corner()?;
    let c_cov = covertness_constant(corner);
    let q = 2.0 * policy.delta() * c_cov / (policy.n() as f64).sqrt();
    if q > 1.0 {
        return Err(Error::QOutOfRange { q });
    }
    let r = hashing_rate_at(corner);
    Ok(policy.n() as f64 * q * r)
}

/// Security tax: fraction of the aligned payload lost to the mismatch
/// between the covertness and reliability corners.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TaxReport {
    m_rob: f64,
    m_aligned: f64,
    tax_fraction: f64,
    post_cliff: bool,
}

impl TaxReport {
    pub fn m_rob(&self) -> f64 {
        self.m_rob
    }

    pub fn m_aligned(&self) -> f64 {
        self.m_aligned
    }

    /// `(m_aligned − m_rob)/m_aligned` while the certified rate is positive;
    /// fixed at 1.0 past the rate cliff (see [`TaxReport::post_cliff`]).
    pub fn tax_fraction(&self) -> f64 {
        self.tax_fraction
    }

    /// True when the certified rate is zero, in which case `tax_fraction` is
    /// the reporting convention 1.0 rather than a computed ratio (both
    /// payloads vanish and the ratio is indeterminate).
    pub fn post_cliff(&self) -> bool {
        self.post_cliff
    }
}

/// Computes the security tax for `box × policy`.
pub fn security_tax(ubox: &UncertaintyBox, policy: PolicyParams) -> Result<TaxReport> {
    let plan = robust_plan(ubox, policy)?;
    let m_aligned = aligned_payload(ubox, policy)?;
    if plan.r_rob() == 0.0 {
        return Ok(TaxReport {
            m_rob: plan.m_rob(),
            m_aligned,
            tax_fraction: 1.0,
            post_cliff: true,
        });
    }
    // The max(0) guards the degenerate-box case, where both payloads are the
    // same expression and rounding could otherwise produce -1e-16.
    let tax_fraction = ((m_aligned - plan.m_rob()) / m_aligned).max(0.0);
    Ok(TaxReport {
        m_rob: plan.m_rob(),
        m_aligned,
        tax_fraction,
        post_cliff: false,
    })
}
