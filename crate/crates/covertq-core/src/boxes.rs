//! Rectangular uncertainty sets over the channel point `(η, n̄_B)` and the
//! two corners at which worst cases are attained.
//!
//! For a rectangle `[η_min, η_max] × [n̄_B,min, n̄_B,max]`, monotonicity of the
//! point formulas pins both worst cases to corners:
//!
//! * covertness is tightest where `c_cov` is smallest — at
//!   `(η_min, n̄_B,min)` (the *covertness corner*);
//! * reliability is worst where `p` is largest — at `(η_min, n̄_B,max)`
//!   (the *reliability corner*).
//!
//! Both corners sit on the `η_min` edge but at opposite ends of the noise
//! interval; that mismatch is the source of the security tax computed in
//! [`crate::plan`].

use crate::channel::ChannelParams;
use crate::error::{Error, Result};

/// How an [`UncertaintyBox`] was constructed. Retained so reports can state
/// the margin model that produced the bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoxProvenance {
    /// Symmetric relative margin: `η ∈ [(1−u)η₀, min{(1+u)η₀, 1}]`,
    /// `n̄_B ∈ [(1−u)n̄_B,0, (1+u)n̄_B,0]`.
    Symmetric { u: f64 },
    /// Independent one-sided relative margins:
    /// `η ∈ [(1−a)η₀, min{(1+b)η₀, 1}]`, `n̄_B ∈ [(1−c)n̄_B,0, (1+d)n̄_B,0]`.
    Asymmetric { a: f64, b: f64, c: f64, d: f64 },
    /// Interval endpoints given directly.
    Explicit,
}

/// Rectangular set `[η_min, η_max] × [n̄_B,min, n̄_B,max]` of channel points.
///
/// Invariants: `0 < η_min ≤ η_max ≤ 1` and `0 < n̄_B,min ≤ n̄_B,max`, all
/// finite. `η_max = 1` is legal (relative margins clamp there); the corner
/// accessors reject the degenerate case `η_min = 1`, where the covertness
/// constant is undefined.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UncertaintyBox {
    eta_min: f64,
    eta_max: f64,
    nb_min: f64,
    nb_max: f64,
    provenance: BoxProvenance,
}

impl UncertaintyBox {
    /// Box with symmetric relative margin `u ∈ [0, 1)` around a nominal
    /// point. `u = 0` yields a degenerate point box; `u ≥ 1` is rejected
    /// because the lower bounds would become nonpositive. The upper
    /// transmittance bound clamps at 1.
    pub fn symmetric(nominal: ChannelParams, u: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&u) {
            return Err(Error::MarginOutOfRange(u));
        }
        Self::checked(
            (1.0 - u) * nominal.eta(),
            ((1.0 + u) * nominal.eta()).min(1.0),
            (1.0 - u) * nominal.n_bar_b(),
            (1.0 + u) * nominal.n_bar_b(),
            BoxProvenance::Symmetric { u },
        )
    }

    /// Box with independent one-sided relative margins `a, b, c, d ∈ [0, 1)`:
    /// `a`/`b` shrink/grow the transmittance, `c`/`d` the thermal noise. The
    /// upper transmittance bound clamps at 1.
    pub fn asymmetric(nominal: ChannelParams, a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        for m in [a, b, c, d] {
            if !(0.0..1.0).contains(&m) {
                return Err(Error::MarginOutOfRange(m));
            }
        }
        Self::checked(
            (1.0 - a) * nominal.eta(),
            ((1.0 + b) * nominal.eta()).min(1.0),
            (1.0 - c) * nominal.n_bar_b(),
            (1.0 + d) * nominal.n_bar_b(),
            BoxProvenance::Asymmetric { a, b, c, d },
        )
    }

    /// Box from explicit interval endpoints.
    pub fn explicit(eta_min: f64, eta_max: f64, nb_min: f64, nb_max: f64) -> Result<Self> {
        Self::checked(eta_min, eta_max, nb_min, nb_max, BoxProvenance::Explicit)
    }

    fn checked(
        eta_min: f64,
        eta_max: f64,
        nb_min: f64,
        nb_max: f64,
        provenance: BoxProvenance,
    ) -> Result<Self> {
        let ok = eta_min > 0.0
            && eta_min <= eta_max
            && eta_max <= 1.0
            && nb_min > 0.0
            && nb_min <= nb_max
            && nb_max.is_finite();
        if !ok {
            return Err(Error::InvalidBoxBounds {
                eta_min,
                eta_max,
                nb_min,
                nb_max,
            });
        }
        Ok(Self {
            eta_min,
            eta_max,
            nb_min,
            nb_max,
            provenance,
        })
    }

    pub fn eta_min(&self) -> f64 {
        self.eta_min
    }

    pub fn eta_max(&self) -> f64 {
        self.eta_max
    }

    pub fn nb_min(&self) -> f64 {
        self.nb_min
    }

    pub fn nb_max(&self) -> f64 {
        self.nb_max
    }

    pub fn provenance(&self) -> BoxProvenance {
        self.provenance
    }

    /// Corner minimizing the covertness constant over the box:
    /// `(η_min, n̄_B,min)`, since `c_cov` increases in both coordinates.
    pub fn covertness_corner(&self) -> Result<ChannelParams> {
        if self.eta_min >= 1.0 {
            return Err(Error::DegenerateCorner);
        }
        ChannelParams::new(self.eta_min, self.nb_min)
    }

    /// Corner maximizing the depolarizing parameter over the box:
    /// `(η_min, n̄_B,max)`, since `p` decreases in `η` and increases in `n̄_B`.
    pub fn reliability_corner(&self) -> Result<ChannelParams> {
        if self.eta_min >= 1.0 {
            return Err(Error::DegenerateCorner);
        }
        ChannelParams::new(self.eta_min, self.nb_max)
    }
}
