use thiserror::Error;

/// Errors raised by parameter validation and the planner.
///
/// Every variant describes a rejected *input* (fail-fast constructors) except
/// [`Error::QOutOfRange`], which reports that the requested covertness budget
/// cannot be met with the given number of channel uses.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("transmittance must lie strictly between 0 and 1, got {0}")]
    TransmittanceOutOfRange(f64),
    #[error("mean thermal photon number must be positive and finite, got {0}")]
    ThermalNoiseOutOfRange(f64),
    #[error("channel uses per frame must be a positive integer, got {0}")]
    ChannelUsesOutOfRange(u64),
    #[error("covertness parameter delta must lie strictly between 0 and 0.5, got {0}")]
    DeltaOutOfRange(f64),
    #[error("depolarizing probability must lie in [0, 1], got {0}")]
    ProbabilityOutOfRange(f64),
    #[error("probability vector entries must be nonnegative, got {0}")]
    NegativeProbability(f64),
    #[error("probability vector must sum to 1 within 1e-9, got sum {0}")]
    UnnormalizedDistribution(f64),
    #[error("uncertainty margin must lie in [0, 1), got {0}")]
    MarginOutOfRange(f64),
    #[error(
        "box bounds must satisfy 0 < eta_min <= eta_max <= 1 and 0 < nb_min <= nb_max, \
         got eta in [{eta_min}, {eta_max}], nb in [{nb_min}, {nb_max}]"
    )]
    InvalidBoxBounds {
        eta_min: f64,
        eta_max: f64,
        nb_min: f64,
        nb_max: f64,
    },
    #[error("box corner has eta = 1, where the covertness constant is undefined")]
    DegenerateCorner,
    #[error(
        "required transmission probability q = {q} exceeds 1; \
         n is too small for the requested delta and uncertainty box"
    )]
    QOutOfRange { q: f64 },
    #[error("grid axis needs at least 2 points, got {0}")]
    GridTooSmall(usize),
    #[error("grid range [{lo}, {hi}] is not an ordered interval inside the valid domain")]
    InvalidGridRange { lo: f64, hi: f64 },
    #[error("sweep needs at least one point on each axis")]
    EmptySweep,
}

pub type Result<T> = std::result::Result<T, Error>;
