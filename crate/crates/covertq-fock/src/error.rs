use thiserror::Error;

/// Errors raised by state construction, operator algebra, and the divergence
/// estimators. Validation is fail-fast: every public constructor checks its
/// inputs and every produced density operator is certified before it is
/// returned.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FockError {
    #[error("Fock cutoff must be at least 2, got {0}")]
    CutoffTooSmall(usize),
    #[error("transmittance must lie strictly between 0 and 1, got {0}")]
    InvalidTransmittance(f64),
    #[error("mean thermal photon number must be nonnegative and finite, got {0}")]
    InvalidThermalOccupation(f64),
    #[error("operator dimension {dim} does not match the required dimension {expected}")]
    DimensionMismatch { dim: usize, expected: usize },
    #[error("number of tensor-factor modes must be at least 1, got {0}")]
    InvalidModeCount(u32),
    #[error("matrix is not Hermitian: max |M - M†| entry = {0}")]
    NotHermitian(f64),
    #[error("matrix trace deviates from 1 by {0}")]
    NotUnitTrace(f64),
    #[error("matrix is not positive semidefinite: smallest eigenvalue = {0}")]
    NotPositive(f64),
    #[error("mode index {mode} out of range for a {modes}-mode operator")]
    ModeOutOfRange { mode: u32, modes: u32 },
    #[error("Fock index {index} out of range for cutoff {cutoff}")]
    FockIndexOutOfRange { index: usize, cutoff: usize },
    #[error("dual-rail amplitudes must satisfy |alpha|^2 + |beta|^2 = 1 within 1e-12, got {0}")]
    UnnormalizedSignal(f64),
    #[error("divergence coefficient must be positive, got {0}")]
    NonpositiveCoefficient(f64),
    #[error("cutoff list must be strictly ascending with every entry at least 3")]
    InvalidCutoffList,
}

pub type Result<T> = std::result::Result<T, FockError>;
