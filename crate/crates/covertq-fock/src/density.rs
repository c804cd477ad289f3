//! Certified density operators on truncated Fock spaces.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{FockError, Result};

/// Tolerance for the Hermiticity and unit-trace certificates.
pub(crate) const VALIDITY_TOL: f64 = 1e-10;

/// A density operator over `modes` tensor factors of a `cutoff`-level
/// truncated Fock space, certified Hermitian, unit-trace, and positive
/// semidefinite (all within `1e-10`) at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    matrix: DMatrix<Complex64>,
    cutoff: usize,
    modes: u32,
}

impl DensityOperator {
    /// Certifies `matrix` as a density operator on `modes` factors of
    /// dimension `cutoff` each. Rejects wrong dimensions, non-Hermitian or
    /// non-unit-trace matrices, and matrices with an eigenvalue below
    /// `−1e-10`.
    pub fn new(matrix: DMatrix<Complex64>, cutoff: usize, modes: u32) -> Result<Self> {
        if cutoff < 2 {
            return Err(FockError::CutoffTooSmall(cutoff));
        }
        if modes == 0 {
            return Err(FockError::InvalidModeCount(modes));
        }
        let expected = cutoff
            .checked_pow(modes)
            .ok_or(FockError::InvalidModeCount(modes))?;
        if matrix.nrows() != expected || matrix.ncols() != expected {
            return Err(FockError::DimensionMismatch {
                dim: matrix.nrows().max(matrix.ncols()),
                expected,
            });
        }
        let mut herm_dev: f64 = 0.0;
        for i in 0..expected {
            for j in i..expected {
                herm_dev = herm_dev.max((matrix[(i, j)] - matrix[(j, i)].conj()).norm());
            }
        }
        if herm_dev > VALIDITY_TOL {
            return Err(FockError::NotHermitian(herm_dev));
        }
        let trace_dev = (matrix.trace() - Complex64::new(1.0, 0.0)).norm();
        if trace_dev > VALIDITY_TOL {
            return Err(FockError::NotUnitTrace(trace_dev));
        }
        let eig = SymmetricEigen::new(matrix.clone());
        let min_eig = eig.eigenvalues.min();
        if min_eig < -VALIDITY_TOL {
            return Err(FockError::NotPositive(min_eig));
        }
        Ok(Self {
            matrix,
            cutoff,
            modes,
        })
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    /// Basis dimension of each tensor factor.
    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    /// Number of tensor factors.
    pub fn modes(&self) -> u32 {
        self.modes
    }

    /// Total matrix dimension, `cutoff^modes`.
    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// Diagonal of the operator in the Fock basis (real parts; the imaginary
    /// parts of a Hermitian diagonal vanish).
    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.dim()).map(|k| self.matrix[(k, k)].re).collect()
    }

    /// Tensor product with another operator over the same per-mode cutoff.
    /// Mode indices of `other` follow those of `self`.
    pub fn tensor(&self, other: &DensityOperator) -> Result<DensityOperator> {
        if other.cutoff != self.cutoff {
            return Err(FockError::DimensionMismatch {
                dim: other.cutoff,
                expected: self.cutoff,
            });
        }
        // The Kronecker product of certified density operators is itself
        // Hermitian, unit-trace, and positive; no re-certification needed.
        Ok(DensityOperator {
            matrix: self.matrix.kronecker(&other.matrix),
            cutoff: self.cutoff,
            modes: self.modes + other.modes,
        })
    }

    /// Mean photon number of one mode: `tr[ρ·(a†a)_mode]`, evaluated on the
    /// diagonal. Mode 0 is the leftmost (most significant) tensor factor.
    pub fn mean_photon_number(&self, mode: u32) -> Result<f64> {
        if mode >= self.modes {
            return Err(FockError::ModeOutOfRange {
                mode,
                modes: self.modes,
            });
        }
        // Index stride of the requested mode in the row-major Kronecker
        // ordering: the leftmost factor varies slowest.
        let stride = self.cutoff.pow(self.modes - 1 - mode);
        let mean = (0..self.dim())
            .map(|k| {
                let occupation = (k / stride) % self.cutoff;
                occupation as f64 * self.matrix[(k, k)].re
            })
            .sum();
        Ok(mean)
    }
}

/// Partial trace over the first (most significant) mode of a raw two-mode
/// matrix of per-mode dimension `cutoff`; keeps the second mode.
pub(crate) fn trace_out_first(m: &DMatrix<Complex64>, cutoff: usize) -> DMatrix<Complex64> {
    debug_assert_eq!(m.nrows(), cutoff * cutoff);
    let mut out = DMatrix::<Complex64>::zeros(cutoff, cutoff);
    for i in 0..cutoff {
        for j in 0..cutoff {
            for jp in 0..cutoff {
                out[(j, jp)] += m[(i * cutoff + j, i * cutoff + jp)];
            }
        }
    }
    out
}
