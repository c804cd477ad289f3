//! Elementary mode operators on the truncated Fock basis.

use nalgebra::DMatrix;

use crate::error::{FockError, Result};

/// Annihilation operator on a single mode truncated at `cutoff` levels:
/// `a|k⟩ = √k |k−1⟩`, so the only nonzero entries are `a[(k−1, k)] = √k`.
pub fn annihilation(cutoff: usize) -> Result<DMatrix<f64>> {
    if cutoff < 2 {
        return Err(FockError::CutoffTooSmall(cutoff));
    }
    let mut a = DMatrix::<f64>::zeros(cutoff, cutoff);
    for k in 1..cutoff {
        a[(k - 1, k)] = (k as f64).sqrt();
    }
    Ok(a)
}
