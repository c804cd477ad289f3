//! Grids and parameter sweeps assembled from the planner primitives.
//!
//! Every sweep in this module is a plain deterministic loop over the same
//! public operations a caller would invoke one at a time, so any cell of any
//! table is bit-identical to the corresponding standalone computation. Rows
//! follow a fixed ordering (row-major for the design map, input order for
//! lists), making emitted tables byte-reproducible.

use crate::boxes::UncertaintyBox;
use crate::channel::{ChannelParams, PolicyParams};
use crate::cliff::solve_u_crit;
use crate::error::{Error, Result};
use crate::plan::{naive_plan, robust_plan};

/// `i`-th of `k` evenly spaced points on `[lo, hi]`, endpoints exact.
pub fn linspace(lo: f64, hi: f64, k: usize, i: usize) -> f64 {
    debug_assert!(k >= 2 && i < k);
    if i == 0 {
        lo
    } else if i == k - 1 {
        hi
    } else {
        lo + (i as f64) * (hi - lo) / ((k - 1) as f64)
    }
}

/// `k` logarithmically spaced integers from `lo` to `hi` inclusive
/// (rounded to nearest), for sweeping channel-use counts across decades.
pub fn logspace_u64(lo: u64, hi: u64, k: usize) -> Result<Vec<u64>> {
    if k < 2 {
        return Err(Error::GridTooSmall(k));
    }
    if lo < 1 || lo > hi {
        return Err(Error::InvalidGridRange {
            lo: lo as f64,
            hi: hi as f64,
        });
    }
    let (llo, lhi) = ((lo as f64).log10(), (hi as f64).log10());
    Ok((0..k)
        .map(|i| 10f64.powf(linspace(llo, lhi, k, i)).round() as u64)
        .collect())
}

/// One design-map cell: the nominal point, its critical uncertainty level,
/// and the guaranteed payload of the symmetric `u`-box around it. `m_rob` is
/// `None` for cells where the covertness budget is unattainable (`q > 1`);
/// such cells are flagged rather than failing the whole map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapCell {
    pub eta0: f64,
    pub nb0: f64,
    pub u_crit: Option<f64>,
    pub m_rob: Option<f64>,
}

/// Design map over nominal operating points: an `n_eta × n_nb` grid spanning
/// `eta_range × nb_range`, with `u_crit` and the symmetric-box `m_rob`
/// evaluated at every point. Cells are emitted row-major: `eta0` outermost
/// (ascending), `nb0` innermost (ascending).
pub fn design_map(
    eta_range: (f64, f64),
    nb_range: (f64, f64),
    n_eta: usize,
    n_nb: usize,
    u: f64,
    policy: PolicyParams,
) -> Result<Vec<MapCell>> {
    if n_eta < 2 {
        return Err(Error::GridTooSmall(n_eta));
    }
    if n_nb < 2 {
        return Err(Error::GridTooSmall(n_nb));
    }
    let (elo, ehi) = eta_range;
    let (nlo, nhi) = nb_range;
    if !(elo > 0.0 && elo <= ehi && ehi < 1.0) {
        return Err(Error::InvalidGridRange { lo: elo, hi: ehi });
    }
    if !(nlo > 0.0 && nlo <= nhi && nhi.is_finite()) {
        return Err(Error::InvalidGridRange { lo: nlo, hi: nhi });
    }
    if !(0.0..1.0).contains(&u) {
        return Err(Error::MarginOutOfRange(u));
    }
    let mut cells = Vec::with_capacity(n_eta * n_nb);
    for i in 0..n_eta {
        let eta0 = linspace(elo, ehi, n_eta, i);
        for j in 0..n_nb {
            let nb0 = linspace(nlo, nhi, n_nb, j);
            let nominal = ChannelParams::new(eta0, nb0)
                .expect("validated ranges keep grid points in the valid domain");
            let u_crit = solve_u_crit(nominal);
            let m_rob = match UncertaintyBox::symmetric(nominal, u)
                .and_then(|b| robust_plan(&b, policy))
            {
                Ok(plan) => Some(plan.m_rob()),
                Err(Error::QOutOfRange { .. }) => None,
                Err(other) => return Err(other),
            };
            cells.push(MapCell {
                eta0,
                nb0,
                u_crit,
                m_rob,
            });
        }
    }
    Ok(cells)
}

/// One row of the payload-versus-`n` sweep: the perfect-knowledge scheduled
/// payload at the nominal point, and the robust guaranteed payload for each
/// requested symmetric uncertainty level.
#[derive(Debug, Clone, PartialEq)]
pub struct PayloadVsNRow {
    pub n: u64,
    pub perfect: f64,
    pub robust: Vec<f64>,
}

/// Sweeps the frame length: for each `n`, the naive scheduled payload at
/// `nominal` (perfect knowledge) and `m_rob` for each `u` in `u_levels`.
/// All payloads scale as `√n`.
pub fn sweep_payload_vs_n(
    nominal: ChannelParams,
    u_levels: &[f64],
    n_values: &[u64],
    delta: f64,
) -> Result<Vec<PayloadVsNRow>> {
    if n_values.is_empty() {
        return Err(Error::EmptySweep);
    }
    let boxes = u_levels
        .iter()
        .map(|&u| UncertaintyBox::symmetric(nominal, u))
        .collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::with_capacity(n_values.len());
    for &n in n_values {
        let policy = PolicyParams::new(n, delta)?;
        let perfect = naive_plan(nominal, policy)?.scheduled_payload();
        let robust = boxes
            .iter()
            .map(|b| robust_plan(b, policy).map(|p| p.m_rob()))
            .collect::<Result<Vec<_>>>()?;
        rows.push(PayloadVsNRow { n, perfect, robust });
    }
    Ok(rows)
}

/// One row of the payload-versus-uncertainty sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PayloadVsURow {
    pub u: f64,
    pub m_rob: f64,
}

/// Sweeps the symmetric uncertainty level: `m_rob` of the `u`-box around
/// `nominal` for each `u` in `u_values`. Nonincreasing in `u`, exactly zero
/// at and above the critical level.
pub fn sweep_payload_vs_u(
    nominal: ChannelParams,
    u_values: &[f64],
    policy: PolicyParams,
) -> Result<Vec<PayloadVsURow>> {
    if u_values.is_empty() {
        return Err(Error::EmptySweep);
    }
    u_values
        .iter()
        .map(|&u| {
            let ubox = UncertaintyBox::symmetric(nominal, u)?;
            Ok(PayloadVsURow {
                u,
                m_rob: robust_plan(&ubox, policy)?.m_rob(),
            })
        })
        .collect()
}

/// One row of the symmetric-versus-asymmetric comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymAsymRow {
    pub u: f64,
    pub m_sym: f64,
    pub m_asym: f64,
}

/// Result of [`compare_sym_asym`]: the per-`u` table and the equivalent
/// symmetric margin (the `u` at which the symmetric guarantee falls to the
/// fixed asymmetric one), when it is bracketed by the swept range.
#[derive(Debug, Clone, PartialEq)]
pub struct SymAsymComparison {
    pub rows: Vec<SymAsymRow>,
    pub crossing_u: Option<f64>,
}

/// Compares the symmetric-box guarantee (a decreasing function of `u`) with
/// the guarantee of one fixed asymmetric box (constant in `u`), and locates
/// their crossing by bisection when `m_sym(u_first) ≥ m_asym ≥ m_sym(u_last)`.
pub fn compare_sym_asym(
    nominal: ChannelParams,
    margins: (f64, f64, f64, f64),
    u_values: &[f64],
    policy: PolicyParams,
) -> Result<SymAsymComparison> {
    if u_values.is_empty() {
        return Err(Error::EmptySweep);
    }
    let (a, b, c, d) = margins;
    let asym_box = UncertaintyBox::asymmetric(nominal, a, b, c, d)?;
    let m_asym = robust_plan(&asym_box, policy)?.m_rob();
    let m_sym = |u: f64| -> Result<f64> {
        let ubox = UncertaintyBox::symmetric(nominal, u)?;
        Ok(robust_plan(&ubox, policy)?.m_rob())
    };
    let rows = u_values
        .iter()
        .map(|&u| {
            Ok(SymAsymRow {
                u,
                m_sym: m_sym(u)?,
                m_asym,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let (mut lo, mut hi) = (u_values[0], u_values[u_values.len() - 1]);
    let crossing_u = if m_sym(lo)? >= m_asym && m_sym(hi)? <= m_asym {
        while hi - lo > 1e-9 {
            let mid = 0.5 * (lo + hi);
            if m_sym(mid)? > m_asym {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some(0.5 * (lo + hi))
    } else {
        None
    };
    Ok(SymAsymComparison { rows, crossing_u })
}
