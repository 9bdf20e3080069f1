//! Bound states from the cross-multiplied matching condition.

use rayon::prelude::*;
use specfun::{kummer_u_ratio_auto, laguerre_pair, LogScaled};

use crate::error::{domain, Result};
use crate::fock::branch_values;
use crate::region::{Region, RegionSolution};
use crate::well::WellSpec;

pub const DEFAULT_GRID_POINTS: usize = 2000;
/// Scan margin at both ends of `(0, V)`, relative to `V`.
pub const EDGE_MARGIN: f64 = 1e-9;
/// Bisection stops once the bracket is below this fraction of `V`.
pub const BISECTION_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundState {
    pub m: i32,
    pub energy: f64,
    /// Matching function at `energy`.
    pub residual: f64,
    pub level: usize,
}

/// Normalized matching function `G(E)` in `[-2, 2]`; its zeros are the
/// bound states of partial wave `m`.
pub fn matching_residual_bound(energy: f64, spec: &WellSpec, m: i32) -> Result<f64> {
    let v = spec.v();
    if !(energy > 0.0 && energy < v) {
        return domain(format!("bound-state energy must lie in (0, V) = (0, {v}), got {energy}"));
    }
    spec.check_order(m)?;
    let n = spec.cap_n();
    let theta = spec.theta();
    let x = theta * (v - energy);
    let (l_n, l_next) = laguerre_pair(n, m, theta * energy)?;
    // U(N+2, 1-m, x) / U(N+1, 1-m, x); for m = -k the factor x^k cancels.
    let ratio = if m >= 0 {
        kummer_u_ratio_auto(n + 1, 1 - m, x)?
    } else {
        let k = m.unsigned_abs();
        kummer_u_ratio_auto(n + 1 - k, 1 - k as i32, x)?
    };
    let second = l_n * (ratio * (n as i64 + m as i64 + 1) as f64);
    let scale = l_next.max_abs(second);
    if scale.is_zero() {
        return Ok(0.0);
    }
    Ok(((l_next - second) / scale).to_f64())
}

/// Scans `(ε, V − ε)` on `grid_points` equally spaced energies and bisects
/// every sign change of the matching function.
pub fn find_bound_states(spec: &WellSpec, m: i32, grid_points: usize) -> Result<Vec<BoundState>> {
    spec.check_order(m)?;
    let g = |e: f64| matching_residual_bound(e, spec, m);
    scan_roots(spec.v(), grid_points, &g)?
        .into_iter()
        .enumerate()
        .map(|(level, (energy, residual))| Ok(BoundState { m, energy, residual, level }))
        .collect()
}

/// Roots of `f` on `(0, v)` by grid scan and bisection; shared with the
/// commutative solver so that both use identical tolerances.
pub fn scan_roots<F>(v: f64, grid_points: usize, f: &F) -> Result<Vec<(f64, f64)>>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    if !(v > 0.0) {
        return Ok(Vec::new());
    }
    if grid_points < 2 {
        return domain("the bound-state grid needs at least 2 points");
    }
    let eps = EDGE_MARGIN * v;
    let span = v - 2.0 * eps;
    let grid: Vec<f64> = (0..grid_points).map(|i| eps + span * i as f64 / (grid_points - 1) as f64).collect();
    let values = grid.par_iter().map(|&e| f(e)).collect::<Result<Vec<f64>>>()?;

    let mut brackets = Vec::new();
    for i in 0..grid_points {
        if values[i] == 0.0 {
            brackets.push((grid[i], grid[i]));
        } else if i + 1 < grid_points && values[i + 1] != 0.0 && (values[i] < 0.0) != (values[i + 1] < 0.0) {
            brackets.push((grid[i], grid[i + 1]));
        }
    }
    let tol = BISECTION_TOL * v;
    brackets
        .into_par_iter()
        .map(|(lo, hi)| {
            let (lo, hi) = bisect(f, lo, hi, tol)?;
            let e = 0.5 * (lo + hi);
            Ok((e, f(e)?))
        })
        .collect()
}

fn bisect<F: Fn(f64) -> Result<f64>>(f: &F, mut lo: f64, mut hi: f64, tol: f64) -> Result<(f64, f64)> {
    if lo == hi {
        return Ok((lo, hi));
    }
    let mut f_lo = f(lo)?;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            return Ok((mid, mid));
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}

/// Interior and exterior solutions of a bound state, normalized to unit
/// interior amplitude and matched at row `N`.
pub fn bound_state_solution(spec: &WellSpec, state: &BoundState) -> Result<(RegionSolution, RegionSolution)> {
    spec.check_order(state.m)?;
    let e = state.energy;
    if !(e > 0.0 && e < spec.v()) {
        return domain(format!("bound-state energy must lie in (0, V), got {e}"));
    }
    let n = spec.cap_n();
    let w_in = spec.theta() * e;
    let w_out = spec.theta() * (e - spec.v());
    let inner = branch_values(n, state.m, w_in, (true, false))?;
    let outer = branch_values(n, state.m, w_out, (false, true))?;
    Ok((
        RegionSolution::regular(Region::Interior, w_in),
        RegionSolution::new(Region::Exterior, w_out, LogScaled::ZERO, inner.a / outer.b),
    ))
}
