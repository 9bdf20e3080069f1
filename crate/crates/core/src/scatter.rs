//! Scattering coefficients and phase shifts.

use std::f64::consts::FRAC_PI_2;

use rayon::prelude::*;
use specfun::LogScaled;

use crate::error::{domain, Error, Result};
use crate::fock::branch_values_pair;
use crate::region::{Region, RegionSolution};
use crate::well::WellSpec;

/// Largest accepted relative residual of the two matching rows.
pub const MATCHING_TOL: f64 = 1e-10;
/// Determinants below this fraction of the larger product are singular.
const SINGULAR_TOL: f64 = 1e-13;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScatteringSolution {
    pub interior: RegionSolution,
    pub exterior: RegionSolution,
    /// Largest relative residual of the matching rows `N` and `N + 1`.
    pub residual: f64,
}

/// Solves the matching rows `N` and `N + 1` with interior `B = 0` and
/// exterior `A = 1`.
pub fn scattering_coeffs(energy: f64, spec: &WellSpec, m: i32) -> Result<ScatteringSolution> {
    let v = spec.v();
    if !(energy > v) || !energy.is_finite() {
        return domain(format!("scattering energy must exceed V = {v}, got {energy}"));
    }
    spec.check_order(m)?;
    let n = spec.cap_n();
    let w_in = spec.theta() * energy;
    let w_out = spec.theta() * (energy - v);
    let inner = branch_values_pair(n, m, w_in, (true, false))?;
    let outer = branch_values_pair(n, m, w_out, (true, true))?;

    // A_in a_in(r) - B_out b_out(r) = a_out(r) for r = N, N+1
    let mat = [[inner[0].a, -outer[0].b], [inner[1].a, -outer[1].b]];
    let rhs = [outer[0].a, outer[1].a];

    let p = mat[0][0] * mat[1][1];
    let q = mat[0][1] * mat[1][0];
    let det = p - q;
    let scale = p.max_abs(q);
    if det.is_zero() || (det / scale).to_f64().abs() < SINGULAR_TOL {
        return Err(Error::Singular { energy, m });
    }
    let a_in = (rhs[0] * mat[1][1] - mat[0][1] * rhs[1]) / det;
    let b_out = (mat[0][0] * rhs[1] - rhs[0] * mat[1][0]) / det;

    let residual = (0..2)
        .map(|r| {
            let t = [mat[r][0] * a_in, mat[r][1] * b_out, -rhs[r]];
            let big = t[0].max_abs(t[1]).max_abs(t[2]);
            if big.is_zero() {
                0.0
            } else {
                ((t[0] + t[1] + t[2]) / big).to_f64().abs()
            }
        })
        .fold(0.0, f64::max);
    if !(residual < MATCHING_TOL) {
        return Err(Error::NoConvergence(format!(
            "matching residual {residual:e} at E = {energy}, m = {m} exceeds {MATCHING_TOL:e}"
        )));
    }
    Ok(ScatteringSolution {
        interior: RegionSolution::new(Region::Interior, w_in, a_in, LogScaled::ZERO),
        exterior: RegionSolution::new(Region::Exterior, w_out, LogScaled::ONE, b_out),
        residual,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhaseShiftPoint {
    pub m: i32,
    pub energy: f64,
    /// May be infinite at a resonance.
    pub tan_delta: f64,
    /// Principal branch in `(-π/2, π/2]`.
    pub delta: f64,
    pub delta_unwrapped: Option<f64>,
}

impl PhaseShiftPoint {
    pub fn from_tan(m: i32, energy: f64, tan_delta: f64) -> Self {
        let mut delta = tan_delta.atan();
        if delta <= -FRAC_PI_2 {
            delta = FRAC_PI_2;
        }
        PhaseShiftPoint { m, energy, tan_delta, delta, delta_unwrapped: None }
    }

    /// `sin^2 δ` without forming `δ`.
    pub fn sin2_delta(&self) -> f64 {
        let t = self.tan_delta;
        if t.abs() > 1.0 {
            1.0 / (1.0 + 1.0 / (t * t))
        } else {
            t * t / (1.0 + t * t)
        }
    }

    /// `sin δ cos δ`.
    pub fn sin_cos_delta(&self) -> f64 {
        let t = self.tan_delta;
        if t.is_infinite() {
            0.0
        } else if t.abs() > 1.0 {
            1.0 / (t + 1.0 / t)
        } else {
            t / (1.0 + t * t)
        }
    }
}

pub fn phase_shift(energy: f64, spec: &WellSpec, m: i32) -> Result<PhaseShiftPoint> {
    let sol = scattering_coeffs(energy, spec, m)?;
    let tan_delta = -(sol.exterior.coeff_b / sol.exterior.coeff_a).to_f64();
    Ok(PhaseShiftPoint::from_tan(m, energy, tan_delta))
}

/// Phase shifts at every energy, evaluated in parallel, in input order.
pub fn phase_shift_sweep(energies: &[f64], spec: &WellSpec, m: i32) -> Result<Vec<PhaseShiftPoint>> {
    let mut points = energies.par_iter().map(|&e| phase_shift(e, spec, m)).collect::<Result<Vec<_>>>()?;
    unwrap_phases(&mut points);
    Ok(points)
}

/// Fills `delta_unwrapped` by adding multiples of π to keep consecutive
/// points within π/2 of each other.
pub fn unwrap_phases(points: &mut [PhaseShiftPoint]) {
    let mut prev: Option<f64> = None;
    for p in points.iter_mut() {
        let d = match prev {
            None => p.delta,
            Some(q) => p.delta + ((q - p.delta) / std::f64::consts::PI).round() * std::f64::consts::PI,
        };
        p.delta_unwrapped = Some(d);
        prev = Some(d);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principal_branch() {
        assert_eq!(PhaseShiftPoint::from_tan(0, 1.0, f64::INFINITY).delta, FRAC_PI_2);
        assert_eq!(PhaseShiftPoint::from_tan(0, 1.0, f64::NEG_INFINITY).delta, FRAC_PI_2);
        assert_eq!(PhaseShiftPoint::from_tan(0, 1.0, f64::INFINITY).sin2_delta(), 1.0);
        assert_eq!(PhaseShiftPoint::from_tan(0, 1.0, 0.0).sin2_delta(), 0.0);
    }

    #[test]
    fn robust_forms_agree_with_delta() {
        for &t in &[-1e8, -3.0, -0.2, 0.0, 0.7, 1.0, 12.0, 1e12] {
            let p = PhaseShiftPoint::from_tan(0, 1.0, t);
            assert!((p.sin2_delta() - p.delta.sin().powi(2)).abs() < 1e-15);
            assert!((p.sin_cos_delta() - p.delta.sin() * p.delta.cos()).abs() < 1e-15);
        }
    }

    #[test]
    fn unwrapping_removes_jumps() {
        let mut pts: Vec<_> =
            [1.4, 1.55, -1.55, -1.4].iter().map(|&d: &f64| PhaseShiftPoint::from_tan(0, 1.0, d.tan())).collect();
        unwrap_phases(&mut pts);
        let u: Vec<f64> = pts.iter().map(|p| p.delta_unwrapped.unwrap()).collect();
        assert!((u[2] - (std::f64::consts::PI - 1.55)).abs() < 1e-12);
        assert!(u.windows(2).all(|w| w[1] > w[0]));
    }
}
