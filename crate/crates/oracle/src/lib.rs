//! Commutative circular well of radius `R` and exterior level `V`, solved
//! by continuity of the radial wave and its derivative at `r = R`.
//!
//! Used as the θ → 0 reference for the non-commutative solver.

use ncwell::bound::scan_roots;
use ncwell::cross::{sum_partial_waves, wave_number, WaveSet};
use ncwell::{BoundState, CrossSectionPoint, Error, PhaseShiftPoint, Result};
use specfun::{bessel_with_derivative, BesselKind};

/// Root scan density for bound states.
pub const GRID_POINTS: usize = 4000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CommWellSpec {
    radius: f64,
    v: f64,
}

impl CommWellSpec {
    pub fn new(radius: f64, v: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::Domain(format!("radius must be positive, got {radius}")));
        }
        if !(v >= 0.0 && v.is_finite()) {
            return Err(Error::Domain(format!("V must be finite and non-negative, got {v}")));
        }
        Ok(CommWellSpec { radius, v })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn v(&self) -> f64 {
        self.v
    }
}

/// `k J_m'(kR) - κ (K_m'/K_m)(κR) J_m(kR)`, normalized by its larger term.
/// Zeros are the bound states.
pub fn comm_matching_function(energy: f64, spec: &CommWellSpec, m: i32) -> Result<f64> {
    let m = m.unsigned_abs();
    let k = (2.0 * energy).sqrt();
    let kappa = (2.0 * (spec.v - energy)).sqrt();
    let (j, jp) = bessel_with_derivative(BesselKind::J, m, k * spec.radius)?;
    let (kv, kp) = bessel_with_derivative(BesselKind::K, m, kappa * spec.radius)?;
    let first = k * jp;
    let second = kappa * (kp / kv) * j;
    let scale = first.abs().max(second.abs());
    if scale == 0.0 {
        return Ok(0.0);
    }
    Ok((first - second) / scale)
}

/// Bound states of order `|m|` with a scan of [`GRID_POINTS`] energies.
pub fn comm_bound_states(spec: &CommWellSpec, m: i32) -> Result<Vec<BoundState>> {
    comm_bound_states_with_grid(spec, m, GRID_POINTS)
}

pub fn comm_bound_states_with_grid(spec: &CommWellSpec, m: i32, grid_points: usize) -> Result<Vec<BoundState>> {
    let f = |e: f64| comm_matching_function(e, spec, m);
    Ok(scan_roots(spec.v, grid_points, &f)?
        .into_iter()
        .enumerate()
        .map(|(level, (energy, residual))| BoundState { m, energy, residual, level })
        .collect())
}

/// Numerator and denominator of `tan δ_m`.
pub fn comm_phase_parts(energy: f64, spec: &CommWellSpec, m: i32) -> Result<(f64, f64)> {
    wave_number(energy, spec.v)?;
    let m = m.unsigned_abs();
    let k_in = (2.0 * energy).sqrt();
    let k_out = (2.0 * (energy - spec.v)).sqrt();
    let (j_in, jp_in) = bessel_with_derivative(BesselKind::J, m, k_in * spec.radius)?;
    let (j_out, jp_out) = bessel_with_derivative(BesselKind::J, m, k_out * spec.radius)?;
    let (y_out, yp_out) = bessel_with_derivative(BesselKind::Y, m, k_out * spec.radius)?;
    let d_in = k_in * jp_in;
    let num = d_in * j_out - (k_out * jp_out) * j_in;
    let den = d_in * y_out - (k_out * yp_out) * j_in;
    Ok((num, den))
}

pub fn comm_phase_shift(energy: f64, spec: &CommWellSpec, m: i32) -> Result<PhaseShiftPoint> {
    let (num, den) = comm_phase_parts(energy, spec, m)?;
    let tan = if num == 0.0 { 0.0 } else { num / den };
    Ok(PhaseShiftPoint::from_tan(m, energy, tan))
}

/// Total cross section from `m >= 0`, auto-extended like the
/// non-commutative sum.
pub fn comm_cross_section(energy: f64, spec: &CommWellSpec, m_max: u32) -> Result<CrossSectionPoint> {
    let k = wave_number(energy, spec.v)?;
    let start = m_max.max((k * spec.radius).ceil() as u32);
    sum_partial_waves(energy, k, start, WaveSet::NonNegative, 0, |m| comm_phase_shift(energy, spec, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_geometry() {
        assert!(CommWellSpec::new(0.0, 1.0).is_err());
        assert!(CommWellSpec::new(1.0, -1.0).is_err());
    }

    #[test]
    fn phase_needs_energy_above_step() {
        let spec = CommWellSpec::new(1.0, 5.0).unwrap();
        assert!(comm_phase_shift(5.0, &spec, 0).is_err());
    }
}
