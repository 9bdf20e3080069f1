//! Partial-wave cross sections.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{domain, Result};
use crate::scatter::{phase_shift, PhaseShiftPoint};
use crate::well::WellSpec;

/// Auto-extension stops once the outermost order contributes less than
/// this fraction of the running total.
pub const TAIL_TOL: f64 = 1e-6;
/// Orders added beyond the starting `mMax` before giving up.
pub const EXTENSION_LIMIT: u32 = 200;

/// Which orders enter the sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum WaveSet {
    /// `m >= 0` weighted by `ε_0 = 1`, `ε_m = 2`; assumes `δ_{-m} = δ_m`.
    #[default]
    NonNegative,
    /// Every `m` in `[-M, M]` with its own phase shift (exploratory mode).
    Symmetric,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CrossSectionPoint {
    pub energy: f64,
    pub k: f64,
    pub sigma_total: f64,
    /// `(m, contribution)`; contributions sum to `sigma_total`.
    pub contributions: Vec<(i32, f64)>,
    pub phases: Vec<PhaseShiftPoint>,
    pub wave_set: WaveSet,
    /// Largest `|m|` summed.
    pub m_max_used: u32,
    pub cap_hit: bool,
}

/// Exterior wave number `sqrt(2(E - V))`.
pub fn wave_number(energy: f64, v: f64) -> Result<f64> {
    if !(energy > v) {
        return domain(format!("scattering energy must exceed V = {v}, got {energy}"));
    }
    Ok((2.0 * (energy - v)).sqrt())
}

fn weight(m: i32, wave_set: WaveSet) -> f64 {
    match wave_set {
        WaveSet::NonNegative if m != 0 => 2.0,
        _ => 1.0,
    }
}

/// Sums `(4/k) ε_m sin^2 δ_m`, starting from orders up to `m_start` and
/// extending until the tail is negligible. Orders below `m_lowest` are
/// skipped in symmetric mode.
pub fn sum_partial_waves<F>(
    energy: f64,
    k: f64,
    m_start: u32,
    wave_set: WaveSet,
    m_lowest: i32,
    phase: F,
) -> Result<CrossSectionPoint>
where
    F: Fn(i32) -> Result<PhaseShiftPoint> + Sync,
{
    let orders_at = |big_m: u32| -> Vec<i32> {
        let m = big_m as i32;
        match wave_set {
            WaveSet::NonNegative => vec![m],
            WaveSet::Symmetric if m == 0 => vec![0],
            WaveSet::Symmetric => [-m, m].into_iter().filter(|&q| q >= m_lowest).collect(),
        }
    };
    let first: Vec<i32> = (0..=m_start).flat_map(orders_at).collect();
    let mut phases = first.par_iter().map(|&m| phase(m)).collect::<Result<Vec<_>>>()?;
    let contribution = |p: &PhaseShiftPoint| 4.0 / k * weight(p.m, wave_set) * p.sin2_delta();
    let mut total: f64 = phases.iter().map(contribution).sum();
    let mut last: f64 = phases.iter().filter(|p| p.m.unsigned_abs() == m_start).map(contribution).sum();

    let limit = m_start + EXTENSION_LIMIT;
    let mut big_m = m_start;
    while last > TAIL_TOL * total && big_m < limit {
        big_m += 1;
        let new = orders_at(big_m).into_iter().map(&phase).collect::<Result<Vec<_>>>()?;
        last = new.iter().map(contribution).sum();
        total += last;
        phases.extend(new);
    }
    let cap_hit = last > TAIL_TOL * total;
    if cap_hit {
        log::warn!("partial-wave sum at E = {energy} stopped at |m| = {big_m} with tail fraction {:e}", last / total);
    }
    phases.sort_by_key(|p| p.m);
    let contributions: Vec<(i32, f64)> = phases.iter().map(|p| (p.m, contribution(p))).collect();
    let sigma_total = contributions.iter().map(|c| c.1).sum();
    Ok(CrossSectionPoint { energy, k, sigma_total, contributions, phases, wave_set, m_max_used: big_m, cap_hit })
}

/// Scattering amplitude `f(φ)` of a summed point.
pub fn amplitude(point: &CrossSectionPoint, phi: f64) -> Complex64 {
    let mut f = Complex64::new(0.0, 0.0);
    for p in &point.phases {
        let a = Complex64::new(p.sin_cos_delta(), p.sin2_delta());
        let angular = match point.wave_set {
            WaveSet::NonNegative => Complex64::new(weight(p.m, point.wave_set) * (p.m as f64 * phi).cos(), 0.0),
            WaveSet::Symmetric => Complex64::from_polar(1.0, p.m as f64 * phi),
        };
        f += angular * a;
    }
    f * (2.0 / PI).sqrt()
}

/// `dσ/dφ = |f(φ)|^2 / k` on the given angles.
pub fn differential_from_point(point: &CrossSectionPoint, phi_grid: &[f64]) -> Vec<(f64, f64)> {
    phi_grid.iter().map(|&phi| (phi, amplitude(point, phi).norm_sqr() / point.k)).collect()
}

/// Smallest starting order: the classical bound `kR`, at least `m_max`.
fn start_order(k: f64, spec: &WellSpec, m_max: u32) -> u32 {
    m_max.max((k * spec.radius()).ceil() as u32)
}

/// Total cross section from the `m >= 0` phase shifts.
pub fn cross_section_total(energy: f64, spec: &WellSpec, m_max: u32) -> Result<CrossSectionPoint> {
    cross_section_total_with(energy, spec, m_max, WaveSet::NonNegative)
}

pub fn cross_section_total_with(
    energy: f64,
    spec: &WellSpec,
    m_max: u32,
    wave_set: WaveSet,
) -> Result<CrossSectionPoint> {
    let k = wave_number(energy, spec.v())?;
    let lowest = -(spec.cap_n() as i32);
    sum_partial_waves(energy, k, start_order(k, spec, m_max), wave_set, lowest, |m| phase_shift(energy, spec, m))
}

/// `(φ, dσ/dφ)` on `phi_grid`, summed over the same orders as the total.
pub fn cross_section_differential(
    energy: f64,
    spec: &WellSpec,
    m_max: u32,
    phi_grid: &[f64],
) -> Result<Vec<(f64, f64)>> {
    let point = cross_section_total(energy, spec, m_max)?;
    Ok(differential_from_point(&point, phi_grid))
}

/// Periodic trapezoid rule for `∫_0^{2π} dσ/dφ dφ` on a uniform grid.
pub fn integrate_periodic(values: &[(f64, f64)]) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    2.0 * PI / values.len() as f64 * values.iter().map(|v| v.1).sum::<f64>()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixed(tans: &'static [f64]) -> impl Fn(i32) -> Result<PhaseShiftPoint> + Sync {
        move |m| {
            let t = tans.get(m.unsigned_abs() as usize).copied().unwrap_or(0.0);
            Ok(PhaseShiftPoint::from_tan(m, 1.0, t))
        }
    }

    #[test]
    fn zero_phases_give_zero() {
        let p = sum_partial_waves(1.0, 2.0, 4, WaveSet::NonNegative, 0, fixed(&[])).unwrap();
        assert_eq!(p.sigma_total, 0.0);
        assert!(differential_from_point(&p, &[0.0, 1.0]).iter().all(|v| v.1 == 0.0));
    }

    #[test]
    fn unitarity_limit_s_wave() {
        let k = 1.5;
        let p = sum_partial_waves(1.0, k, 3, WaveSet::NonNegative, 0, fixed(&[f64::INFINITY])).unwrap();
        assert!((p.sigma_total - 4.0 / k).abs() < 1e-15);
    }

    #[test]
    fn s_wave_only_is_isotropic() {
        let k = 0.7;
        let p = sum_partial_waves(1.0, k, 3, WaveSet::NonNegative, 0, fixed(&[0.4])).unwrap();
        let s2 = PhaseShiftPoint::from_tan(0, 1.0, 0.4).sin2_delta();
        for (_, d) in differential_from_point(&p, &[0.0, 0.5, 2.0, 4.0]) {
            assert!((d - 2.0 / (PI * k) * s2).abs() < 1e-15);
        }
    }

    #[test]
    fn differential_integrates_to_total() {
        let k = 1.1;
        for ws in [WaveSet::NonNegative, WaveSet::Symmetric] {
            let p = sum_partial_waves(1.0, k, 3, ws, -3, fixed(&[0.3, -2.0, 5.0, 0.01])).unwrap();
            let grid: Vec<f64> = (0..64).map(|i| 2.0 * PI * i as f64 / 64.0).collect();
            let integral = integrate_periodic(&differential_from_point(&p, &grid));
            assert!((integral - p.sigma_total).abs() < 1e-13 * p.sigma_total);
        }
    }

    #[test]
    fn symmetric_mode_matches_weighted_mode_for_even_phases() {
        let a = sum_partial_waves(1.0, 1.0, 3, WaveSet::NonNegative, -3, fixed(&[0.3, -2.0, 5.0])).unwrap();
        let b = sum_partial_waves(1.0, 1.0, 3, WaveSet::Symmetric, -3, fixed(&[0.3, -2.0, 5.0])).unwrap();
        assert!((a.sigma_total - b.sigma_total).abs() < 1e-14);
    }

    #[test]
    fn extends_past_a_slow_tail() {
        let slow = |m: i32| Ok(PhaseShiftPoint::from_tan(m, 1.0, 0.5f64.powi(m.abs())));
        let p = sum_partial_waves(1.0, 1.0, 1, WaveSet::NonNegative, 0, slow).unwrap();
        assert!(!p.cap_hit);
        let (_, last) = *p.contributions.last().unwrap();
        assert!(last < TAIL_TOL * p.sigma_total);
        assert!(p.m_max_used > 5);
    }
}
