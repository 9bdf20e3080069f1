//! Invariant checks of the solver, reported in the same form as the
//! special-function oracle suites.

use specfun::selftest::SuiteReport;

use crate::bound::{find_bound_states, DEFAULT_GRID_POINTS};
use crate::cross::{cross_section_total, differential_from_point, integrate_periodic};
use crate::scatter::{phase_shift, scattering_coeffs};
use crate::well::WellSpec;

fn report(name: &'static str, tolerance: f64, errors: Vec<(String, f64)>) -> SuiteReport {
    let max_error = errors.iter().map(|e| e.1).fold(0.0, f64::max);
    let failures = errors.iter().filter(|e| !(e.1 <= tolerance)).map(|e| format!("{}: {:e}", e.0, e.1)).collect();
    SuiteReport { name, cases: errors.len(), tolerance, max_error, failures }
}

fn radius_quantization() -> SuiteReport {
    let errors = [(10u32, 20.0 / 21.0), (1000, 20.0 / 2001.0)]
        .iter()
        .map(|&(n, theta)| {
            let err = match WellSpec::from_radius_squared(20.0, n, 6.0) {
                Ok(s) => (s.theta() - theta).abs(),
                Err(_) => f64::INFINITY,
            };
            (format!("N={n}"), err)
        })
        .collect();
    report("radius_quantization", 0.0, errors)
}

fn free_particle() -> SuiteReport {
    let mut errors = Vec::new();
    let spec = WellSpec::from_radius_squared(20.0, 10, 0.0).unwrap();
    for m in [-4, 0, 3] {
        for e in [0.5, 5.0, 30.0] {
            let err = phase_shift(e, &spec, m).map(|p| p.tan_delta.abs()).unwrap_or(f64::INFINITY);
            errors.push((format!("m={m} E={e}"), err));
        }
    }
    report("free_particle_phase", 0.0, errors)
}

fn scattering_matching() -> SuiteReport {
    let mut errors = Vec::new();
    for n in [10u32, 1000] {
        let spec = WellSpec::from_radius_squared(20.0, n, 10.0).unwrap();
        for m in [-2, 0, 4] {
            for e in [10.05, 21.0, 40.0] {
                let err = scattering_coeffs(e, &spec, m).map(|s| s.residual).unwrap_or(f64::INFINITY);
                errors.push((format!("N={n} m={m} E={e}"), err));
            }
        }
    }
    report("scattering_matching", 1e-10, errors)
}

fn bound_residuals() -> SuiteReport {
    let spec = WellSpec::from_radius_squared(20.0, 10, 6.0).unwrap();
    let mut errors = Vec::new();
    for m in -6..=6 {
        match find_bound_states(&spec, m, DEFAULT_GRID_POINTS) {
            Ok(states) => errors.extend(states.iter().map(|b| (format!("m={m} level={}", b.level), b.residual.abs()))),
            Err(e) => errors.push((format!("m={m}: {e}"), f64::INFINITY)),
        }
    }
    let cutoff = if find_bound_states(&spec, -11, DEFAULT_GRID_POINTS).is_err() { 0.0 } else { f64::INFINITY };
    errors.push(("m=-11 rejected".to_string(), cutoff));
    report("bound_residuals", 1e-9, errors)
}

fn differential_consistency() -> SuiteReport {
    let spec = WellSpec::from_radius_squared(20.0, 10, 10.0).unwrap();
    let grid: Vec<f64> = (0..4096).map(|i| 2.0 * std::f64::consts::PI * i as f64 / 4096.0).collect();
    let errors = [10.2, 15.0, 30.0]
        .iter()
        .map(|&e| {
            let err = cross_section_total(e, &spec, 8)
                .map(|p| (integrate_periodic(&differential_from_point(&p, &grid)) / p.sigma_total - 1.0).abs())
                .unwrap_or(f64::INFINITY);
            (format!("E={e}"), err)
        })
        .collect();
    report("differential_integral", 1e-6, errors)
}

pub fn run_all() -> Vec<SuiteReport> {
    vec![radius_quantization(), free_particle(), scattering_matching(), bound_residuals(), differential_consistency()]
}
