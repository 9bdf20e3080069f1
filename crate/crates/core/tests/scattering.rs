use std::time::Instant;

use ncwell::fock::branch_values;
use ncwell::{
    fock_element, phase_shift, phase_shift_sweep, scattering_coeffs, Error, LogScaled, Region, RegionSolution, WellSpec,
};
use specfun::gamma::ln_factorial;
use specfun::{hankel_integral_oracle, BesselKind};

#[test]
fn no_step_means_no_scattering() {
    for n in [10u32, 1000] {
        let spec = WellSpec::from_radius_squared(20.0, n, 0.0).unwrap();
        for m in [-3, 0, 1, 4] {
            for e in [0.3, 2.0, 17.5] {
                let sol = scattering_coeffs(e, &spec, m).unwrap();
                assert!(sol.exterior.coeff_b.is_zero());
                assert_eq!(sol.interior.coeff_a, LogScaled::ONE);
                assert_eq!(phase_shift(e, &spec, m).unwrap().tan_delta, 0.0);
            }
        }
    }
}

#[test]
fn matching_rows_hold() {
    for &(n, v) in &[(10u32, 10.0), (100, 10.0), (1000, 10.0), (10, 6.0)] {
        let spec = WellSpec::from_radius_squared(20.0, n, v).unwrap();
        for m in [-5, -1, 0, 2, 4, 9] {
            for e in [v + 0.05, v + 1.0, v + 7.3, v + 25.0] {
                let sol = scattering_coeffs(e, &spec, m).unwrap();
                assert!(sol.residual < 1e-10);
                for row in [n, n + 1] {
                    let inner = fock_element(row, m, &sol.interior).unwrap();
                    let outer = fock_element(row, m, &sol.exterior).unwrap();
                    let scale = inner.max_abs(outer);
                    assert!(((inner - outer) / scale).to_f64().abs() < 1e-10, "N={n} m={m} E={e}");
                }
            }
        }
    }
}

#[test]
fn solution_shape() {
    let spec = WellSpec::from_radius_squared(20.0, 1000, 10.0).unwrap();
    let sol = scattering_coeffs(30.0, &spec, 4).unwrap();
    assert_eq!(sol.interior.region, Region::Interior);
    assert!(sol.interior.coeff_b.is_zero());
    assert_eq!(sol.exterior.coeff_a, LogScaled::ONE);
    assert!(sol.exterior.coeff_b.is_finite() && !sol.exterior.coeff_b.is_zero());
    assert!((sol.interior.w - spec.theta() * 30.0).abs() < 1e-15);
    assert!((sol.exterior.w - spec.theta() * 20.0).abs() < 1e-15);
}

#[test]
fn domain_errors() {
    let spec = WellSpec::from_radius_squared(20.0, 10, 10.0).unwrap();
    assert!(matches!(scattering_coeffs(10.0, &spec, 0), Err(Error::Domain(_))));
    assert!(matches!(scattering_coeffs(5.0, &spec, 0), Err(Error::Domain(_))));
    assert!(matches!(scattering_coeffs(12.0, &spec, -11), Err(Error::Domain(_))));
}

#[test]
fn deterministic() {
    let spec = WellSpec::from_radius_squared(20.0, 100, 10.0).unwrap();
    let a = phase_shift(13.7, &spec, 3).unwrap();
    let b = phase_shift(13.7, &spec, 3).unwrap();
    assert_eq!(a, b);
}

#[test]
fn reference_phase_shifts() {
    // Values from an independent prototype of the same matching system.
    let spec = WellSpec::from_radius_squared(20.0, 1000, 10.0).unwrap();
    let cases = [(15.0, 0.54854), (10.5, -1.08262), (20.0, -5.8909)];
    for (e, t) in cases {
        let p = phase_shift(e, &spec, 4).unwrap();
        assert!((p.tan_delta - t).abs() < 1e-4 * t.abs().max(1.0), "E = {e}: {}", p.tan_delta);
    }
}

#[test]
fn sweep_is_ordered_and_unwrapped() {
    let spec = WellSpec::from_radius_squared(20.0, 100, 10.0).unwrap();
    let energies: Vec<f64> = (0..50).map(|i| 10.05 + 0.5 * i as f64).collect();
    let pts = phase_shift_sweep(&energies, &spec, 4).unwrap();
    for (p, e) in pts.iter().zip(energies.iter()) {
        assert_eq!(p.energy, *e);
        assert!(p.delta_unwrapped.is_some());
    }
    for w in pts.windows(2) {
        let d = w[1].delta_unwrapped.unwrap() - w[0].delta_unwrapped.unwrap();
        assert!(d.abs() <= std::f64::consts::FRAC_PI_2 + 1e-12);
    }
}

#[test]
fn large_n_sweep_is_fast() {
    let spec = WellSpec::from_radius_squared(20.0, 1000, 10.0).unwrap();
    let energies: Vec<f64> = (0..400).map(|i| 10.05 + (35.0 - 10.05) * i as f64 / 399.0).collect();
    let start = Instant::now();
    phase_shift_sweep(&energies, &spec, 4).unwrap();
    assert!(start.elapsed().as_secs_f64() < 10.0);
}

fn ln_fock_prefactor(n: u32, m: u32, w: f64) -> f64 {
    // 2 e^w / sqrt(n! (n+m)!)
    std::f64::consts::LN_2 + w - 0.5 * (ln_factorial(n as u64) + ln_factorial((n + m) as u64))
}

#[test]
fn branches_match_the_defining_integrals() {
    let theta: f64 = 20.0 / 21.0;
    for n in [0u32, 3, 10, 15] {
        for m in [0u32, 1, 4] {
            for (energy, v) in [(3.0, 0.0), (7.0, 2.0), (2.0, 6.0), (0.5, 6.0)] {
                let w = theta * (energy - v);
                let s = 2.0 * w.abs().sqrt();
                let (regular, singular) =
                    if w > 0.0 { (BesselKind::J, BesselKind::Y) } else { (BesselKind::I, BesselKind::K) };
                let b = branch_values(n, m as i32, w, (true, true)).unwrap();
                let pre = ln_fock_prefactor(n, m, w);
                let a_ref = hankel_integral_oracle(n, m, regular, s).unwrap() * pre.exp();
                let b_ref = hankel_integral_oracle(n, m, singular, s).unwrap() * pre.exp();
                assert!((b.a.to_f64() - a_ref).abs() < 1e-8 * a_ref.abs(), "a n={n} m={m} w={w}");
                assert!((b.b.to_f64() - b_ref).abs() < 1e-7 * b_ref.abs(), "b n={n} m={m} w={w}");
            }
        }
    }
}

#[test]
fn negative_order_matches_reflected_positive_order() {
    // <n|psi_{-k}|n-k> = (-1)^k <n-k|psi_k|n> for J and Y; I and K are even.
    for k in 1..5i32 {
        for &w in &[1.3, -0.7, 4.0] {
            for n in [k as u32, k as u32 + 5, 30] {
                let neg = branch_values(n, -k, w, (true, true)).unwrap();
                let pos = branch_values(n - k as u32, k, w, (true, true)).unwrap();
                let sign = if w > 0.0 && k % 2 == 1 { -1.0 } else { 1.0 };
                assert!(((neg.a - pos.a * sign) / pos.a).to_f64().abs() < 1e-12);
                assert!(((neg.b - pos.b * sign) / pos.b).to_f64().abs() < 1e-10);
            }
        }
    }
}

#[test]
fn bound_exterior_branch_decays_across_rows() {
    let sol = RegionSolution::new(Region::Exterior, -2.0, LogScaled::ZERO, LogScaled::ONE);
    let values: Vec<f64> = (0..40).map(|n| fock_element(n, 1, &sol).unwrap().logmag()).collect();
    assert!(values.windows(2).all(|w| w[1] < w[0]));
}
