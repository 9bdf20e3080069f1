use ncwell::{cross_section_differential, cross_section_total, cross_section_total_with, WaveSet, WellSpec};

fn phi_grid(n: usize) -> Vec<f64> {
    (0..n).map(|i| 2.0 * std::f64::consts::PI * i as f64 / n as f64).collect()
}

#[test]
fn no_step_gives_zero() {
    let spec = WellSpec::from_radius_squared(20.0, 10, 0.0).unwrap();
    let p = cross_section_total(3.0, &spec, 8).unwrap();
    assert_eq!(p.sigma_total, 0.0);
}

#[test]
fn contributions_sum_and_respect_unitarity() {
    let spec = WellSpec::from_radius_squared(20.0, 100, 10.0).unwrap();
    for e in [10.05, 12.0, 20.0, 45.0] {
        let p = cross_section_total(e, &spec, 8).unwrap();
        let sum: f64 = p.contributions.iter().map(|c| c.1).sum();
        assert_eq!(sum, p.sigma_total);
        for &(m, c) in &p.contributions {
            let eps = if m == 0 { 1.0 } else { 2.0 };
            assert!(c >= 0.0 && c <= 4.0 * eps / p.k * (1.0 + 1e-15));
        }
        assert!(!p.cap_hit);
        let tail = p.contributions.last().unwrap().1;
        assert!(tail < 1e-6 * p.sigma_total);
    }
}

#[test]
fn differential_integrates_to_total() {
    let spec = WellSpec::from_radius_squared(20.0, 10, 10.0).unwrap();
    let grid = phi_grid(4096);
    for e in [10.2, 15.0, 30.0] {
        let total = cross_section_total(e, &spec, 8).unwrap().sigma_total;
        let d = cross_section_differential(e, &spec, 8, &grid).unwrap();
        let integral = 2.0 * std::f64::consts::PI / grid.len() as f64 * d.iter().map(|v| v.1).sum::<f64>();
        assert!((integral - total).abs() < 1e-6 * total);
    }
}

#[test]
fn symmetric_mode_respects_the_cutoff() {
    let spec = WellSpec::from_radius_squared(20.0, 2, 10.0).unwrap();
    let p = cross_section_total_with(25.0, &spec, 6, WaveSet::Symmetric).unwrap();
    assert!(p.contributions.iter().all(|c| c.0 >= -2));
    assert!(p.contributions.iter().any(|c| c.0 == -2));
}
