use ncwell::{find_bound_states, matching_residual_bound, WellSpec, DEFAULT_GRID_POINTS};

fn fig_well() -> WellSpec {
    WellSpec::from_radius_squared(20.0, 10, 6.0).unwrap()
}

/// Levels below `v` of the truncated tridiagonal Fock Hamiltonian for
/// `m >= 0`, with the step placed after row `cut`.
fn tridiagonal_levels(theta: f64, m: u32, cut: u32, v: f64, size: usize) -> Vec<f64> {
    let diag: Vec<f64> =
        (0..size).map(|n| (2 * n + m as usize + 1) as f64 / theta + if n as u32 > cut { v } else { 0.0 }).collect();
    let off: Vec<f64> = (0..size - 1).map(|n| -(((n + 1) * (n + 1 + m as usize)) as f64).sqrt() / theta).collect();
    // Sturm count of eigenvalues below x.
    let count = |x: f64| {
        let mut c = 0;
        let mut d = 1.0;
        for i in 0..size {
            let o = if i == 0 { 0.0 } else { off[i - 1] * off[i - 1] };
            d = diag[i] - x - if i == 0 { 0.0 } else { o / d };
            if d == 0.0 {
                d = 1e-300;
            }
            if d < 0.0 {
                c += 1;
            }
        }
        c
    };
    let below_v = count(v);
    (0..below_v)
        .map(|j| {
            let (mut lo, mut hi) = (0.0, v);
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                if count(mid) > j {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect()
}

#[test]
fn reference_levels() {
    let spec = fig_well();
    let cases: &[(i32, &[f64])] = &[
        (1, &[0.29560, 0.99336, 2.09575, 3.60374, 5.47152]),
        (-1, &[0.32178, 1.08199, 2.2845, 3.9297, 5.9072]),
        (0, &[0.12124, 0.64007, 1.57819, 2.94052, 4.71357]),
        (4, &[1.04021, 2.21817, 3.75015, 5.60049]),
        (-4, &[1.47624, 3.16104, 5.34060]),
        (-7, &[3.90719]),
    ];
    for &(m, levels) in cases {
        let found = find_bound_states(&spec, m, DEFAULT_GRID_POINTS).unwrap();
        let energies: Vec<f64> = found.iter().map(|b| b.energy).collect();
        assert_eq!(energies.len(), levels.len(), "m = {m}: {energies:?}");
        for (e, r) in energies.iter().zip(levels.iter()) {
            assert!((e - r).abs() < 1e-4, "m = {m}: {e} vs {r}");
        }
    }
}

#[test]
fn levels_match_truncated_fock_hamiltonian() {
    let spec = fig_well();
    for m in [-5i32, -2, 0, 1, 3, 6] {
        let k = m.unsigned_abs();
        // For m = -k the rows shift down by k, moving the step to N - k.
        let cut = if m < 0 { spec.cap_n() - k } else { spec.cap_n() };
        let brute = tridiagonal_levels(spec.theta(), k, cut, spec.v(), 6000);
        let found = find_bound_states(&spec, m, DEFAULT_GRID_POINTS).unwrap();
        // Truncation converges slowly only right at the threshold.
        let deep: Vec<f64> = brute.iter().copied().filter(|&e| e < spec.v() - 0.2).collect();
        for (j, e) in deep.iter().enumerate() {
            assert!((found[j].energy - e).abs() < 1e-8, "m = {m}, level {j}: {} vs {e}", found[j].energy);
        }
    }
}

#[test]
fn residuals_and_ordering() {
    let spec = fig_well();
    for m in -6..=6 {
        let found = find_bound_states(&spec, m, DEFAULT_GRID_POINTS).unwrap();
        for (j, b) in found.iter().enumerate() {
            assert_eq!(b.level, j);
            assert_eq!(b.m, m);
            assert!(b.energy > 0.0 && b.energy < spec.v());
            assert!(b.residual.abs() < 1e-9, "m = {m}: residual {}", b.residual);
        }
        for w in found.windows(2) {
            assert!(w[1].energy - w[0].energy > 10.0 * 1e-12 * spec.v());
        }
    }
}

#[test]
fn stable_under_grid_doubling() {
    let spec = fig_well();
    for m in -6..=6 {
        let a = find_bound_states(&spec, m, 2000).unwrap();
        let b = find_bound_states(&spec, m, 4000).unwrap();
        assert_eq!(a.len(), b.len(), "m = {m}");
        for (x, y) in a.iter().zip(b.iter()) {
            assert!((x.energy - y.energy).abs() < 1e-10);
        }
    }
}

#[test]
fn roots_agree_with_a_finer_scan() {
    let spec = fig_well();
    let coarse = find_bound_states(&spec, 1, DEFAULT_GRID_POINTS).unwrap();
    let fine = find_bound_states(&spec, 1, 10 * DEFAULT_GRID_POINTS).unwrap();
    assert_eq!(coarse.len(), fine.len());
    for (c, f) in coarse.iter().zip(fine.iter()) {
        assert!((c.energy - f.energy).abs() < 1e-10);
    }
}

#[test]
fn cutoff_is_enforced() {
    let spec = fig_well();
    assert!(find_bound_states(&spec, -11, DEFAULT_GRID_POINTS).is_err());
    assert!(matching_residual_bound(1.0, &spec, -11).is_err());
    assert!(find_bound_states(&spec, -10, DEFAULT_GRID_POINTS).is_ok());
}

#[test]
fn energy_outside_the_well_is_rejected() {
    let spec = fig_well();
    assert!(matching_residual_bound(0.0, &spec, 0).is_err());
    assert!(matching_residual_bound(6.0, &spec, 0).is_err());
    assert!(matching_residual_bound(7.0, &spec, 0).is_err());
}

#[test]
fn nonzero_at_laguerre_zeros() {
    // L^1_10(θE) vanishes near these energies; G must not.
    let spec = fig_well();
    let theta = spec.theta();
    let g = |e: f64| specfun::laguerre(10, 1, theta * e).unwrap().to_f64();
    let mut e = 0.01;
    let mut checked = 0;
    while e < 5.9 {
        if g(e) * g(e + 0.01) < 0.0 {
            let (mut lo, mut hi) = (e, e + 0.01);
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if g(lo) * g(mid) <= 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            let r = matching_residual_bound(lo, &spec, 1).unwrap();
            assert!(r.abs() > 1e-3, "G = {r} at {lo}");
            checked += 1;
        }
        e += 0.01;
    }
    assert!(checked > 0);
}

#[test]
fn shallow_well_has_no_resolvable_levels() {
    let spec = WellSpec::from_radius_squared(20.0, 10, 1e-9).unwrap();
    for m in -3..=3 {
        assert!(find_bound_states(&spec, m, DEFAULT_GRID_POINTS).unwrap().is_empty());
    }
}

#[test]
fn bound_solutions_match_both_rows() {
    use ncwell::{bound_state_solution, fock_element};
    let spec = fig_well();
    for m in [-3, 0, 2, 5] {
        for state in find_bound_states(&spec, m, DEFAULT_GRID_POINTS).unwrap() {
            let (inner, outer) = bound_state_solution(&spec, &state).unwrap();
            assert!(outer.w < 0.0 && outer.coeff_a.is_zero());
            for row in [spec.cap_n(), spec.cap_n() + 1] {
                let a = fock_element(row, m, &inner).unwrap();
                let b = fock_element(row, m, &outer).unwrap();
                assert!(((a - b) / a.max_abs(b)).to_f64().abs() < 1e-9, "m = {m}, row {row}");
            }
        }
    }
}
