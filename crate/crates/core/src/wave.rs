//! Position-representation partial waves.

use num_complex::Complex64;
use specfun::{bessel_signed, BesselKind};

use crate::error::{domain, Result};
use crate::region::RegionSolution;

/// `(A C1_m(s r) + B C2_m(s r)) e^{imφ}` at each `(x, y)`, with
/// `s = 2 sqrt(|w|) = sqrt(2θ) k` taken from the region solution.
/// `(C1, C2)` is `(J, Y)` for `w > 0` and `(I, K)` for `w < 0`.
pub fn wavefunction_eval(sol: &RegionSolution, m: i32, points: &[(f64, f64)]) -> Result<Vec<Complex64>> {
    let (regular, singular) =
        if sol.w >= 0.0 { (BesselKind::J, BesselKind::Y) } else { (BesselKind::I, BesselKind::K) };
    let s = 2.0 * sol.w.abs().sqrt();
    let a = sol.coeff_a.to_f64();
    let b = sol.coeff_b.to_f64();
    points
        .iter()
        .map(|&(x, y)| {
            let r = x.hypot(y);
            let mut radial = 0.0;
            if a != 0.0 {
                radial += a * bessel_signed(regular, m, s * r)?;
            }
            if b != 0.0 {
                if r == 0.0 || s == 0.0 {
                    return domain("the singular branch diverges at the origin");
                }
                radial += b * bessel_signed(singular, m, s * r)?;
            }
            Ok(Complex64::from_polar(radial, m as f64 * y.atan2(x)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::Region;
    use specfun::LogScaled;

    #[test]
    fn regular_wave_at_origin() {
        let sol = RegionSolution::regular(Region::Interior, 2.0);
        let v = wavefunction_eval(&sol, 0, &[(0.0, 0.0)]).unwrap();
        assert_eq!(v[0], Complex64::new(1.0, 0.0));
    }

    #[test]
    fn singular_branch_rejects_origin() {
        let sol = RegionSolution::new(Region::Exterior, 2.0, LogScaled::ONE, LogScaled::ONE);
        assert!(wavefunction_eval(&sol, 1, &[(0.0, 0.0)]).is_err());
    }

    #[test]
    fn phase_winds_m_times() {
        let sol = RegionSolution::regular(Region::Interior, 1.0);
        let m = 3;
        let pts: Vec<(f64, f64)> =
            (0..=360).map(|i| (i as f64).to_radians()).map(|t| (0.8 * t.cos(), 0.8 * t.sin())).collect();
        let psi = wavefunction_eval(&sol, m, &pts).unwrap();
        let mut winding = 0.0;
        for w in psi.windows(2) {
            winding += (w[1] / w[0]).arg();
        }
        assert!((winding - 2.0 * std::f64::consts::PI * m as f64).abs() < 1e-10);
    }
}
