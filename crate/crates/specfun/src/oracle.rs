//! Brute-force quadrature of the Gaussian-weighted Hankel-type integrals
//! `∫_0^∞ r^{2n+m+1} e^{-r^2} C_m(s r) dr`.
//!
//! This exists only to cross-check the closed forms built from Laguerre and
//! Tricomi functions.

use std::f64::consts::PI;

use crate::bessel::{bessel, BesselKind};
use crate::cut::re_u_neg;
use crate::error::{domain, Error, Result};
use crate::gamma::ln_factorial;
use crate::kummer::kummer_u;
use crate::laguerre::laguerre;
use crate::quad::{integrate, QuadOptions};
use crate::LogScaled;

/// Drop of the weight below its peak at the outer cutoff (1e-18).
const CUTOFF: f64 = 41.45;

/// Zeros of `C_m(x)` on `(0, x_max)` for J or Y.
fn cylinder_zeros(kind: BesselKind, m: u32, x_max: f64) -> Result<Vec<f64>> {
    let mut zeros = Vec::new();
    let step = 0.25;
    let mut x0 = 1e-3;
    let mut f0 = bessel(kind, m, x0)?;
    while x0 < x_max {
        let x1 = (x0 + step).min(x_max);
        let f1 = bessel(kind, m, x1)?;
        if f0.is_finite() && f1.is_finite() && f0 * f1 < 0.0 {
            let (mut lo, mut hi, mut flo) = (x0, x1, f0);
            for _ in 0..100 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                let fm = bessel(kind, m, mid)?;
                if fm * flo > 0.0 {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            zeros.push(0.5 * (lo + hi));
        }
        x0 = x1;
        f0 = f1;
    }
    Ok(zeros)
}

/// Quadrature of `∫_0^∞ r^{2n+m+1} e^{-r^2} C_m(s r) dr`.
pub fn hankel_integral_oracle(n: u32, m: u32, kind: BesselKind, s: f64) -> Result<f64> {
    Ok(hankel_integral_oracle_scaled(n, m, kind, s)?.to_f64())
}

/// Same quadrature with the result kept in scaled form, for large `n`.
pub fn hankel_integral_oracle_scaled(n: u32, m: u32, kind: BesselKind, s: f64) -> Result<LogScaled> {
    if !(s > 0.0) || !s.is_finite() {
        return domain(format!("oracle needs s > 0, got {s}"));
    }
    let p = (2 * n + m + 1) as f64;
    let drift = match kind {
        BesselKind::I => s,
        BesselKind::K => -s,
        _ => 0.0,
    };
    let log_weight = |r: f64| p * r.ln() - r * r;
    let envelope = |r: f64| log_weight(r) + drift * r;
    let peak = (drift + (drift * drift + 8.0 * p).sqrt()) / 4.0;
    let top = envelope(peak);
    let mut r_max = peak + 1.0;
    while envelope(r_max) > top - CUTOFF {
        r_max += 1.0;
    }
    let reference = log_weight(p.sqrt() / std::f64::consts::SQRT_2);

    let mut points = vec![0.0, 0.5 * peak, peak, 0.5 * (peak + r_max), r_max];
    if matches!(kind, BesselKind::J | BesselKind::Y) {
        for z in cylinder_zeros(kind, m, s * r_max)? {
            points.push(z / s);
        }
    }
    points.sort_by(f64::total_cmp);
    points.dedup();

    let opts = QuadOptions { abs_tol: 0.0, rel_tol: 1e-13, mass_tol: 2e-14, max_intervals: 8000 };
    let mut failure = None;
    let r = integrate(
        |r: f64| {
            let w = (log_weight(r) - reference).exp();
            if w == 0.0 {
                return 0.0;
            }
            match bessel(kind, m, s * r) {
                Ok(c) if c.is_finite() => w * c,
                Ok(_) => 0.0,
                Err(e) => {
                    failure = Some(e);
                    0.0
                }
            }
        },
        &points,
        &opts,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    if !r.converged {
        return Err(Error::NoConvergence { what: "Hankel integral oracle", iterations: r.intervals });
    }
    Ok(LogScaled::from_f64(r.value).mul_exp(reference))
}

/// Closed form of the same integral, with `w = s^2/4`:
///
/// * J: `(n!/2) e^{-w} w^{m/2} L^m_n(w)`
/// * Y: `-(w^{-m/2}/2π) (n+m)! n! Re U(n+1, 1-m, -w)`
/// * I: `(n!/2) e^{w} w^{m/2} L^m_n(-w)`
/// * K: `(1/4) n! (n+m)! w^{-m/2} U(n+1, 1-m, w)`
pub fn hankel_integral_closed(n: u32, m: u32, kind: BesselKind, s: f64) -> Result<LogScaled> {
    if !(s > 0.0) || !s.is_finite() {
        return domain(format!("closed form needs s > 0, got {s}"));
    }
    let w = 0.25 * s * s;
    let half_m = 0.5 * m as f64;
    let ln_n = ln_factorial(n as u64);
    let ln_nm = ln_factorial((n + m) as u64);
    let v = match kind {
        BesselKind::J => laguerre(n, m as i32, w)? * LogScaled::powf_pos(w, half_m).mul_exp(ln_n - 2f64.ln() - w),
        BesselKind::I => laguerre(n, m as i32, -w)? * LogScaled::powf_pos(w, half_m).mul_exp(ln_n - 2f64.ln() + w),
        BesselKind::Y => {
            -(re_u_neg(n, m, w)? * LogScaled::powf_pos(w, -half_m).mul_exp(ln_n + ln_nm - (2.0 * PI).ln()))
        }
        BesselKind::K => {
            kummer_u(n + 1, 1 - m as i32, w)? * LogScaled::powf_pos(w, -half_m).mul_exp(ln_n + ln_nm - 4f64.ln())
        }
    };
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_s_limit() {
        let v = hankel_integral_oracle(0, 0, BesselKind::J, 1e-8).unwrap();
        assert!((v - 0.5).abs() < 1e-12);
    }

    #[test]
    fn gaussian_moment() {
        // ∫ r^3 e^{-r^2} J_0(s r) dr = (1/2) e^{-w} (1 - w), w = s^2/4
        let s = 1.3;
        let w = s * s / 4.0;
        let v = hankel_integral_oracle(1, 0, BesselKind::J, s).unwrap();
        let exact = 0.5 * (-w).exp() * (1.0 - w);
        assert!((v - exact).abs() < 1e-12, "{v} {exact}");
    }

    #[test]
    fn zero_locator() {
        let z = cylinder_zeros(BesselKind::J, 0, 6.0).unwrap();
        assert_eq!(z.len(), 2);
        assert!((z[0] - 2.404_825_557_695_773).abs() < 1e-12);
    }
}
