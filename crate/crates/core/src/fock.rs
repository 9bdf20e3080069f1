//! Fock matrix elements `<n|psi_m|n+m>` of cylinder-wave solutions.

use std::f64::consts::PI;

use specfun::gamma::ln_factorial;
use specfun::{kummer_u, kummer_u_pair, laguerre, laguerre_pair, re_u_neg, re_u_neg_pair, LogScaled, OrderIndex};

use crate::error::{domain, Result};
use crate::region::RegionSolution;

/// Basis values of the two branches at one row, before the coefficients.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BranchValues {
    pub a: LogScaled,
    pub b: LogScaled,
}

fn half_ln_ratio(n: u32, m: i32) -> f64 {
    let col = (n as i64 + m as i64) as u64;
    0.5 * (ln_factorial(n as u64) - ln_factorial(col))
}

fn half_ln_product(n: u32, m: i32) -> f64 {
    let col = (n as i64 + m as i64) as u64;
    0.5 * (ln_factorial(n as u64) + ln_factorial(col))
}

/// Prefactor of the Laguerre branch: `sqrt(n!/(n+m)!) |w|^{m/2}`.
fn laguerre_prefactor(n: u32, m: i32, w: f64) -> LogScaled {
    LogScaled::exp(half_ln_ratio(n, m)) * LogScaled::powf_pos(w.abs(), 0.5 * m as f64)
}

/// `-(1/π) sqrt(n!(n+m)!) e^w w^{-m/2}` for the cut branch.
fn cut_prefactor(n: u32, m: i32, w: f64) -> LogScaled {
    LogScaled::new(-1, half_ln_product(n, m) + w - 0.5 * m as f64 * w.ln() - PI.ln())
}

/// `(1/2) sqrt(n!(n+m)!) e^{-x} x^{-m/2}` for the decaying branch.
fn decay_prefactor(n: u32, m: i32, x: f64) -> LogScaled {
    LogScaled::new(1, half_ln_product(n, m) - x - 0.5 * m as f64 * x.ln() - std::f64::consts::LN_2)
}

/// `Re U(n+1, 1-m, -w)` for any sign of `m`.
fn cut_u(n: u32, m: i32, w: f64) -> Result<LogScaled> {
    if m >= 0 {
        Ok(re_u_neg(n, m as u32, w)?)
    } else {
        let k = m.unsigned_abs();
        Ok(re_u_neg(n - k, k, w)? * LogScaled::powi(-w, -(k as i64)))
    }
}

fn cut_u_pair(n: u32, m: i32, w: f64) -> Result<(LogScaled, LogScaled)> {
    if m >= 0 {
        Ok(re_u_neg_pair(n, m as u32, w)?)
    } else {
        let k = m.unsigned_abs();
        let (u0, u1) = re_u_neg_pair(n - k, k, w)?;
        let f = LogScaled::powi(-w, -(k as i64));
        Ok((u0 * f, u1 * f))
    }
}

/// `U(n+1, 1-m, x)` for `x > 0` and any sign of `m`.
fn decay_u(n: u32, m: i32, x: f64) -> Result<LogScaled> {
    if m >= 0 {
        Ok(kummer_u(n + 1, 1 - m, x)?)
    } else {
        let k = m.unsigned_abs();
        Ok(kummer_u(n - k + 1, 1 - k as i32, x)? * LogScaled::powi(x, -(k as i64)))
    }
}

fn decay_u_pair(n: u32, m: i32, x: f64) -> Result<(LogScaled, LogScaled)> {
    if m >= 0 {
        Ok(kummer_u_pair(n + 1, 1 - m, x)?)
    } else {
        let k = m.unsigned_abs();
        let (u0, u1) = kummer_u_pair(n - k + 1, 1 - k as i32, x)?;
        let f = LogScaled::powi(x, -(k as i64));
        Ok((u0 * f, u1 * f))
    }
}

/// Branch values at row `n`. Only the branches flagged in `need` are
/// evaluated; the others are returned as zero.
pub fn branch_values(n: u32, m: i32, w: f64, need: (bool, bool)) -> Result<BranchValues> {
    OrderIndex::new(n, m)?;
    let mut out = BranchValues { a: LogScaled::ZERO, b: LogScaled::ZERO };
    if need.0 {
        out.a = laguerre_prefactor(n, m, w) * laguerre(n, m, w)?;
    }
    if need.1 {
        if w > 0.0 {
            out.b = cut_prefactor(n, m, w) * cut_u(n, m, w)?;
        } else if w < 0.0 {
            out.b = decay_prefactor(n, m, -w) * decay_u(n, m, -w)?;
        } else {
            return domain("the singular branch has no Fock representation at w = 0");
        }
    }
    Ok(out)
}

/// Branch values at rows `n` and `n + 1`.
pub fn branch_values_pair(n: u32, m: i32, w: f64, need: (bool, bool)) -> Result<[BranchValues; 2]> {
    OrderIndex::new(n, m)?;
    let mut out = [BranchValues { a: LogScaled::ZERO, b: LogScaled::ZERO }; 2];
    if need.0 {
        let (l0, l1) = laguerre_pair(n, m, w)?;
        out[0].a = laguerre_prefactor(n, m, w) * l0;
        out[1].a = laguerre_prefactor(n + 1, m, w) * l1;
    }
    if need.1 {
        if w > 0.0 {
            let (u0, u1) = cut_u_pair(n, m, w)?;
            out[0].b = cut_prefactor(n, m, w) * u0;
            out[1].b = cut_prefactor(n + 1, m, w) * u1;
        } else if w < 0.0 {
            let (u0, u1) = decay_u_pair(n, m, -w)?;
            out[0].b = decay_prefactor(n, m, -w) * u0;
            out[1].b = decay_prefactor(n + 1, m, -w) * u1;
        } else {
            return domain("the singular branch has no Fock representation at w = 0");
        }
    }
    Ok(out)
}

/// `<n|psi_m|n+m>` for the region solution `sol`.
pub fn fock_element(n: u32, m: i32, sol: &RegionSolution) -> Result<LogScaled> {
    let need = (!sol.coeff_a.is_zero(), !sol.coeff_b.is_zero());
    let v = branch_values(n, m, sol.w, need)?;
    Ok(sol.coeff_a * v.a + sol.coeff_b * v.b)
}
