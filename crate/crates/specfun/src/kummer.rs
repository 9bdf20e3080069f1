//! Tricomi `U(a, b, x)` for positive real `x`.
//!
//! Absolute values come from the Laplace integral
//! `U(a,b,x) = 1/Γ(a) ∫_0^∞ e^{-xt} t^{a-1} (1+t)^{b-a-1} dt`
//! taken in the variable `u = ln t`, where the integrand is log-concave for
//! `b <= a + 1`. Ratios in `a` come from a continued fraction.

use crate::error::{domain, Error, Result};
use crate::gamma::ln_gamma;
use crate::quad::{integrate, QuadOptions};
use crate::LogScaled;

/// Default iteration cap for [`kummer_u_ratio`].
pub const RATIO_ITERATION_CAP: usize = 200_000;

/// Drop in log-integrand that bounds the integration window.
const WINDOW: f64 = 46.0;

fn softplus(u: f64) -> f64 {
    if u > 0.0 {
        u + (-u).exp().ln_1p()
    } else {
        u.exp().ln_1p()
    }
}

fn logistic(u: f64) -> f64 {
    if u > 0.0 {
        1.0 / (1.0 + (-u).exp())
    } else {
        let e = u.exp();
        e / (1.0 + e)
    }
}

/// Log of the integrand `t^a (1+t)^{b-a-1} e^{-xt}` with `t = e^u`
/// (the extra factor of `t` is the Jacobian).
struct LaplaceIntegrand {
    a: f64,
    c: f64,
    x: f64,
}

impl LaplaceIntegrand {
    fn log(&self, u: f64) -> f64 {
        -self.x * u.exp() + self.a * u + self.c * softplus(u)
    }

    fn slope(&self, u: f64) -> f64 {
        -self.x * u.exp() + self.a + self.c * logistic(u)
    }

    fn peak(&self) -> f64 {
        let (mut lo, mut hi) = (-1.0, 1.0);
        while self.slope(lo) <= 0.0 {
            lo -= 2.0 * (1.0 + lo.abs());
        }
        while self.slope(hi) > 0.0 {
            hi += 2.0 * (1.0 + hi.abs());
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.slope(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Point beyond which the integrand stays below `exp(-WINDOW)` of its peak.
    fn edge(&self, peak: f64, top: f64, dir: f64) -> f64 {
        let mut step = 1.0;
        loop {
            let u = peak + dir * step;
            if self.log(u) < top - WINDOW {
                return u;
            }
            step *= 2.0;
        }
    }
}

/// `(U(a,b,x), U(a+1,b,x))` by direct quadrature. Requires `b <= a + 1`.
fn laplace_pair(a: f64, b: f64, x: f64) -> Result<(LogScaled, LogScaled)> {
    let h = LaplaceIntegrand { a, c: b - a - 1.0, x };
    let peak = h.peak();
    let top = h.log(peak);
    let lo = h.edge(peak, top, -1.0);
    let hi = h.edge(peak, top, 1.0);
    let mut points = Vec::with_capacity(9);
    for i in 0..=4 {
        points.push(lo + (peak - lo) * i as f64 / 4.0);
    }
    for i in 1..=4 {
        points.push(peak + (hi - peak) * i as f64 / 4.0);
    }
    let opts = QuadOptions { abs_tol: 0.0, rel_tol: 2e-14, mass_tol: 0.0, max_intervals: 2000 };
    let r = integrate(
        |u: f64| {
            let v = (h.log(u) - top).exp();
            [v, v * logistic(u)]
        },
        &points,
        &opts,
    );
    if !r.converged && r.abs_error > 1e-12 * r.value[0].abs() {
        return Err(Error::NoConvergence { what: "Tricomi U quadrature", iterations: r.intervals });
    }
    let first = LogScaled::from_f64(r.value[0]).mul_exp(top - ln_gamma(a));
    let second = LogScaled::from_f64(r.value[1]).mul_exp(top - ln_gamma(a + 1.0));
    Ok((first, second))
}

fn check_args(a: u32, b: i32, x: f64) -> Result<()> {
    if a == 0 {
        return domain("Tricomi U needs a >= 1");
    }
    if b > 1 {
        return domain(format!("Tricomi U needs b <= 1, got {b}"));
    }
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!("Tricomi U needs x > 0, got {x}"));
    }
    Ok(())
}

/// `U(a, b, x)` for integer `a >= 1`, integer `b <= 1`, `x > 0`, through the
/// Kummer transform `U(a, 1-m, x) = x^m U(a+m, 1+m, x)`.
pub fn kummer_u(a: u32, b: i32, x: f64) -> Result<LogScaled> {
    Ok(kummer_u_pair(a, b, x)?.0)
}

/// `(U(a,b,x), U(a+1,b,x))` from one quadrature pass.
pub fn kummer_u_pair(a: u32, b: i32, x: f64) -> Result<(LogScaled, LogScaled)> {
    check_args(a, b, x)?;
    let m = (1 - b) as f64;
    let (u0, u1) = laplace_pair(a as f64 + m, 1.0 + m, x)?;
    let scale = LogScaled::powf_pos(x, m);
    Ok((scale * u0, scale * u1))
}

/// `U(a, b, x)` from the Laplace integral in the original parameters,
/// without the Kummer transform. Used as a consistency check.
pub fn kummer_u_direct(a: u32, b: i32, x: f64) -> Result<LogScaled> {
    check_args(a, b, x)?;
    Ok(laplace_pair(a as f64, b as f64, x)?.0)
}

/// `U(a+1, b, x) / U(a, b, x)` by the continued fraction of the recurrence
/// `U(a-1) + (b-2a-x) U(a) + a(a-b+1) U(a+1) = 0`.
pub fn kummer_u_ratio(a: u32, b: i32, x: f64) -> Result<f64> {
    kummer_u_ratio_with_cap(a, b, x, RATIO_ITERATION_CAP)
}

pub fn kummer_u_ratio_with_cap(a: u32, b: i32, x: f64, cap: usize) -> Result<f64> {
    check_args(a, b, x)?;
    let (a, b) = (a as f64, b as f64);
    const TINY: f64 = 1e-300;
    const EPS: f64 = 1e-15;
    // r = 1/(β1 - α1/(β2 - α2/(β3 - ...))), modified Lentz.
    let beta = |j: f64| 2.0 * (a + j) + x - b;
    let alpha = |j: f64| (a + j) * (a + j - b + 1.0);
    let mut f = TINY;
    let mut c = f;
    let mut d = 0.0;
    let mut hits = 0;
    for j in 1..=cap {
        let (aj, bj) = if j == 1 { (1.0, beta(1.0)) } else { (-alpha(j as f64 - 1.0), beta(j as f64)) };
        d = bj + aj * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = bj + aj / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < EPS {
            hits += 1;
            if hits >= 2 {
                return Ok(f);
            }
        } else {
            hits = 0;
        }
    }
    Err(Error::NoConvergence { what: "Tricomi U ratio continued fraction", iterations: cap })
}

/// Rough iteration count the continued fraction needs at these arguments.
fn ratio_cost(a: u32, x: f64) -> f64 {
    let s = (a as f64).sqrt() + 9.25 / x.sqrt();
    s * s - a as f64
}

/// `U(a+1,b,x)/U(a,b,x)`, switching to the quotient of quadratures when the
/// continued fraction would be too slow (small `x`).
pub fn kummer_u_ratio_auto(a: u32, b: i32, x: f64) -> Result<f64> {
    check_args(a, b, x)?;
    if ratio_cost(a, x) < 0.25 * RATIO_ITERATION_CAP as f64 {
        if let Ok(r) = kummer_u_ratio(a, b, x) {
            return Ok(r);
        }
    }
    let (u0, u1) = kummer_u_pair(a, b, x)?;
    Ok((u1 / u0).to_f64())
}
