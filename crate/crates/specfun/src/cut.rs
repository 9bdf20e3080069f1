//! Real part of `U(a, b, -w)` on the negative real axis.
//!
//! The Laplace integral `U(a,b,z) = 1/Γ(a) ∫ e^{-zt} t^{a-1} (1+t)^{b-a-1} dt`
//! is continued to `z = -w + i0` by running the contour into the lower half
//! plane, ending on a ray with argument in `(-π, -π/2)`. With integer `a` and
//! `b` the integrand is single valued, so any such contour avoiding `t = -1`
//! gives the same value. Several candidate contours (plain rays, and paths
//! through the saddle points of the integrand) are scanned, and the one with
//! the smallest absolute mass is integrated adaptively, which keeps
//! cancellation under control for large `a` and `w`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::gamma::ln_gamma;
use crate::quad::{integrate, QuadOptions};
use crate::LogScaled;

const RAY_FRACTIONS: [f64; 6] = [0.52, 0.6, 0.7, 0.8, 0.9, 0.97];
const SADDLE_RAY_FRACTIONS: [f64; 3] = [0.55, 0.75, 0.9];
const WINDOW: f64 = 50.0;

#[derive(Clone, Copy, Debug)]
enum Segment {
    Line { from: Complex64, to: Complex64 },
    Ray { from: Complex64, dir: Complex64 },
}

impl Segment {
    fn point(&self, s: f64) -> Complex64 {
        match *self {
            Segment::Line { from, to } => from + (to - from) * s,
            Segment::Ray { from, dir } => from + dir * s,
        }
    }

    fn jacobian(&self) -> Complex64 {
        match *self {
            Segment::Line { from, to } => to - from,
            Segment::Ray { dir, .. } => dir,
        }
    }

    /// Parameter samples used for the mass scan.
    fn samples(&self) -> Vec<f64> {
        match *self {
            Segment::Line { .. } => (1..=256).map(|i| i as f64 / 256.0).collect(),
            Segment::Ray { from, .. } => {
                let s0 = 1e-9 * (1.0 + from.norm());
                let ratio: f64 = 1.05;
                let count = ((1e13 / s0).ln() / ratio.ln()).ceil() as usize;
                (0..=count).map(|i| s0 * ratio.powi(i as i32)).collect()
            }
        }
    }
}

/// Log of the integrand `e^{wt} t^{a-1} (1+t)^{b-a-1}`.
struct CutIntegrand {
    a: f64,
    b: f64,
    w: f64,
}

impl CutIntegrand {
    fn log(&self, t: Complex64) -> Complex64 {
        let mut g = t * self.w + (1.0 + t).ln() * (self.b - self.a - 1.0);
        if self.a != 1.0 {
            g += t.ln() * (self.a - 1.0);
        }
        g
    }

    fn log_abs(&self, t: Complex64) -> f64 {
        let mut g = self.w * t.re + (self.b - self.a - 1.0) * (1.0 + t).norm().ln();
        if self.a != 1.0 {
            g += (self.a - 1.0) * t.norm().ln();
        }
        g
    }

    fn second_derivative(&self, t: Complex64) -> Complex64 {
        -(self.a - 1.0) / (t * t) - (self.b - self.a - 1.0) / ((1.0 + t) * (1.0 + t))
    }

    fn candidates(&self) -> Vec<Vec<Segment>> {
        let zero = Complex64::new(0.0, 0.0);
        let dir = |frac: f64| Complex64::from_polar(1.0, -PI * frac);
        let mut out: Vec<Vec<Segment>> =
            RAY_FRACTIONS.iter().map(|&f| vec![Segment::Ray { from: zero, dir: dir(f) }]).collect();
        let (a, b, w) = (self.a, self.b, self.w);
        // Saddles: w t^2 + (w + b - 2) t + (a - 1) = 0.
        let p = w + b - 2.0;
        let disc = p * p - 4.0 * w * (a - 1.0);
        let mut through = |saddle: Complex64, extra: Option<Complex64>| {
            let mut dirs: Vec<Complex64> = SADDLE_RAY_FRACTIONS.iter().map(|&f| dir(f)).collect();
            if let Some(d) = extra {
                dirs.push(d);
            }
            for d in dirs {
                out.push(vec![Segment::Line { from: zero, to: saddle }, Segment::Ray { from: saddle, dir: d }]);
            }
        };
        if disc < 0.0 {
            let saddle = Complex64::new(-p, -(-disc).sqrt()) / (2.0 * w);
            let g2 = self.second_derivative(saddle);
            let steepest = Complex64::from_polar(1.0, (PI - g2.arg()) / 2.0);
            for d in [steepest, -steepest] {
                let ang = d.arg();
                if ang > -PI && ang < -PI / 2.0 {
                    through(saddle, Some(d));
                }
            }
            through(saddle, None);
        } else {
            for sgn in [1.0, -1.0] {
                let root = (-p + sgn * disc.sqrt()) / (2.0 * w);
                if root > -1.0 && root.abs() > 1e-14 {
                    through(Complex64::new(root, 0.0), None);
                }
            }
        }
        out
    }

    /// Log of the absolute mass of a segment, and the parameter window
    /// holding it.
    fn scan(&self, seg: &Segment) -> (f64, f64, f64) {
        let s = seg.samples();
        let jac = seg.jacobian().norm().ln();
        let mut logs = Vec::with_capacity(s.len());
        for i in 0..s.len() {
            let ds = if i == 0 { s[0] } else { s[i] - s[i - 1] };
            logs.push(self.log_abs(seg.point(s[i])) + jac + ds.ln());
        }
        let top = logs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let total = top + logs.iter().map(|l| (l - top).exp()).sum::<f64>().ln();
        let first = logs.iter().position(|&l| l > top - WINDOW).unwrap_or(0);
        let last = logs.iter().rposition(|&l| l > top - WINDOW).unwrap_or(s.len() - 1);
        let lo = if first == 0 { 0.0 } else { s[first - 1] };
        let hi = s[(last + 1).min(s.len() - 1)];
        (total, lo, hi)
    }
}

fn log_add(a: f64, b: f64) -> f64 {
    let top = a.max(b);
    if top == f64::NEG_INFINITY {
        top
    } else {
        top + ((a - top).exp() + (b - top).exp()).ln()
    }
}

/// Complex `U(a,b,-w+i0)` and `U(a+1,b,-w+i0)` as `exp(scale) * value`,
/// without the `1/Γ` factors.
fn contour_pair(a: f64, b: f64, w: f64) -> Result<(f64, [Complex64; 2])> {
    let f = CutIntegrand { a, b, w };
    let mut best: Option<(f64, Vec<Segment>, Vec<(f64, f64)>)> = None;
    for path in f.candidates() {
        let mut mass = f64::NEG_INFINITY;
        let mut windows = Vec::with_capacity(path.len());
        for seg in &path {
            let (m, lo, hi) = f.scan(seg);
            mass = log_add(mass, m);
            windows.push((lo, hi));
        }
        if best.as_ref().map_or(true, |(bm, _, _)| mass < *bm) {
            best = Some((mass, path, windows));
        }
    }
    let (scale, path, windows) = best.expect("at least one candidate contour");
    let opts = QuadOptions { abs_tol: 0.0, rel_tol: 1e-14, mass_tol: 2e-14, max_intervals: 4000 };
    let mut total = [Complex64::new(0.0, 0.0); 2];
    for (seg, &(lo, hi)) in path.iter().zip(&windows) {
        let points: Vec<f64> = match seg {
            Segment::Line { .. } => (0..=8).map(|i| i as f64 / 8.0).collect(),
            Segment::Ray { .. } => {
                let mut pts = vec![0.0];
                let start = lo.max(1e-12 * hi);
                let steps = 24;
                for i in 0..=steps {
                    pts.push(start * (hi / start).powf(i as f64 / steps as f64));
                }
                pts
            }
        };
        let jac = seg.jacobian();
        let r = integrate(
            |s: f64| {
                let t = seg.point(s);
                let v = (f.log(t) - scale).exp() * jac;
                [v, v * (t / (1.0 + t))]
            },
            &points,
            &opts,
        );
        if !r.converged {
            return Err(Error::NoConvergence { what: "branch-cut contour integral", iterations: r.intervals });
        }
        total[0] += r.value[0];
        total[1] += r.value[1];
    }
    Ok((scale, total))
}

fn check_w(w: f64) -> Result<()> {
    if !(w > 0.0) || !w.is_finite() {
        return domain(format!("Re U on the cut needs w > 0, got {w}"));
    }
    Ok(())
}

/// `Re U(n+1, 1-m, -w)` for `w > 0`.
pub fn re_u_neg(n: u32, m: u32, w: f64) -> Result<LogScaled> {
    Ok(re_u_neg_pair(n, m, w)?.0)
}

/// `(Re U(n+1, 1-m, -w), Re U(n+2, 1-m, -w))` from one contour.
pub fn re_u_neg_pair(n: u32, m: u32, w: f64) -> Result<(LogScaled, LogScaled)> {
    check_w(w)?;
    let a = n as f64 + 1.0;
    let (scale, v) = contour_pair(a, 1.0 - m as f64, w)?;
    let first = LogScaled::from_f64(v[0].re).mul_exp(scale - ln_gamma(a));
    let second = LogScaled::from_f64(v[1].re).mul_exp(scale - ln_gamma(a + 1.0));
    Ok((first, second))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exponential integral Ei(x) for x > 0 by its power series.
    fn ei(x: f64) -> f64 {
        let mut sum = 0.0;
        let mut term = 1.0;
        for k in 1..400 {
            term *= x / k as f64;
            let add = term / k as f64;
            sum += add;
            if add < 1e-18 * sum {
                break;
            }
        }
        0.577_215_664_901_532_9 + x.ln() + sum
    }

    #[test]
    fn order_zero_is_exponential_integral() {
        for &w in &[0.05, 0.3, 1.0, 4.0, 10.0, 30.0] {
            let v = re_u_neg(0, 0, w).unwrap().to_f64();
            let exact = -(-w).exp() * ei(w);
            assert!((v - exact).abs() < 1e-12 * exact.abs(), "w={w} {v} {exact}");
        }
    }

    #[test]
    fn pair_is_consistent() {
        let (a, b) = re_u_neg_pair(5, 2, 3.3).unwrap();
        assert!((a.logmag() - re_u_neg(5, 2, 3.3).unwrap().logmag()).abs() < 1e-12);
        assert!((b.logmag() - re_u_neg(6, 2, 3.3).unwrap().logmag()).abs() < 1e-12);
    }

    #[test]
    fn rejects_nonpositive_argument() {
        assert!(re_u_neg(1, 1, 0.0).is_err());
    }
}
