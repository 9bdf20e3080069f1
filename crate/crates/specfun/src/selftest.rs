//! Oracle-equivalence suites: closed forms against brute-force quadrature
//! and internal consistency checks.

use crate::bessel::BesselKind;
use crate::cut::re_u_neg;
use crate::kummer::{kummer_u_direct, kummer_u_pair, kummer_u_ratio};
use crate::laguerre::laguerre_table;
use crate::oracle::{hankel_integral_closed, hankel_integral_oracle};
use crate::LogScaled;

/// Outcome of one suite.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub tolerance: f64,
    pub max_error: f64,
    /// Descriptions of failing cases (errors or out-of-tolerance values).
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str, tolerance: f64) -> Self {
        SuiteReport { name, cases: 0, tolerance, max_error: 0.0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, label: impl FnOnce() -> String, outcome: Result<f64, String>) {
        self.cases += 1;
        match outcome {
            Ok(err) => {
                if err.is_nan() || err > self.tolerance {
                    self.failures.push(format!("{}: error {err:e}", label()));
                }
                if !err.is_nan() {
                    self.max_error = self.max_error.max(err);
                }
            }
            Err(msg) => self.failures.push(format!("{}: {msg}", label())),
        }
    }
}

fn rel_error(value: f64, reference: f64) -> f64 {
    if reference == 0.0 {
        value.abs()
    } else {
        ((value - reference) / reference).abs()
    }
}

fn integral_case(n: u32, m: u32, kind: BesselKind, s: f64) -> Result<f64, String> {
    let closed = hankel_integral_closed(n, m, kind, s).map_err(|e| e.to_string())?;
    let quad = hankel_integral_oracle(n, m, kind, s).map_err(|e| e.to_string())?;
    Ok(rel_error(closed.to_f64(), quad))
}

/// Laguerre closed form of the J integral, `n <= 40`, `m <= 8`, `s ∈ {0.3, 1, 3}`.
pub fn j_integral_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("J-integral closed form vs quadrature", 1e-8);
    for &s in &[0.3, 1.0, 3.0] {
        for m in 0..=8 {
            for n in 0..=40 {
                rep.record(|| format!("n={n} m={m} s={s}"), integral_case(n, m, BesselKind::J, s));
            }
        }
    }
    rep
}

/// Re U closed form of the Y integral, `n <= 20`, `m <= 6`, `w ∈ [0.05, 10]`.
pub fn y_integral_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("Re U closed form vs Y-integral quadrature", 1e-6);
    for &w in &[0.05, 0.2, 0.7, 1.5, 3.0, 6.0, 10.0] {
        let s = 2.0 * f64::sqrt(w);
        for m in 0..=6 {
            for n in 0..=20 {
                rep.record(|| format!("n={n} m={m} w={w}"), integral_case(n, m, BesselKind::Y, s));
            }
        }
    }
    rep
}

/// Tricomi U closed form of the K integral.
pub fn k_integral_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("U closed form vs K-integral quadrature", 1e-8);
    for &x in &[0.05, 0.5, 2.0, 8.0] {
        let s = 2.0 * f64::sqrt(x);
        for m in 0..=6 {
            for n in 0..=20 {
                rep.record(|| format!("n={n} m={m} x={x}"), integral_case(n, m, BesselKind::K, s));
            }
        }
    }
    rep
}

/// Laguerre closed form of the I integral.
pub fn i_integral_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("Laguerre closed form vs I-integral quadrature", 1e-8);
    for &x in &[0.05, 0.5, 2.0] {
        let s = 2.0 * f64::sqrt(x);
        for m in 0..=4 {
            for n in 0..=15 {
                rep.record(|| format!("n={n} m={m} x={x}"), integral_case(n, m, BesselKind::I, s));
            }
        }
    }
    rep
}

/// `x^m U(a+m, 1+m, x)` against the untransformed integral.
pub fn kummer_transform_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("Kummer transform consistency", 1e-10);
    for &x in &[0.01, 0.3, 2.0, 15.0] {
        for b in -8..=1 {
            for a in [1u32, 2, 5, 11, 30] {
                let outcome = (|| {
                    let t = kummer_u_pair(a, b, x).map_err(|e| e.to_string())?.0;
                    let d = kummer_u_direct(a, b, x).map_err(|e| e.to_string())?;
                    Ok((t.logmag() - d.logmag()).abs())
                })();
                rep.record(|| format!("a={a} b={b} x={x}"), outcome);
            }
        }
    }
    rep
}

/// Continued-fraction ratio against the quotient of two quadratures.
pub fn kummer_ratio_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("U ratio continued fraction vs quadrature", 1e-11);
    for &x in &[0.05, 0.4, 3.0, 20.0] {
        for b in [-6, -3, 0, 1] {
            for a in [1u32, 3, 10, 25, 50] {
                let outcome = (|| {
                    let r = kummer_u_ratio(a, b, x).map_err(|e| e.to_string())?;
                    let (u0, u1) = kummer_u_pair(a, b, x).map_err(|e| e.to_string())?;
                    Ok(rel_error(r, (u1 / u0).to_f64()))
                })();
                rep.record(|| format!("a={a} b={b} x={x}"), outcome);
            }
        }
    }
    rep
}

/// Residual of the three-term recurrence at every step.
pub fn laguerre_recurrence_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("Laguerre recurrence residual", 1e-10);
    for &w in &[0.01, 0.5, 3.0, 40.0] {
        for m in [0u32, 1, 4, 20] {
            let table = match laguerre_table(2000, m, w) {
                Ok(t) => t,
                Err(e) => {
                    rep.record(|| format!("m={m} w={w}"), Err(e.to_string()));
                    continue;
                }
            };
            let mut worst: f64 = 0.0;
            for n in 1..table.len() - 1 {
                let nf = n as f64;
                let terms = [
                    table[n + 1] * (nf + 1.0),
                    -(table[n] * (2.0 * nf + 1.0 + m as f64 - w)),
                    table[n - 1] * (nf + m as f64),
                ];
                let scale = terms.iter().fold(LogScaled::ZERO, |acc, t| acc.max_abs(*t));
                let sum = terms[0] + terms[1] + terms[2];
                worst = worst.max((sum / scale).to_f64().abs());
            }
            rep.record(|| format!("m={m} w={w}"), Ok(worst));
        }
    }
    rep
}

/// Exponential integral `Ei(x)` for `x > 0` by its power series.
pub fn exponential_integral_ei(x: f64) -> f64 {
    let mut sum = 0.0;
    let mut term = 1.0;
    for k in 1..2000 {
        term *= x / k as f64;
        let add = term / k as f64;
        sum += add;
        if add < 1e-17 * sum {
            break;
        }
    }
    0.577_215_664_901_532_9 + x.ln() + sum
}

/// `Re U(1, 1, -w) = -e^{-w} Ei(w)`.
pub fn cut_exponential_integral_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("Re U(1,1,-w) vs exponential integral", 1e-11);
    for &w in &[0.01, 0.05, 0.5, 1.0, 5.0, 10.0, 25.0] {
        let outcome = re_u_neg(0, 0, w)
            .map(|v| rel_error(v.to_f64(), -(-w).exp() * exponential_integral_ei(w)))
            .map_err(|e| e.to_string());
        rep.record(|| format!("w={w}"), outcome);
    }
    rep
}

/// Every suite, in a fixed order.
pub fn run_all() -> Vec<SuiteReport> {
    vec![
        laguerre_recurrence_suite(),
        j_integral_suite(),
        y_integral_suite(),
        k_integral_suite(),
        i_integral_suite(),
        kummer_transform_suite(),
        kummer_ratio_suite(),
        cut_exponential_integral_suite(),
    ]
}
