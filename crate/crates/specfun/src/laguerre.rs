//! Generalized Laguerre polynomials by scaled forward recurrence.

use crate::error::{domain, Result};
use crate::gamma::ln_factorial;
use crate::LogScaled;

const RESCALE: f64 = 1e100;

/// Running state of the forward recurrence: `prev = L_{j-1}`, `cur = L_j`,
/// both multiplied by `exp(-shift)`.
struct Forward {
    j: u32,
    m: f64,
    w: f64,
    prev: f64,
    cur: f64,
    shift: f64,
}

impl Forward {
    fn new(m: f64, w: f64) -> Self {
        Forward { j: 0, m, w, prev: 0.0, cur: 1.0, shift: 0.0 }
    }

    fn step(&mut self) {
        let j = self.j as f64;
        let next = if self.j == 0 {
            1.0 + self.m - self.w
        } else {
            ((2.0 * j + 1.0 + self.m - self.w) * self.cur - (j + self.m) * self.prev) / (j + 1.0)
        };
        self.prev = self.cur;
        self.cur = next;
        self.j += 1;
        let big = self.cur.abs().max(self.prev.abs());
        if big > RESCALE {
            self.prev /= RESCALE;
            self.cur /= RESCALE;
            self.shift += RESCALE.ln();
        } else if big < 1.0 / RESCALE && big > 0.0 {
            self.prev *= RESCALE;
            self.cur *= RESCALE;
            self.shift -= RESCALE.ln();
        }
    }

    fn value(&self, x: f64) -> LogScaled {
        LogScaled::from_f64(x).mul_exp(self.shift)
    }
}

fn check_w(w: f64) -> Result<()> {
    if w.is_finite() {
        Ok(())
    } else {
        domain(format!("Laguerre argument must be finite, got {w}"))
    }
}

/// `L^m_n(w)` for `m >= 0` along with `L^m_{n+1}(w)`.
fn pair_nonneg(n: u32, m: u32, w: f64) -> (LogScaled, LogScaled) {
    let mut f = Forward::new(m as f64, w);
    for _ in 0..=n {
        f.step();
    }
    (f.value(f.prev), f.value(f.cur))
}

/// Factor `(-w)^k (n-k)!/n!` relating `L^{-k}_n` to `L^k_{n-k}`.
fn negative_order_factor(n: u32, k: u32, w: f64) -> LogScaled {
    let ln_ratio = ln_factorial((n - k) as u64) - ln_factorial(n as u64);
    LogScaled::powi(-w, k as i64).mul_exp(ln_ratio)
}

/// Generalized Laguerre polynomial `L^m_n(w)`.
///
/// Negative orders use `L^{-k}_n(w) = (-w)^k (n-k)!/n! L^k_{n-k}(w)`, which
/// requires `n >= k`.
pub fn laguerre(n: u32, m: i32, w: f64) -> Result<LogScaled> {
    check_w(w)?;
    if m >= 0 {
        let mut f = Forward::new(m as f64, w);
        for _ in 0..n {
            f.step();
        }
        return Ok(f.value(f.cur));
    }
    let k = m.unsigned_abs();
    if n < k {
        return domain(format!("Laguerre L^{m}_{n} needs n >= {k}"));
    }
    Ok(negative_order_factor(n, k, w) * laguerre(n - k, k as i32, w)?)
}

/// `(L^m_n(w), L^m_{n+1}(w))` from a single recurrence pass.
pub fn laguerre_pair(n: u32, m: i32, w: f64) -> Result<(LogScaled, LogScaled)> {
    check_w(w)?;
    if m >= 0 {
        return Ok(pair_nonneg(n, m as u32, w));
    }
    let k = m.unsigned_abs();
    if n < k {
        return domain(format!("Laguerre L^{m}_{n} needs n >= {k}"));
    }
    let (a, b) = pair_nonneg(n - k, k, w);
    Ok((negative_order_factor(n, k, w) * a, negative_order_factor(n + 1, k, w) * b))
}

/// All values `L^m_0(w) ..= L^m_{n_max}(w)` for `m >= 0`.
pub fn laguerre_table(n_max: u32, m: u32, w: f64) -> Result<Vec<LogScaled>> {
    check_w(w)?;
    let mut f = Forward::new(m as f64, w);
    let mut out = Vec::with_capacity(n_max as usize + 1);
    out.push(LogScaled::ONE);
    for _ in 0..n_max {
        f.step();
        out.push(f.value(f.cur));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u32, k: u32) -> f64 {
        (1..=k).fold(1.0, |acc, i| acc * (n - k + i) as f64 / i as f64)
    }

    #[test]
    fn low_degrees() {
        assert_eq!(laguerre(0, 3, 2.5).unwrap(), LogScaled::ONE);
        assert_eq!(laguerre(0, -2, 2.5).unwrap_err().to_string().contains("needs"), true);
        let w = 0.37;
        assert!((laguerre(1, 0, w).unwrap().to_f64() - (1.0 - w)).abs() < 1e-15);
        let l2 = 0.5 * (w * w - 4.0 * w + 2.0);
        assert!((laguerre(2, 0, w).unwrap().to_f64() - l2).abs() < 1e-15);
    }

    #[test]
    fn value_at_origin_is_binomial() {
        for n in 0..30 {
            for m in 0..6 {
                let v = laguerre(n, m as i32, 0.0).unwrap().to_f64();
                let b = binom(n + m, n);
                assert!((v - b).abs() <= 1e-13 * b, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn negative_order_closed_form() {
        // L^{-1}_1(w) = -w
        let w = 1.7;
        assert!((laguerre(1, -1, w).unwrap().to_f64() + w).abs() < 1e-15);
        // L^{-2}_3(w) = w^2 (3 - w)/6
        let v = laguerre(3, -2, w).unwrap().to_f64();
        assert!((v - w * w * (3.0 - w) / 6.0).abs() < 1e-14);
    }

    #[test]
    fn pair_matches_single() {
        for &(n, m, w) in &[(10u32, 4i32, 3.3), (1000, 4, 0.5), (12, -3, 7.1), (3, -3, 0.2)] {
            let (a, b) = laguerre_pair(n, m, w).unwrap();
            let a1 = laguerre(n, m, w).unwrap();
            let b1 = laguerre(n + 1, m, w).unwrap();
            assert!((a.logmag() - a1.logmag()).abs() < 1e-13 && a.sign() == a1.sign());
            assert!((b.logmag() - b1.logmag()).abs() < 1e-13 && b.sign() == b1.sign());
        }
    }

    #[test]
    fn high_degree_stays_finite() {
        let v = laguerre(2000, 60, 400.0).unwrap();
        assert!(v.is_finite() && !v.is_zero());
    }
}
