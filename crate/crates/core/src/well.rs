use crate::error::{domain, Result};

/// The non-commutative circular well: interior level 0 for Fock levels
/// `n <= N`, exterior level `V` above, radius `R^2 = θ(2N + 1)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WellSpec {
    theta: f64,
    cap_n: u32,
    v: f64,
    radius_squared: f64,
}

fn check_v(v: f64) -> Result<()> {
    if v.is_finite() && v >= 0.0 {
        Ok(())
    } else {
        domain(format!("well depth V must be finite and non-negative, got {v}"))
    }
}

impl WellSpec {
    /// From θ and N.
    pub fn new(theta: f64, cap_n: u32, v: f64) -> Result<Self> {
        if !(theta > 0.0) || !theta.is_finite() {
            return domain(format!("theta must be positive, got {theta}"));
        }
        check_v(v)?;
        let radius_squared = theta * (2 * cap_n + 1) as f64;
        Ok(WellSpec { theta, cap_n, v, radius_squared })
    }

    /// From `R^2` and N: `θ = R^2 / (2N + 1)`.
    pub fn from_radius_squared(radius_squared: f64, cap_n: u32, v: f64) -> Result<Self> {
        if !(radius_squared > 0.0) || !radius_squared.is_finite() {
            return domain(format!("R^2 must be positive, got {radius_squared}"));
        }
        check_v(v)?;
        let theta = radius_squared / (2 * cap_n + 1) as f64;
        Ok(WellSpec { theta, cap_n, v, radius_squared })
    }

    pub fn from_radius(radius: f64, cap_n: u32, v: f64) -> Result<Self> {
        Self::from_radius_squared(radius * radius, cap_n, v)
    }

    /// From θ and `R^2`; fails unless `R^2/θ` is an odd integer (to 1e-9).
    pub fn from_theta_radius_squared(theta: f64, radius_squared: f64, v: f64) -> Result<Self> {
        if !(theta > 0.0) || !(radius_squared > 0.0) {
            return domain("theta and R^2 must be positive");
        }
        let levels = (radius_squared / theta - 1.0) / 2.0;
        let cap_n = levels.round();
        if cap_n < 0.0 || (levels - cap_n).abs() > 1e-9 * (1.0 + cap_n) || cap_n > u32::MAX as f64 {
            return domain(format!(
                "R^2 = θ(2N+1) needs an integer N; R^2/θ = {} gives N = {levels}",
                radius_squared / theta
            ));
        }
        check_v(v)?;
        Ok(WellSpec { theta, cap_n: cap_n as u32, v, radius_squared })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn cap_n(&self) -> u32 {
        self.cap_n
    }

    pub fn v(&self) -> f64 {
        self.v
    }

    pub fn radius_squared(&self) -> f64 {
        self.radius_squared
    }

    pub fn radius(&self) -> f64 {
        self.radius_squared.sqrt()
    }

    /// Same geometry with a different depth.
    pub fn with_v(&self, v: f64) -> Result<Self> {
        check_v(v)?;
        Ok(WellSpec { v, ..*self })
    }

    /// Rejects `m < -N`, where no partial wave exists.
    pub fn check_order(&self, m: i32) -> Result<()> {
        if m < 0 && m.unsigned_abs() > self.cap_n {
            return domain(format!(
                "negative-m cutoff violated: m = {m} but partial waves with m < 0 need |m| <= N = {}",
                self.cap_n
            ));
        }
        Ok(())
    }
}
