//! Integer-order cylinder functions.
//!
//! J and Y come from `libm` (`jn`, `yn`); I and K from `puruspe::besselik`.

use crate::error::{domain, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BesselKind {
    J,
    Y,
    I,
    K,
}

impl BesselKind {
    /// Whether the function is singular at the origin.
    pub fn singular_at_origin(self) -> bool {
        matches!(self, BesselKind::Y | BesselKind::K)
    }
}

/// Cylinder function `C_m(x)` for `m >= 0`.
pub fn bessel(kind: BesselKind, m: u32, x: f64) -> Result<f64> {
    if !x.is_finite() || x < 0.0 || (x == 0.0 && kind.singular_at_origin()) {
        return domain(format!("{kind:?}_{m} undefined at x = {x}"));
    }
    let n = m as i32;
    Ok(match kind {
        BesselKind::J => libm::jn(n, x),
        BesselKind::Y => libm::yn(n, x),
        BesselKind::I if x == 0.0 => {
            if m == 0 {
                1.0
            } else {
                0.0
            }
        }
        BesselKind::I => puruspe::besselik(m as f64, x).0,
        BesselKind::K => puruspe::besselik(m as f64, x).1,
    })
}

/// Cylinder function of any integer order, using `J_{-m} = (-1)^m J_m`,
/// `Y_{-m} = (-1)^m Y_m`, `I_{-m} = I_m`, `K_{-m} = K_m`.
pub fn bessel_signed(kind: BesselKind, m: i32, x: f64) -> Result<f64> {
    let v = bessel(kind, m.unsigned_abs(), x)?;
    let odd_negative = m < 0 && m % 2 != 0;
    Ok(match kind {
        BesselKind::J | BesselKind::Y if odd_negative => -v,
        _ => v,
    })
}

/// `(C_m(x), C_m'(x))` with the derivative from the order-lowering recurrence.
pub fn bessel_with_derivative(kind: BesselKind, m: u32, x: f64) -> Result<(f64, f64)> {
    let c = bessel(kind, m, x)?;
    if x == 0.0 {
        // Only J and I reach here.
        let d = if m == 1 { 0.5 } else { 0.0 };
        return Ok((c, d));
    }
    let lower = bessel_signed(kind, m as i32 - 1, x)?;
    let mx = m as f64 / x;
    let d = match kind {
        BesselKind::K => -lower - mx * c,
        _ => lower - mx * c,
    };
    Ok((c, d))
}
