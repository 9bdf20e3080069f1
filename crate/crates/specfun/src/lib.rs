//! Special functions for Fock-space matrix elements of cylinder waves.
//!
//! Everything that can overflow (factorials, exponentials, high-degree
//! polynomials) is returned as a [`LogScaled`] value.

pub mod bessel;
pub mod cut;
mod error;
pub mod gamma;
pub mod kummer;
pub mod laguerre;
mod logscaled;
pub mod oracle;
pub mod quad;
pub mod selftest;

pub use bessel::{bessel, bessel_signed, bessel_with_derivative, BesselKind};
pub use cut::{re_u_neg, re_u_neg_pair};
pub use error::{Error, Result};
pub use kummer::{kummer_u, kummer_u_pair, kummer_u_ratio, kummer_u_ratio_auto, kummer_u_ratio_with_cap};
pub use laguerre::{laguerre, laguerre_pair, laguerre_table};
pub use logscaled::LogScaled;
pub use oracle::{hankel_integral_closed, hankel_integral_oracle, hankel_integral_oracle_scaled};

/// Oscillator level `n` and angular order `m` of a matrix element
/// `<n|psi_m|n+m>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OrderIndex {
    pub n: u32,
    pub m: i32,
}

impl OrderIndex {
    /// Fails unless `n + m >= 0`.
    pub fn new(n: u32, m: i32) -> Result<Self> {
        if n as i64 + m as i64 >= 0 {
            Ok(OrderIndex { n, m })
        } else {
            Err(Error::Domain(format!("matrix element index needs n + m >= 0 (n={n}, m={m})")))
        }
    }

    /// The column index `n + m`.
    pub fn column(&self) -> u32 {
        (self.n as i64 + self.m as i64) as u32
    }
}
