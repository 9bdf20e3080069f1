//! Sign plus log-magnitude scalars.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Largest log gap at which the smaller addend still changes the result.
const ADD_CUTOFF: f64 = 745.0;

/// A real number stored as `sign * exp(logmag)`.
///
/// Products and quotients are exact in the exponent, so factorials and
/// exponentials far outside the `f64` range can be combined freely.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogScaled {
    sign: i8,
    logmag: f64,
}

impl LogScaled {
    pub const ZERO: LogScaled = LogScaled { sign: 0, logmag: f64::NEG_INFINITY };
    pub const ONE: LogScaled = LogScaled { sign: 1, logmag: 0.0 };

    /// Builds from an explicit sign and log-magnitude. A zero sign yields zero.
    pub fn new(sign: i8, logmag: f64) -> Self {
        if sign == 0 || logmag == f64::NEG_INFINITY {
            Self::ZERO
        } else {
            LogScaled { sign: sign.signum(), logmag }
        }
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            LogScaled { sign: if x > 0.0 { 1 } else { -1 }, logmag: x.abs().ln() }
        }
    }

    /// `exp(x)` without overflow.
    pub fn exp(x: f64) -> Self {
        Self::new(1, x)
    }

    /// `x^p` for `x >= 0`; `0^0 = 1`.
    pub fn powf_pos(x: f64, p: f64) -> Self {
        if x == 0.0 {
            if p == 0.0 {
                Self::ONE
            } else {
                Self::ZERO
            }
        } else {
            Self::new(1, p * x.abs().ln())
        }
    }

    /// `x^k` for any real `x` and integer `k`.
    pub fn powi(x: f64, k: i64) -> Self {
        if k == 0 {
            return Self::ONE;
        }
        if x == 0.0 {
            return if k > 0 { Self::ZERO } else { Self::new(1, f64::INFINITY) };
        }
        let sign = if x < 0.0 && k % 2 != 0 { -1 } else { 1 };
        Self::new(sign, k as f64 * x.abs().ln())
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn logmag(&self) -> f64 {
        self.logmag
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn is_finite(&self) -> bool {
        self.sign == 0 || self.logmag.is_finite()
    }

    pub fn abs(&self) -> Self {
        if self.sign == 0 {
            *self
        } else {
            LogScaled { sign: 1, logmag: self.logmag }
        }
    }

    pub fn recip(&self) -> Self {
        LogScaled { sign: self.sign, logmag: -self.logmag }
    }

    pub fn sqrt(&self) -> Self {
        assert!(self.sign >= 0, "sqrt of negative LogScaled");
        Self::new(self.sign, 0.5 * self.logmag)
    }

    /// Multiplies by `exp(x)`.
    pub fn mul_exp(&self, x: f64) -> Self {
        Self::new(self.sign, self.logmag + x)
    }

    pub fn to_f64(&self) -> f64 {
        if self.sign == 0 {
            0.0
        } else {
            self.sign as f64 * self.logmag.exp()
        }
    }

    /// Compares magnitudes only.
    pub fn cmp_abs(&self, other: &Self) -> Ordering {
        match (self.sign == 0, other.sign == 0) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            _ => self.logmag.total_cmp(&other.logmag),
        }
    }

    pub fn max_abs(self, other: Self) -> Self {
        if self.cmp_abs(&other) == Ordering::Less {
            other.abs()
        } else {
            self.abs()
        }
    }
}

impl Default for LogScaled {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<f64> for LogScaled {
    fn from(x: f64) -> Self {
        Self::from_f64(x)
    }
}

impl fmt::Display for LogScaled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            0 => write!(f, "0"),
            s => write!(f, "{}exp({})", if s < 0 { "-" } else { "" }, self.logmag),
        }
    }
}

impl Neg for LogScaled {
    type Output = LogScaled;
    fn neg(self) -> LogScaled {
        LogScaled { sign: -self.sign, logmag: self.logmag }
    }
}

impl Mul for LogScaled {
    type Output = LogScaled;
    fn mul(self, rhs: LogScaled) -> LogScaled {
        if self.sign == 0 || rhs.sign == 0 {
            return Self::ZERO;
        }
        LogScaled { sign: self.sign * rhs.sign, logmag: self.logmag + rhs.logmag }
    }
}

impl Div for LogScaled {
    type Output = LogScaled;
    fn div(self, rhs: LogScaled) -> LogScaled {
        if self.sign == 0 {
            return Self::ZERO;
        }
        if rhs.sign == 0 {
            return LogScaled { sign: self.sign, logmag: f64::INFINITY };
        }
        LogScaled { sign: self.sign * rhs.sign, logmag: self.logmag - rhs.logmag }
    }
}

impl Mul<f64> for LogScaled {
    type Output = LogScaled;
    fn mul(self, rhs: f64) -> LogScaled {
        self * LogScaled::from_f64(rhs)
    }
}

impl Add for LogScaled {
    type Output = LogScaled;
    fn add(self, rhs: LogScaled) -> LogScaled {
        if self.sign == 0 {
            return rhs;
        }
        if rhs.sign == 0 {
            return self;
        }
        let (big, small) = if self.logmag >= rhs.logmag { (self, rhs) } else { (rhs, self) };
        let gap = small.logmag - big.logmag;
        if gap < -ADD_CUTOFF || gap.is_nan() {
            return big;
        }
        let t = gap.exp();
        let ln_factor = if big.sign == small.sign {
            t.ln_1p()
        } else {
            if t == 1.0 {
                return Self::ZERO;
            }
            (-t).ln_1p()
        };
        Self::new(big.sign, big.logmag + ln_factor)
    }
}

impl Sub for LogScaled {
    type Output = LogScaled;
    fn sub(self, rhs: LogScaled) -> LogScaled {
        self + (-rhs)
    }
}
