//! Log-factorials and log-gamma.

use std::sync::OnceLock;

const TABLE_LEN: usize = 1 << 15;

fn table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // Compensated running sum of ln k.
        let mut out = Vec::with_capacity(TABLE_LEN);
        let (mut sum, mut comp) = (0.0f64, 0.0f64);
        out.push(0.0);
        for k in 1..TABLE_LEN {
            let y = (k as f64).ln() - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
            out.push(sum);
        }
        out
    })
}

/// `ln(n!)`.
pub fn ln_factorial(n: u64) -> f64 {
    match table().get(n as usize) {
        Some(&v) => v,
        None => statrs::function::gamma::ln_gamma(n as f64 + 1.0),
    }
}

/// `ln Γ(x)` for `x > 0`; exact table lookup at integers.
pub fn ln_gamma(x: f64) -> f64 {
    if x >= 1.0 && x.fract() == 0.0 && x < TABLE_LEN as f64 {
        ln_factorial(x as u64 - 1)
    } else {
        statrs::function::gamma::ln_gamma(x)
    }
}
