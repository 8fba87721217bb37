//! Trilogarithm on the closed unit interval.

use crate::error::{Error, Result};

/// Apéry's constant ζ(3).
#[allow(clippy::excessive_precision)]
pub const ZETA_3: f64 = 1.202_056_903_159_594_285_399_738_161_511_449_99;

const ZETA_2: f64 = std::f64::consts::PI * std::f64::consts::PI / 6.0;

/// `Li₃(z) = Σ z^k / k³` for `-1 ≤ z ≤ 1`.
pub fn polylog3(z: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&z) {
        return Err(Error::Domain(format!("Li3 needs |z| <= 1, got {z}")));
    }
    Ok(li3_unchecked(z))
}

pub(crate) fn li3_unchecked(z: f64) -> f64 {
    if z == 1.0 {
        ZETA_3
    } else if z.abs() <= 0.5 {
        direct_series(z)
    } else if z > 0.5 {
        near_one(z)
    } else {
        // Li3(z) + Li3(-z) = Li3(z²)/4 maps [-1, -0.5) onto the positive branch
        0.25 * li3_unchecked(z * z) - near_one(-z)
    }
}

fn direct_series(z: f64) -> f64 {
    // 0.5^60 < 1e-18
    let mut sum = 0.0;
    let mut power = 1.0;
    for k in 1..=60 {
        power *= z;
        let k = k as f64;
        sum += power / (k * k * k);
    }
    sum
}

/// Expansion in `μ = ln z` around `z = 1`, valid for `|μ| < 2π`:
/// `ζ(3) + ζ(2)μ + μ²/2·(3/2 − ln(−μ)) + Σ_{k≥3} ζ(3−k) μ^k/k!`.
fn near_one(z: f64) -> f64 {
    // (k, ζ(3 - k)) for the nonzero coefficients, k ≥ 3
    const TAIL: [(i32, f64); 8] = [
        (3, -0.5),
        (4, -1.0 / 12.0),
        (6, 1.0 / 120.0),
        (8, -1.0 / 252.0),
        (10, 1.0 / 240.0),
        (12, -1.0 / 132.0),
        (14, 691.0 / 32760.0),
        (16, -1.0 / 12.0),
    ];
    let mu = z.ln();
    if mu == 0.0 {
        return ZETA_3;
    }
    let mut sum = ZETA_3 + ZETA_2 * mu + 0.5 * mu * mu * (1.5 - (-mu).ln());
    let mut factorial = 2.0;
    let mut k_prev = 2;
    for (k, zeta) in TAIL {
        for j in (k_prev + 1)..=k {
            factorial *= j as f64;
        }
        k_prev = k;
        sum += zeta * mu.powi(k) / factorial;
    }
    sum
}
