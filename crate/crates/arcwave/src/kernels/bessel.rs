//! In-house Bessel and Hankel function evaluation on the complex plane.
//!
//! Ascending series with the logarithmic term kept symbolic for moderate
//! arguments, Hankel asymptotic expansion beyond. The split-kernel
//! machinery needs the series route so that the `log d²` factor can be
//! removed exactly rather than subtracted numerically.

use num_complex::Complex64;
use std::f64::consts::PI;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Crossover between the ascending series and the asymptotic expansion.
pub const SERIES_LIMIT: f64 = 14.0;

const I: Complex64 = Complex64::new(0.0, 1.0);

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// `J₀(z)` by the ascending series (any `z`; accurate for `|z| ≲ 14`).
pub fn j0_series(z: Complex64) -> Complex64 {
    let q = -z * z * 0.25;
    let mut term = c(1.0);
    let mut sum = term;
    for m in 1..120 {
        term *= q / (m * m) as f64;
        sum += term;
        if term.norm() < 1e-18 * sum.norm().max(1.0) {
            break;
        }
    }
    sum
}

/// `J₁(z)` by the ascending series.
pub fn j1_series(z: Complex64) -> Complex64 {
    let q = -z * z * 0.25;
    let mut term = c(1.0);
    let mut sum = term;
    for m in 1..120 {
        term *= q / (m * (m + 1)) as f64;
        sum += term;
        if term.norm() < 1e-18 * sum.norm().max(1.0) {
            break;
        }
    }
    sum * z * 0.5
}

/// `Σ_{m≥1} (-1)^{m+1} h_m (z²/4)^m / (m!)²` with `h_m = 1 + … + 1/m`;
/// the series part of `Y₀ = (2/π)(ln(z/2)+γ)J₀ + (2/π)·this`.
fn y0_series_part(z: Complex64) -> Complex64 {
    let q = -z * z * 0.25;
    let mut pow = c(1.0);
    let mut h = 0.0;
    let mut sum = c(0.0);
    for m in 1..120 {
        pow *= q / (m * m) as f64; // (-1)^m (z²/4)^m / (m!)²
        h += 1.0 / m as f64;
        let term = -pow * h; // (-1)^{m+1} h_m (z²/4)^m/(m!)²
        sum += term;
        if term.norm() < 1e-18 * sum.norm().max(1.0) {
            break;
        }
    }
    sum
}

/// `Σ_m (-1)^m (h_m + h_{m+1}) (z²/4)^m / (m!(m+1)!)`;
/// the series part of `Y₁ = (2/π)(ln(z/2)+γ)J₁ - 2/(πz) - (z/2π)·this`.
fn y1_series_part(z: Complex64) -> Complex64 {
    let q = -z * z * 0.25;
    let mut pow = c(1.0);
    let mut h = 0.0; // h_m
    let mut sum = pow * (0.0 + 1.0); // m = 0: h_0 + h_1 = 1
    for m in 1..120 {
        pow *= q / (m * (m + 1)) as f64;
        h += 1.0 / m as f64;
        let term = pow * (2.0 * h + 1.0 / (m + 1) as f64); // h_m + h_{m+1}
        sum += term;
        if term.norm() < 1e-18 * sum.norm().max(1.0) {
            break;
        }
    }
    sum
}

/// `Y₀(z)` by the ascending series.
pub fn y0_series(z: Complex64) -> Complex64 {
    let lg = (z * 0.5).ln() + EULER_GAMMA;
    (2.0 / PI) * (lg * j0_series(z) + y0_series_part(z))
}

/// `Y₁(z)` by the ascending series.
pub fn y1_series(z: Complex64) -> Complex64 {
    let lg = (z * 0.5).ln() + EULER_GAMMA;
    (2.0 / PI) * lg * j1_series(z) - 2.0 / (PI * z) - z / (2.0 * PI) * y1_series_part(z)
}

/// Asymptotic Hankel expansion
/// `H_ν⁽¹⁾(z) ≈ √(2/(πz)) e^{i(z - νπ/2 - π/4)} Σ_k i^k A_k(ν)/z^k`.
fn hankel1_asymptotic(nu: u32, z: Complex64) -> Complex64 {
    let mut a = c(1.0);
    let mut sum = a;
    let mut last_norm = f64::INFINITY;
    let fournu2 = (4 * nu * nu) as f64;
    for k in 1..=25 {
        let odd = (2 * k - 1) as f64;
        a *= c(fournu2 - odd * odd) / (8.0 * k as f64) * I / z;
        if a.norm() >= last_norm {
            break;
        }
        last_norm = a.norm();
        sum += a;
    }
    let phase = z - c(nu as f64 * PI / 2.0 + PI / 4.0);
    (c(2.0) / (PI * z)).sqrt() * (I * phase).exp() * sum
}

/// Hankel function of the first kind, order zero.
pub fn hankel1_0(z: Complex64) -> Complex64 {
    if z.norm() <= SERIES_LIMIT {
        j0_series(z) + I * y0_series(z)
    } else {
        hankel1_asymptotic(0, z)
    }
}

/// Hankel function of the first kind, order one.
pub fn hankel1_1(z: Complex64) -> Complex64 {
    if z.norm() <= SERIES_LIMIT {
        j1_series(z) + I * y1_series(z)
    } else {
        hankel1_asymptotic(1, z)
    }
}

/// `J₀` for real argument.
pub fn j0(x: f64) -> f64 {
    if x.abs() <= SERIES_LIMIT {
        j0_series(c(x)).re
    } else {
        hankel1_asymptotic(0, c(x.abs())).re
    }
}

/// `Y₀` for positive real argument.
pub fn y0(x: f64) -> f64 {
    if x <= SERIES_LIMIT {
        y0_series(c(x)).re
    } else {
        hankel1_asymptotic(0, c(x)).im
    }
}

/// `J₁` for real argument.
pub fn j1(x: f64) -> f64 {
    if x.abs() <= SERIES_LIMIT {
        j1_series(c(x)).re
    } else {
        let v = hankel1_asymptotic(1, c(x.abs())).re;
        if x < 0.0 {
            -v
        } else {
            v
        }
    }
}

/// `Y₁` for positive real argument.
pub fn y1(x: f64) -> f64 {
    if x <= SERIES_LIMIT {
        y1_series(c(x)).re
    } else {
        hankel1_asymptotic(1, c(x)).im
    }
}
