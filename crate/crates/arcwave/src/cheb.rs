//! Classical Chebyshev series algebra.
//!
//! Everything in this module works with *classical* normalization:
//! `T_n(cos t) = cos(n t)` and `U_n(cos t) = sin((n+1)t)/sin(t)`. The
//! orthonormal scalings used by the public spectral API live in
//! [`crate::spectral`]; assembly code converts at the edges.

use num_complex::Complex64;
use rustfft::{num_complex::Complex as FftComplex, FftPlanner};
use std::f64::consts::PI;

/// First-kind Chebyshev nodes `t_k = cos((2k+1)π/(2n))`, `k = 0..n`.
///
/// These are the zeros of `T_n`; no endpoints are included, so weighted
/// basis functions with `1/w` endpoint blow-up stay finite on the grid.
pub fn nodes_first_kind(n: usize) -> Vec<f64> {
    (0..n).map(|k| ((2 * k + 1) as f64 * PI / (2.0 * n as f64)).cos()).collect()
}

/// Angles `θ_k = (2k+1)π/(2n)` matching [`nodes_first_kind`].
pub fn angles_first_kind(n: usize) -> Vec<f64> {
    (0..n).map(|k| (2 * k + 1) as f64 * PI / (2.0 * n as f64)).collect()
}

/// Second-kind Chebyshev nodes `t_k = cos(kπ/(n+1))`, `k = 1..=n` (zeros of `U_n`).
pub fn nodes_second_kind(n: usize) -> Vec<f64> {
    (1..=n).map(|k| (k as f64 * PI / (n + 1) as f64).cos()).collect()
}

/// Gauss–Chebyshev weights for the second-kind rule
/// `∫ f(t) w(t) dt ≈ Σ_k λ_k f(t_k)`, `λ_k = π sin²(kπ/(n+1))/(n+1)`.
pub fn weights_second_kind(n: usize) -> Vec<f64> {
    (1..=n)
        .map(|k| {
            let s = (k as f64 * PI / (n + 1) as f64).sin();
            PI * s * s / (n + 1) as f64
        })
        .collect()
}

/// Evaluate a classical T-series `Σ a_n T_n(t)` by Clenshaw recursion.
pub fn eval_t_series(coeffs: &[Complex64], t: f64) -> Complex64 {
    if coeffs.is_empty() {
        return Complex64::new(0.0, 0.0);
    }
    let mut b1 = Complex64::new(0.0, 0.0);
    let mut b2 = Complex64::new(0.0, 0.0);
    for &a in coeffs.iter().skip(1).rev() {
        let b0 = a + 2.0 * t * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    coeffs[0] + t * b1 - b2
}

/// Evaluate a classical U-series `Σ a_n U_n(t)` by Clenshaw recursion.
pub fn eval_u_series(coeffs: &[Complex64], t: f64) -> Complex64 {
    let mut b1 = Complex64::new(0.0, 0.0);
    let mut b2 = Complex64::new(0.0, 0.0);
    for &a in coeffs.iter().rev() {
        let b0 = a + 2.0 * t * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    b1
}

/// Coefficients of `d/dt Σ a_n T_n` expressed again as a T-series.
pub fn derivative_t_series(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len();
    if n <= 1 {
        return vec![];
    }
    let mut b = vec![Complex64::new(0.0, 0.0); n + 1];
    for k in (1..n).rev() {
        b[k - 1] = b[k + 1] + 2.0 * k as f64 * coeffs[k];
    }
    b[0] *= 0.5;
    b.truncate(n - 1);
    b
}

/// Coefficients of `d/dt Σ a_n T_n` as a U-series, via `T_n' = n U_{n-1}`.
pub fn derivative_t_to_u(coeffs: &[Complex64]) -> Vec<Complex64> {
    if coeffs.len() <= 1 {
        return vec![];
    }
    coeffs.iter().enumerate().skip(1).map(|(n, &a)| n as f64 * a).collect()
}

/// Convert a T-series to the equivalent U-series.
///
/// Uses `T_0 = U_0`, `T_1 = U_1/2`, `T_n = (U_n - U_{n-2})/2`.
pub fn t_series_to_u(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len();
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for (k, &a) in coeffs.iter().enumerate() {
        match k {
            0 => out[0] += a,
            _ => {
                out[k] += 0.5 * a;
                if k >= 2 {
                    out[k - 2] -= 0.5 * a;
                }
            }
        }
    }
    out
}

/// Convert a U-series to the equivalent T-series.
///
/// Uses `U_{2m} = T_0 + 2(T_2 + … + T_{2m})`, `U_{2m+1} = 2(T_1 + T_3 + … + T_{2m+1})`.
pub fn u_series_to_t(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len();
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    // Suffix sums over same-parity tail: T_j picks up 2·Σ_{k≥j, k≡j (2)} a_k
    // (with the T_0 weight halved).
    let mut even_tail = Complex64::new(0.0, 0.0);
    let mut odd_tail = Complex64::new(0.0, 0.0);
    for j in (0..n).rev() {
        if j % 2 == 0 {
            even_tail += coeffs[j];
            out[j] = 2.0 * even_tail;
        } else {
            odd_tail += coeffs[j];
            out[j] = 2.0 * odd_tail;
        }
    }
    if n > 0 {
        out[0] *= 0.5;
    }
    out
}

/// Product of two T-series via `T_a T_b = (T_{a+b} + T_{|a-b|})/2`.
pub fn t_series_product(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Complex64::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == Complex64::new(0.0, 0.0) {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            let p = 0.5 * ai * bj;
            out[i + j] += p;
            out[i.abs_diff(j)] += p;
        }
    }
    out
}

/// Classical Chebyshev analysis at the first-kind nodes.
///
/// Input: `values[m] = f(t_m)` on [`nodes_first_kind`]`(n)`. Output: `a_j`
/// with `f = Σ a_j T_j` exactly when `deg f ≤ n-1`.
pub fn analyze_first_kind(values: &[Complex64]) -> Vec<Complex64> {
    let n = values.len();
    assert!(n > 0, "empty sample vector");
    let u = dct2(values);
    let mut out = Vec::with_capacity(n);
    out.push(u[0] / n as f64);
    for j in 1..n {
        out.push(u[j] * (2.0 / n as f64));
    }
    out
}

/// Plain O(n²) analysis used as the oracle for the FFT path.
pub fn analyze_first_kind_naive(values: &[Complex64]) -> Vec<Complex64> {
    let n = values.len();
    let angles = angles_first_kind(n);
    (0..n)
        .map(|j| {
            let scale = if j == 0 { 1.0 / n as f64 } else { 2.0 / n as f64 };
            values
                .iter()
                .zip(&angles)
                .map(|(&v, &th)| v * (j as f64 * th).cos())
                .sum::<Complex64>()
                * scale
        })
        .collect()
}

/// DCT-II of a complex sequence: `u_j = Σ_m v_m cos(π j (2m+1) / (2n))`.
///
/// Computed through a length-2n FFT of the even extension `[v, rev v]`,
/// which stays valid for complex data (no conjugation involved).
pub fn dct2(values: &[Complex64]) -> Vec<Complex64> {
    let n = values.len();
    let mut buf: Vec<FftComplex<f64>> = Vec::with_capacity(2 * n);
    buf.extend(values.iter().map(|&z| FftComplex::new(z.re, z.im)));
    buf.extend(values.iter().rev().map(|&z| FftComplex::new(z.re, z.im)));
    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft_forward(2 * n);
    fft.process(&mut buf);
    (0..n)
        .map(|j| {
            let phase = Complex64::from_polar(0.5, -PI * j as f64 / (2.0 * n as f64));
            phase * Complex64::new(buf[j].re, buf[j].im)
        })
        .collect()
}

/// Classical U-analysis at the second-kind nodes.
///
/// Input: `values[k-1] = f(t_k)` on [`nodes_second_kind`]`(n)`. Output `a_j`
/// such that `f = Σ a_j U_j` exactly when `deg f ≤ n-1`, through
/// `a_j = (2/π) ∫ f U_j w dt` evaluated by the Gauss–Chebyshev U rule.
pub fn analyze_second_kind(values: &[Complex64]) -> Vec<Complex64> {
    let n = values.len();
    assert!(n > 0, "empty sample vector");
    // ∫ f U_j w ≈ (π/(n+1)) Σ_k sin θ_k sin((j+1)θ_k) f(t_k): a DST-I.
    let scaled: Vec<Complex64> = values
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let th = (i + 1) as f64 * PI / (n + 1) as f64;
            v * th.sin()
        })
        .collect();
    let dst = dst1(&scaled);
    dst.iter().map(|&s| s * (2.0 / (n + 1) as f64)).collect()
}

/// O(n²) oracle for [`analyze_second_kind`].
pub fn analyze_second_kind_naive(values: &[Complex64]) -> Vec<Complex64> {
    let n = values.len();
    (0..n)
        .map(|j| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (i, &v) in values.iter().enumerate() {
                let th = (i + 1) as f64 * PI / (n + 1) as f64;
                acc += v * th.sin() * ((j + 1) as f64 * th).sin();
            }
            acc * (2.0 / (n + 1) as f64)
        })
        .collect()
}

/// DST-I of a complex sequence: `s_j = Σ_{k=1}^{n} x_k sin(π (j+1) k / (n+1))`
/// with `x_k = values[k-1]`, `j = 0..n-1`.
pub fn dst1(values: &[Complex64]) -> Vec<Complex64> {
    let n = values.len();
    let len = 2 * (n + 1);
    let mut buf: Vec<FftComplex<f64>> = vec![FftComplex::new(0.0, 0.0); len];
    for (k, &v) in values.iter().enumerate() {
        buf[k + 1] = FftComplex::new(v.re, v.im);
        buf[len - 1 - k] = FftComplex::new(-v.re, -v.im);
    }
    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft_forward(len);
    fft.process(&mut buf);
    (0..n)
        .map(|j| {
            // F_{j+1} = -2i · s_j
            let f = Complex64::new(buf[j + 1].re, buf[j + 1].im);
            f * Complex64::new(0.0, 0.5)
        })
        .collect()
}

/// Divided difference `(p(t) - p(τ))/(t - τ)` of a T-series, stable across
/// the diagonal.
///
/// For well-separated arguments the secant form is used; near the diagonal
/// the midpoint Taylor form `p'(m) + p'''(m) h²/24 + p⁽⁵⁾(m) h⁴/1920` with
/// `m = (t+τ)/2`, `h = t-τ`.
pub fn divided_difference(coeffs: &[Complex64], derivs: &TSeriesDerivs, t: f64, tau: f64) -> Complex64 {
    let h = t - tau;
    if h.abs() > 1e-4 {
        (eval_t_series(coeffs, t) - eval_t_series(coeffs, tau)) / Complex64::new(h, 0.0)
    } else {
        let m = 0.5 * (t + tau);
        let h2 = h * h;
        eval_t_series(&derivs.d1, m)
            + eval_t_series(&derivs.d3, m) * (h2 / 24.0)
            + eval_t_series(&derivs.d5, m) * (h2 * h2 / 1920.0)
    }
}

/// Precomputed odd-order derivatives of a T-series, for [`divided_difference`].
#[derive(Debug, Clone)]
pub struct TSeriesDerivs {
    pub d1: Vec<Complex64>,
    pub d3: Vec<Complex64>,
    pub d5: Vec<Complex64>,
}

impl TSeriesDerivs {
    pub fn new(coeffs: &[Complex64]) -> Self {
        let d1 = derivative_t_series(coeffs);
        let d2 = derivative_t_series(&d1);
        let d3 = derivative_t_series(&d2);
        let d4 = derivative_t_series(&d3);
        let d5 = derivative_t_series(&d4);
        Self { d1, d3, d5 }
    }
}
