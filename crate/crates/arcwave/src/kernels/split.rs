//! Entire-function splits `G = F1(d²) log d² + F2(d²)` of the fundamental
//! solutions, built at series level so the log factor is removed exactly.

use super::bessel::EULER_GAMMA;
use crate::error::{Error, Result};
use nalgebra::Matrix2;
use num_complex::Complex64;
use std::f64::consts::PI;

const LEN: usize = 90;
const I: Complex64 = Complex64::new(0.0, 1.0);

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// A truncated power series in `z = d²` with complex coefficients.
#[derive(Debug, Clone)]
pub struct PowerSeries {
    pub coeffs: Vec<Complex64>,
}

impl PowerSeries {
    pub fn zero() -> Self {
        Self { coeffs: vec![] }
    }

    pub fn constant(v: Complex64) -> Self {
        Self { coeffs: vec![v] }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = c(0.0);
        for &a in self.coeffs.iter().rev() {
            acc = acc * z + a;
        }
        acc
    }

    pub fn at_zero(&self) -> Complex64 {
        self.coeffs.first().copied().unwrap_or_default()
    }

    /// `(f(z) - f(0))/z`, again entire.
    pub fn divided(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self { coeffs: self.coeffs[1..].to_vec() }
    }

    pub fn scaled(&self, s: Complex64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|&a| a * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![c(0.0); n];
        for (o, &a) in out.iter_mut().zip(&self.coeffs) {
            *o += a;
        }
        for (o, &a) in out.iter_mut().zip(&other.coeffs) {
            *o += a;
        }
        Self { coeffs: out }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scaled(c(-1.0)))
    }
}

/// `p0(z; k)` with `J₀(kd) = p0(d²)`: coefficients `(-1)^m (k²/4)^m / (m!)²`.
fn p0_series(k: f64) -> PowerSeries {
    let q = -k * k / 4.0;
    let mut coeffs = Vec::with_capacity(LEN);
    let mut term = 1.0;
    for m in 0..LEN {
        if m > 0 {
            term *= q / ((m * m) as f64);
        }
        coeffs.push(c(term));
    }
    PowerSeries { coeffs }
}

/// `p1(z; k)` with `k J₁(kd)/d = (k²/2) p1(d²)`:
/// coefficients `(-1)^m (k²/4)^m / (m!(m+1)!)`.
fn p1_series(k: f64) -> PowerSeries {
    let q = -k * k / 4.0;
    let mut coeffs = Vec::with_capacity(LEN);
    let mut term = 1.0;
    for m in 0..LEN {
        if m > 0 {
            term *= q / ((m * (m + 1)) as f64);
        }
        coeffs.push(c(term));
    }
    PowerSeries { coeffs }
}

/// Series part of `Y₀`: `Σ_{m≥1} (-1)^{m+1} h_m (k²/4)^m z^m/(m!)²`.
fn s0_series(k: f64) -> PowerSeries {
    let q = -k * k / 4.0;
    let mut coeffs = Vec::with_capacity(LEN);
    coeffs.push(c(0.0));
    let mut pow = 1.0;
    let mut h = 0.0;
    for m in 1..LEN {
        pow *= q / ((m * m) as f64);
        h += 1.0 / m as f64;
        coeffs.push(c(-pow * h));
    }
    PowerSeries { coeffs }
}

/// Series part of `Y₁`: `Σ_m (-1)^m (h_m + h_{m+1}) (k²/4)^m z^m/(m!(m+1)!)`.
fn s1_series(k: f64) -> PowerSeries {
    let q = -k * k / 4.0;
    let mut coeffs = Vec::with_capacity(LEN);
    let mut pow = 1.0;
    let mut h = 0.0;
    coeffs.push(c(1.0));
    for m in 1..LEN {
        pow *= q / ((m * (m + 1)) as f64);
        h += 1.0 / m as f64;
        coeffs.push(c(pow * (2.0 * h + 1.0 / (m + 1) as f64)));
    }
    PowerSeries { coeffs }
}

/// Split of the scalar kernel `(i/4)H₀⁽¹⁾(kd) = F1(z) log z + F2(z)`,
/// `z = d²`: `F1 = -(1/4π) p0`, `F2 = (i/4 - (ln(k/2)+γ)/(2π)) p0 - s0/(2π)`.
pub fn helmholtz_series(k: f64) -> (PowerSeries, PowerSeries) {
    let p0 = p0_series(k);
    let s0 = s0_series(k);
    let f1 = p0.scaled(c(-1.0 / (4.0 * PI)));
    let f2 = p0
        .scaled(I * 0.25 - c(((k / 2.0).ln() + EULER_GAMMA) / (2.0 * PI)))
        .add(&s0.scaled(c(-1.0 / (2.0 * PI))));
    (f1, f2)
}

/// Split of `(i/4)·k H₁⁽¹⁾(kd)/d = 1/(2πz) + B(z) log z + A(z)`.
///
/// The `1/(2πz)` pole is wavenumber-independent and cancels in every
/// k_s/k_p difference the elastic kernels take; only `(B, A)` is returned.
pub fn hankel1_over_d_series(k: f64) -> (PowerSeries, PowerSeries) {
    let p1 = p1_series(k);
    let s1 = s1_series(k);
    let k2 = k * k;
    let b = p1.scaled(c(-k2 / (8.0 * PI)));
    let a = p1
        .scaled(I * (k2 / 8.0) - c(k2 * ((k / 2.0).ln() + EULER_GAMMA) / (4.0 * PI)))
        .add(&s1.scaled(c(k2 / (8.0 * PI))));
    (b, a)
}

/// A kernel value: scalar for Helmholtz, 2×2 matrix for elasticity.
#[derive(Debug, Clone, Copy)]
pub enum KernelValue {
    Scalar(Complex64),
    Matrix(Matrix2<Complex64>),
}

impl KernelValue {
    pub fn components(&self) -> usize {
        match self {
            KernelValue::Scalar(_) => 1,
            KernelValue::Matrix(_) => 2,
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        match self {
            KernelValue::Scalar(v) => {
                debug_assert!(i == 0 && j == 0);
                *v
            }
            KernelValue::Matrix(m) => m[(i, j)],
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        match self {
            KernelValue::Scalar(v) => KernelValue::Scalar(v * s),
            KernelValue::Matrix(m) => KernelValue::Matrix(m * s),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (KernelValue::Scalar(a), KernelValue::Scalar(b)) => KernelValue::Scalar(a + b),
            (KernelValue::Matrix(a), KernelValue::Matrix(b)) => KernelValue::Matrix(a + b),
            _ => panic!("mismatched kernel value shapes"),
        }
    }
}

/// The pair of entire functions in `G = F1(d²) log d² + F2(d²)`,
/// scalar or matrix-valued (`F1 = J¹ I + J² D`, `F2 = R¹ I + R² D`).
#[derive(Debug, Clone)]
pub enum KernelSplit {
    Scalar {
        f1: PowerSeries,
        f2: PowerSeries,
        f1_dd: PowerSeries,
    },
    Matrix {
        j_iso: PowerSeries,
        j_dmat: PowerSeries,
        r_iso: PowerSeries,
        r_dmat: PowerSeries,
        j_iso_dd: PowerSeries,
        j_dmat_dd: PowerSeries,
    },
}

impl KernelSplit {
    pub fn scalar(f1: PowerSeries, f2: PowerSeries) -> Result<Self> {
        if f1.at_zero().norm() == 0.0 {
            return Err(Error::InvalidKernel("F1(0) must be nonzero".into()));
        }
        let f1_dd = f1.divided();
        Ok(KernelSplit::Scalar { f1, f2, f1_dd })
    }

    pub fn matrix(
        j_iso: PowerSeries,
        j_dmat: PowerSeries,
        r_iso: PowerSeries,
        r_dmat: PowerSeries,
    ) -> Result<Self> {
        if j_iso.at_zero().norm() == 0.0 {
            return Err(Error::InvalidKernel(
                "matrix F1(0) = J¹(0)·I must be invertible".into(),
            ));
        }
        if j_dmat.at_zero().norm() > 1e-14 * j_iso.at_zero().norm() {
            return Err(Error::InvalidKernel("J²(0) must vanish".into()));
        }
        let j_iso_dd = j_iso.divided();
        let j_dmat_dd = j_dmat.divided();
        Ok(KernelSplit::Matrix { j_iso, j_dmat, r_iso, r_dmat, j_iso_dd, j_dmat_dd })
    }

    /// The static-limit split `F1 ≡ -1/(4π)`, `F2 ≡ 0`
    /// (`G = -(1/4π) log d²`), used as the canonical test kernel.
    pub fn laplace_limit() -> Self {
        KernelSplit::Scalar {
            f1: PowerSeries::constant(c(-1.0 / (4.0 * PI))),
            f2: PowerSeries::zero(),
            f1_dd: PowerSeries::zero(),
        }
    }

    pub fn components(&self) -> usize {
        match self {
            KernelSplit::Scalar { .. } => 1,
            KernelSplit::Matrix { .. } => 2,
        }
    }

    /// `F1(z)`; matrix case needs the direction matrix `D(t,τ)`.
    pub fn f1(&self, z: Complex64, d: Option<&Matrix2<Complex64>>) -> KernelValue {
        match self {
            KernelSplit::Scalar { f1, .. } => KernelValue::Scalar(f1.eval(z)),
            KernelSplit::Matrix { j_iso, j_dmat, .. } => {
                let d = d.expect("matrix split needs a direction matrix");
                KernelValue::Matrix(
                    Matrix2::identity() * j_iso.eval(z) + d * j_dmat.eval(z),
                )
            }
        }
    }

    /// `F2(z)`.
    pub fn f2(&self, z: Complex64, d: Option<&Matrix2<Complex64>>) -> KernelValue {
        match self {
            KernelSplit::Scalar { f2, .. } => KernelValue::Scalar(f2.eval(z)),
            KernelSplit::Matrix { r_iso, r_dmat, .. } => {
                let d = d.expect("matrix split needs a direction matrix");
                KernelValue::Matrix(
                    Matrix2::identity() * r_iso.eval(z) + d * r_dmat.eval(z),
                )
            }
        }
    }

    /// `F1(0)`: scalar, or `J¹(0)·I` (since `J²(0) = 0`).
    pub fn f1_zero(&self) -> KernelValue {
        match self {
            KernelSplit::Scalar { f1, .. } => KernelValue::Scalar(f1.at_zero()),
            KernelSplit::Matrix { j_iso, .. } => {
                KernelValue::Matrix(Matrix2::identity() * j_iso.at_zero())
            }
        }
    }

    /// `(F1(z) - F1(0))/z`, entire across `z = 0`.
    pub fn f1_divided(&self, z: Complex64, d: Option<&Matrix2<Complex64>>) -> KernelValue {
        match self {
            KernelSplit::Scalar { f1_dd, .. } => KernelValue::Scalar(f1_dd.eval(z)),
            KernelSplit::Matrix { j_iso_dd, j_dmat_dd, .. } => {
                let d = d.expect("matrix split needs a direction matrix");
                KernelValue::Matrix(
                    Matrix2::identity() * j_iso_dd.eval(z) + d * j_dmat_dd.eval(z),
                )
            }
        }
    }

    /// Scalar `F1'(0)` (matrix case: isotropic part), for diagnostics.
    pub fn f1_prime_zero_iso(&self) -> Complex64 {
        match self {
            KernelSplit::Scalar { f1_dd, .. } => f1_dd.at_zero(),
            KernelSplit::Matrix { j_iso_dd, .. } => j_iso_dd.at_zero(),
        }
    }
}
