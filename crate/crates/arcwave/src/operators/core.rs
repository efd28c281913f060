//! Classical-coefficient Galerkin cores.
//!
//! Every block is assembled from a 2D Chebyshev expansion of its kernel on
//! a first-kind tensor grid plus exact moment identities; the logarithmic
//! factor is handled by the classical moments
//! `∫ log|t-τ| T_n(τ) w⁻¹(τ) dτ = -π log 2 (n = 0), -(π/n) T_n(t) (n ≥ 1)`.

use crate::cheb;
use crate::error::{Error, Result};
use crate::kernels::KernelValue;
use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Coefficients below `max·TAIL_TOL` are dropped during recoupling.
const TAIL_TOL: f64 = 1e-14;

/// 2D classical Chebyshev coefficients of the kernel entries:
/// one `P×P` matrix per component pair, `f_{ab}(t,τ) = Σ A[j,k] T_j(t) T_k(τ)`.
pub struct Kernel2d {
    pub comps: usize,
    pub coeff: Vec<DMatrix<Complex64>>, // index a*comps + b
}

/// Expand a kernel on the `p × p` first-kind tensor grid.
///
/// Errors if any sample is non-finite.
pub fn expand_kernel<F>(f: F, comps: usize, p: usize) -> Result<Kernel2d>
where
    F: Fn(f64, f64) -> Result<KernelValue> + Sync,
{
    let nodes = cheb::nodes_first_kind(p);
    // sample: values[a*comps+b][m][n]
    let rows: Vec<Vec<KernelValue>> = nodes
        .par_iter()
        .map(|&t| nodes.iter().map(|&tau| f(t, tau)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    for row in &rows {
        for v in row {
            for a in 0..comps {
                for b in 0..comps {
                    let e = v.entry(a, b);
                    if !e.re.is_finite() || !e.im.is_finite() {
                        return Err(Error::InvalidKernel("non-finite kernel sample".into()));
                    }
                }
            }
        }
    }
    let mut coeff = Vec::with_capacity(comps * comps);
    for a in 0..comps {
        for b in 0..comps {
            // transform along τ (rows of samples), then along t
            let mut half: Vec<Vec<Complex64>> = rows
                .par_iter()
                .map(|row| {
                    let vals: Vec<Complex64> = row.iter().map(|v| v.entry(a, b)).collect();
                    cheb::analyze_first_kind(&vals)
                })
                .collect();
            let mut out = DMatrix::from_element(p, p, ZERO);
            for k in 0..p {
                let col: Vec<Complex64> = (0..p).map(|m| half[m][k]).collect();
                let tr = cheb::analyze_first_kind(&col);
                for j in 0..p {
                    out[(j, k)] = tr[j];
                }
            }
            half.clear();
            coeff.push(out);
        }
    }
    Ok(Kernel2d { comps, coeff })
}

/// Smooth path: classical matrix of `u ↦ ∫ f(t,τ) u(τ) dτ` where the trial
/// measures are `T_n(τ) w⁻¹(τ) dτ`. Row `j`, column `n`:
/// `M[j,n] = A[j,n]·cπ_n` with `cπ_0 = π`, `cπ_n = π/2`.
pub fn core_smooth(a: &DMatrix<Complex64>, nrow: usize, ncol: usize) -> DMatrix<Complex64> {
    let p = a.nrows();
    let mut m = DMatrix::from_element(nrow, ncol, ZERO);
    for n in 0..ncol.min(p) {
        let cpi = if n == 0 { std::f64::consts::PI } else { std::f64::consts::PI / 2.0 };
        for j in 0..nrow.min(p) {
            m[(j, n)] = a[(j, n)] * cpi;
        }
    }
    m
}

/// Log path: classical matrix of `u ↦ ∫ log|t-τ| f(t,τ) u(τ) dτ`, same
/// trial measures, via product recoupling and the exact log moments.
pub fn core_log(a: &DMatrix<Complex64>, nrow: usize, ncol: usize) -> DMatrix<Complex64> {
    let p = a.nrows();
    let scale = a.iter().map(|z| z.norm()).fold(0.0f64, f64::max);
    let drop = scale * TAIL_TOL;
    let ln2 = std::f64::consts::LN_2;
    let pi = std::f64::consts::PI;

    let columns: Vec<Vec<Complex64>> = (0..ncol)
        .into_par_iter()
        .map(|n| {
            let mut out = vec![ZERO; nrow];
            let mut add = |idx: usize, v: Complex64| {
                if idx < nrow {
                    out[idx] += v;
                }
            };
            for k in 0..p {
                for j in 0..p {
                    let c = a[(j, k)];
                    if c.norm() <= drop {
                        continue;
                    }
                    // T_k(τ)T_n(τ) = ½(T_{k+n} + T_{|k-n|})
                    for &pp in &[k + n, k.abs_diff(n)] {
                        let w = c * 0.5;
                        if pp == 0 {
                            // λ_0(t) = -π log 2 (constant)
                            add(j, w * (-pi * ln2));
                        } else {
                            // λ_p(t) = -(π/p) T_p(t); T_j T_p = ½(T_{j+p} + T_{|j-p|})
                            let v = w * (-pi / pp as f64) * 0.5;
                            add(j + pp, v);
                            add(j.abs_diff(pp), v);
                        }
                    }
                }
            }
            out
        })
        .collect();

    let mut m = DMatrix::from_element(nrow, ncol, ZERO);
    for (n, col) in columns.iter().enumerate() {
        for (j, &v) in col.iter().enumerate() {
            m[(j, n)] = v;
        }
    }
    m
}

/// Multiply the 2D coefficients by `(t-τ)²` exactly:
/// `(t-τ)² = t² - 2tτ + τ²`, `t² = (T_0 + T_2)/2`.
pub fn absorb_t_minus_tau_sq(a: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let p = a.nrows();
    let q = p + 2;
    let mut out = DMatrix::from_element(q, q, ZERO);
    let mut add = |j: usize, k: usize, v: Complex64| {
        out[(j, k)] += v;
    };
    for j in 0..p {
        for k in 0..p {
            let c = a[(j, k)];
            if c == ZERO {
                continue;
            }
            // t² f: multiply along t by (T_0 + T_2)/2
            add(j, k, c * 0.5);
            add(j + 2, k, c * 0.25);
            add(j.abs_diff(2), k, c * 0.25);
            // τ² f
            add(j, k, c * 0.5);
            add(j, k + 2, c * 0.25);
            add(j, k.abs_diff(2), c * 0.25);
            // -2 t τ f: multiply both axes by T_1
            for &(jj, wj) in &[(j + 1, 0.5), (j.abs_diff(1), 0.5)] {
                for &(kk, wk) in &[(k + 1, 0.5), (k.abs_diff(1), 0.5)] {
                    add(jj, kk, c * (-2.0 * wj * wk));
                }
            }
        }
    }
    out
}
