//! Operator blocks: dense matrices between coefficient bases, plus the
//! exact basis adapters that wrap the classical Galerkin cores.

use crate::cheb;
use crate::error::{Error, Result};
use crate::spectral::{t_norm, u_norm, Basis, SpectralDensity};
use nalgebra::DMatrix;
use num_complex::Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Dirichlet or Neumann problem selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Problem {
    Dirichlet,
    Neumann,
}

impl Problem {
    /// Density basis of the unknowns.
    pub fn domain_basis(self) -> Basis {
        match self {
            Problem::Dirichlet => Basis::Tw,
            Problem::Neumann => Basis::Wu,
        }
    }

    /// Data basis of the right-hand side.
    pub fn range_basis(self) -> Basis {
        match self {
            Problem::Dirichlet => Basis::TPlain,
            Problem::Neumann => Basis::UPlain,
        }
    }

    /// Energy-scale diagnostic Sobolev order.
    pub fn energy_order(self) -> f64 {
        match self {
            Problem::Dirichlet => -0.5,
            Problem::Neumann => 0.5,
        }
    }
}

/// The smoothness condition gating the operator mapping bounds for a
/// triple `(m, α, s)`: either `s > -1/2` and `s + 5/2 < m + α`, or
/// `s ≤ -1/2` and `3/2 - s < m + α`.
pub fn condition_smh(m: u32, alpha: f64, s: f64) -> bool {
    let ma = m as f64 + alpha;
    if s > -0.5 {
        s + 2.5 < ma
    } else {
        1.5 - s < ma
    }
}

/// A dense complex operator block between coefficient spaces.
///
/// Elastic blocks hold 2×2 component sub-blocks in component-major layout:
/// the flat index of coefficient `k` of component `c` is `c·n + k`.
#[derive(Debug, Clone)]
pub struct OperatorBlock {
    pub matrix: DMatrix<Complex64>,
    pub domain_basis: Basis,
    pub range_basis: Basis,
    pub components: usize,
    pub arc_pair: (usize, usize),
}

impl OperatorBlock {
    pub fn n_coeffs(&self) -> usize {
        self.matrix.ncols() / self.components
    }

    pub fn is_finite(&self) -> bool {
        self.matrix.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Apply the block to a density in the domain basis.
    pub fn apply(&self, density: &SpectralDensity) -> Result<SpectralDensity> {
        if density.basis != self.domain_basis {
            return Err(Error::InvalidArgument(format!(
                "density basis {:?} does not match block domain {:?}",
                density.basis, self.domain_basis
            )));
        }
        if density.components() != self.components || density.len() != self.n_coeffs() {
            return Err(Error::InvalidArgument("density shape does not match block".into()));
        }
        let n = self.n_coeffs();
        let mut flat = nalgebra::DVector::from_element(self.components * n, ZERO);
        for (c, comp) in density.comps.iter().enumerate() {
            for (k, &v) in comp.iter().enumerate() {
                flat[c * n + k] = v;
            }
        }
        let out = &self.matrix * flat;
        let comps = (0..self.components)
            .map(|c| (0..n).map(|k| out[c * n + k]).collect())
            .collect();
        Ok(SpectralDensity { basis: self.range_basis, comps })
    }

    /// Place per-component scalar blocks into the component-major layout.
    pub fn from_component_blocks(
        blocks: &[DMatrix<Complex64>],
        comps: usize,
        domain_basis: Basis,
        range_basis: Basis,
    ) -> Self {
        let n = blocks[0].ncols();
        let mut matrix = DMatrix::from_element(comps * n, comps * n, ZERO);
        for a in 0..comps {
            for b in 0..comps {
                let blk = &blocks[a * comps + b];
                for i in 0..n {
                    for j in 0..n {
                        matrix[(a * n + i, b * n + j)] = blk[(i, j)];
                    }
                }
            }
        }
        Self { matrix, domain_basis, range_basis, components: comps, arc_pair: (0, 0) }
    }
}

/// Apply the domain adapter to a classical core matrix: columns become the
/// orthonormal trial functions of `domain`.
///
/// `Tw`: `T̄_n/w` trial = `t_norm(n)`·classical column `n`.
/// `Wu`: `w Ū_n` trial = `u_norm/2`·(column `n` - column `n+2`).
pub fn domain_adapt(core: &DMatrix<Complex64>, domain: Basis, ncols: usize) -> DMatrix<Complex64> {
    let nrow = core.nrows();
    let mut out = DMatrix::from_element(nrow, ncols, ZERO);
    match domain {
        Basis::Tw => {
            for n in 0..ncols {
                let s = t_norm(n);
                for j in 0..nrow {
                    out[(j, n)] = core[(j, n)] * s;
                }
            }
        }
        Basis::Wu => {
            let s = u_norm() * 0.5;
            for n in 0..ncols {
                for j in 0..nrow {
                    out[(j, n)] = (core[(j, n)] - core[(j, n + 2)]) * s;
                }
            }
        }
        _ => panic!("trial bases are the weighted ones"),
    }
    out
}

/// Convert rows (classical T output coefficients) into orthonormal range
/// coefficients: `TPlain` (W-scale) rescales, `UPlain` (Y-scale) converts
/// the T-series to a U-series first.
pub fn range_adapt(rows_t: &DMatrix<Complex64>, range: Basis, nrows: usize) -> DMatrix<Complex64> {
    let ncol = rows_t.ncols();
    let mut out = DMatrix::from_element(nrows, ncol, ZERO);
    match range {
        Basis::TPlain => {
            for m in 0..nrows {
                let s = 1.0 / t_norm(m);
                for n in 0..ncol {
                    out[(m, n)] = rows_t[(m, n)] * s;
                }
            }
        }
        Basis::UPlain => {
            let s = 1.0 / u_norm();
            for n in 0..ncol {
                let col: Vec<Complex64> = (0..rows_t.nrows()).map(|j| rows_t[(j, n)]).collect();
                let ucol = cheb::t_series_to_u(&col);
                for m in 0..nrows.min(ucol.len()) {
                    out[(m, n)] = ucol[m] * s;
                }
            }
        }
        _ => panic!("range bases are the plain ones"),
    }
    out
}

/// Orthonormal derivative matrix `d/dτ : Wu(n) → Tw(n+1)`,
/// `e_k ↦ -(k+1) e_{k+1}`.
pub fn derivative_in(n: usize) -> DMatrix<Complex64> {
    let mut d = DMatrix::from_element(n + 1, n, ZERO);
    for k in 0..n {
        d[(k + 1, k)] = Complex64::new(-((k + 1) as f64), 0.0);
    }
    d
}

/// Orthonormal derivative matrix `d/dt : TPlain(n+1) → UPlain(n)`,
/// `e_m ↦ m e_{m-1}`.
pub fn derivative_out(n: usize) -> DMatrix<Complex64> {
    let mut d = DMatrix::from_element(n, n + 1, ZERO);
    for m in 1..=n {
        d[(m - 1, m)] = Complex64::new(m as f64, 0.0);
    }
    d
}
