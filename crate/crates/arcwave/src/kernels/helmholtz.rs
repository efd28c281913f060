//! Helmholtz fundamental solution, its entire split and Maue kernel.

use super::bessel::{hankel1_0, hankel1_1};
use super::split::{helmholtz_series, KernelSplit};
use crate::error::{Error, Result};
use crate::geometry::OpenArc;
use num_complex::Complex64;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Parameters of `-Δ - κ²`.
#[derive(Debug, Clone, Copy, serde::Serialize, serde::Deserialize)]
pub struct HelmholtzParams {
    pub kappa: f64,
}

impl HelmholtzParams {
    pub fn new(kappa: f64) -> Result<Self> {
        if !(kappa > 0.0) {
            return Err(Error::InvalidArgument(format!("wavenumber must be positive, got {kappa}")));
        }
        Ok(Self { kappa })
    }
}

/// Bilinear squared distance of two complex points.
pub fn point_distance_sq(x: [Complex64; 2], y: [Complex64; 2]) -> Complex64 {
    let dx = x[0] - y[0];
    let dy = x[1] - y[1];
    dx * dx + dy * dy
}

/// `G_κ(x,y) = (i/4) H₀⁽¹⁾(κ‖x-y‖)`, accepting complexified points
/// (principal square root of the bilinear squared distance).
pub fn helmholtz_green(params: &HelmholtzParams, x: [Complex64; 2], y: [Complex64; 2]) -> Result<Complex64> {
    let d2 = point_distance_sq(x, y);
    if d2.norm() < 1e-28 {
        return Err(Error::Singularity("Helmholtz kernel evaluated at coincident points".into()));
    }
    let d = d2.sqrt();
    Ok(I * 0.25 * hankel1_0(params.kappa * d))
}

/// The entire split `G_κ = F1(d²) log d² + F2(d²)` with
/// `F1(z) = -(1/4π) j₀(κ² z)` (`J₀(ζ) = j₀(ζ²)`).
pub fn helmholtz_split(params: &HelmholtzParams) -> KernelSplit {
    let (f1, f2) = helmholtz_series(params.kappa);
    KernelSplit::scalar(f1, f2).expect("Helmholtz split always has F1(0) = -1/(4π)")
}

/// Maue remainder kernel for the hypersingular operator,
/// `G̃(t,τ) = κ² (r_i'(t)·r_j'(τ)) G(r_i(t), r_j(τ))`,
/// so that `W = d/dt ∘ V ∘ d/dτ + R_{G̃}` equals the conormal trace of the
/// double-layer potential. (The sign is fixed by that trace identity and
/// validated against a near-boundary traction limit.)
pub fn maue_tilde_helmholtz(
    params: &HelmholtzParams,
    arc_i: &OpenArc,
    arc_j: &OpenArc,
    t: f64,
    tau: f64,
) -> Result<Complex64> {
    let ti = arc_i.tangent(t)?;
    let tj = arc_j.tangent(tau)?;
    let dot = ti[0] * tj[0] + ti[1] * tj[1];
    let g = helmholtz_green(params, arc_i.eval(t)?, arc_j.eval(tau)?)?;
    Ok(params.kappa * params.kappa * dot * g)
}

/// Double-layer kernel `∂G/∂n_y (x, y) = (iκ/4) H₁(κd) ((x-y)·n_y)/d` for
/// real observation and source points.
pub fn helmholtz_dl_kernel(
    params: &HelmholtzParams,
    x: [f64; 2],
    y: [f64; 2],
    normal_y: [f64; 2],
) -> Result<Complex64> {
    let dx = x[0] - y[0];
    let dy = x[1] - y[1];
    let d = (dx * dx + dy * dy).sqrt();
    if d < 1e-14 {
        return Err(Error::Singularity("double-layer kernel at coincident points".into()));
    }
    let dir = (dx * normal_y[0] + dy * normal_y[1]) / d;
    Ok(I * 0.25 * params.kappa * hankel1_1(Complex64::new(params.kappa * d, 0.0)) * dir)
}

/// Gradient `∇_x G(x,y)` for real points.
pub fn helmholtz_green_gradient(
    params: &HelmholtzParams,
    x: [f64; 2],
    y: [f64; 2],
) -> Result<[Complex64; 2]> {
    let dx = x[0] - y[0];
    let dy = x[1] - y[1];
    let d = (dx * dx + dy * dy).sqrt();
    if d < 1e-14 {
        return Err(Error::Singularity("kernel gradient at coincident points".into()));
    }
    let k = params.kappa;
    let factor = -I * 0.25 * k * hankel1_1(Complex64::new(k * d, 0.0)) / d;
    Ok([factor * dx, factor * dy])
}
