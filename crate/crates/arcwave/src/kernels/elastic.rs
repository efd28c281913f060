//! Time-harmonic elastic (Navier) fundamental solution, its entire split,
//! and the four kernels of the hypersingular Maue representation.

use super::bessel::{hankel1_0, hankel1_1};
use super::split::{hankel1_over_d_series, helmholtz_series, KernelSplit, PowerSeries};
use crate::error::{Error, Result};
use crate::geometry::OpenArc;
use nalgebra::Matrix2;
use num_complex::Complex64;

const I: Complex64 = Complex64::new(0.0, 1.0);

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Parameters of `αΔ + (α+β)∇∇· + ω²` with Lamé pair `(α, β)`; `β` plays
/// the shear modulus (it scales `H₀(k_s d) I` in the fundamental solution),
/// `k_p² = ω²/(α+2β)`, `k_s² = ω²/β`.
#[derive(Debug, Clone, Copy, serde::Serialize, serde::Deserialize)]
pub struct ElasticParams {
    pub alpha: f64,
    pub beta: f64,
    pub omega: f64,
}

impl ElasticParams {
    pub fn new(alpha: f64, beta: f64, omega: f64) -> Result<Self> {
        if !(alpha > 0.0) || !(alpha + beta > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "Lamé parameters need α > 0 and α + β > 0, got ({alpha}, {beta})"
            )));
        }
        if !(beta > 0.0) || !(alpha + 2.0 * beta > 0.0) {
            return Err(Error::InvalidArgument(
                "both wavenumbers must be real: β > 0 and α + 2β > 0 required".into(),
            ));
        }
        if !(omega > 0.0) {
            return Err(Error::InvalidArgument(format!("frequency must be positive, got {omega}")));
        }
        Ok(Self { alpha, beta, omega })
    }

    pub fn k_p(&self) -> f64 {
        self.omega / (self.alpha + 2.0 * self.beta).sqrt()
    }

    pub fn k_s(&self) -> f64 {
        self.omega / self.beta.sqrt()
    }
}

/// `D(u) = u uᵀ / (u·u)` (bilinear products; trace ≡ 1).
pub fn direction_matrix(u: [Complex64; 2]) -> Result<Matrix2<Complex64>> {
    let d2 = u[0] * u[0] + u[1] * u[1];
    if d2.norm() < 1e-28 {
        return Err(Error::Singularity("direction matrix at coincident points".into()));
    }
    Ok(Matrix2::new(u[0] * u[0], u[0] * u[1], u[1] * u[0], u[1] * u[1]) / d2)
}

/// The entire split series of the elastic fundamental solution:
/// `G = (log d²)(J¹ I + J² D) + (R¹ I + R² D)`.
pub struct ElasticSeries {
    pub j1: PowerSeries,
    pub j2: PowerSeries,
    pub r1: PowerSeries,
    pub r2: PowerSeries,
    /// `ΔB, ΔA` of `(i/4)(k_s H₁(k_s d) - k_p H₁(k_p d))/d = ΔB log z + ΔA`.
    pub db: PowerSeries,
    pub da: PowerSeries,
    /// Helmholtz-type splits of `(i/4)H₀(k_s d)` and `(i/4)H₀(k_p d)`.
    pub f1_ks: PowerSeries,
    pub f2_ks: PowerSeries,
    pub f1_kp: PowerSeries,
    pub f2_kp: PowerSeries,
}

pub fn elastic_series(params: &ElasticParams) -> ElasticSeries {
    let (ks, kp) = (params.k_s(), params.k_p());
    let (om2, beta) = (params.omega * params.omega, params.beta);
    let (f1_ks, f2_ks) = helmholtz_series(ks);
    let (f1_kp, f2_kp) = helmholtz_series(kp);
    let (b_s, a_s) = hankel1_over_d_series(ks);
    let (b_p, a_p) = hankel1_over_d_series(kp);
    let db = b_s.sub(&b_p);
    let da = a_s.sub(&a_p);

    // G¹ = (i/4β)H₀(k_s d) - (1/ω²)[(i/4)k_s H₁(k_s d)/d - (i/4)k_p H₁(k_p d)/d]
    let j1 = f1_ks.scaled(c(1.0 / beta)).sub(&db.scaled(c(1.0 / om2)));
    let r1 = f2_ks.scaled(c(1.0 / beta)).sub(&da.scaled(c(1.0 / om2)));
    // G² = (2/ω²)[…H₁ difference…] + (1/ω²)[k_p²(i/4)H₀(k_p d) - k_s²(i/4)H₀(k_s d)]
    let j2 = db
        .scaled(c(2.0 / om2))
        .add(&f1_kp.scaled(c(kp * kp / om2)))
        .sub(&f1_ks.scaled(c(ks * ks / om2)));
    let r2 = da
        .scaled(c(2.0 / om2))
        .add(&f2_kp.scaled(c(kp * kp / om2)))
        .sub(&f2_ks.scaled(c(ks * ks / om2)));

    ElasticSeries { j1, j2, r1, r2, db, da, f1_ks, f2_ks, f1_kp, f2_kp }
}

/// The matrix kernel split of the elastic fundamental solution.
pub fn elastic_split(params: &ElasticParams) -> KernelSplit {
    let s = elastic_series(params);
    KernelSplit::matrix(s.j1, s.j2, s.r1, s.r2)
        .expect("elastic split has J¹(0) ≠ 0 and J²(0) = 0 for admissible parameters")
}

/// Split of the second Maue kernel
/// `G₂ = 4β² A G A + iβ H₀(k_s d) I`; using `A D A = D - I` this is again
/// of the canonical `(iso, D)` form.
pub fn elastic_g2_split(params: &ElasticParams) -> KernelSplit {
    let s = elastic_series(params);
    let b2 = 4.0 * params.beta * params.beta;
    let j_iso = s
        .j1
        .add(&s.j2)
        .scaled(c(-b2))
        .add(&s.f1_ks.scaled(c(4.0 * params.beta)));
    let r_iso = s
        .r1
        .add(&s.r2)
        .scaled(c(-b2))
        .add(&s.f2_ks.scaled(c(4.0 * params.beta)));
    let j_dmat = s.j2.scaled(c(b2));
    let r_dmat = s.r2.scaled(c(b2));
    KernelSplit::matrix(j_iso, j_dmat, r_iso, r_dmat)
        .expect("G₂ split inherits J²-vanishing and invertible diagonal from G")
}

/// Scalar `G¹, G²` of `G = G¹ I + G² D`, series route for small `k_s d`
/// (where the 1/d cancellations would otherwise lose digits), Hankel
/// displays beyond.
pub fn elastic_g1_g2(params: &ElasticParams, d2: Complex64) -> Result<(Complex64, Complex64)> {
    if d2.norm() < 1e-28 {
        return Err(Error::Singularity("elastic kernel at coincident points".into()));
    }
    let d = d2.sqrt();
    let (ks, kp) = (params.k_s(), params.k_p());
    if (ks * d.norm()).max(kp * d.norm()) > 0.5 {
        let (om2, beta) = (params.omega * params.omega, params.beta);
        let h0s = hankel1_0(ks * d);
        let h0p = hankel1_0(kp * d);
        let h1s = hankel1_1(ks * d);
        let h1p = hankel1_1(kp * d);
        let g1 = I * 0.25 / beta * h0s - I * 0.25 / om2 * (ks * h1s - kp * h1p) / d;
        let g2 = I * 0.25 / om2
            * ((2.0 * ks * h1s - 2.0 * kp * h1p) / d + kp * kp * h0p - ks * ks * h0s);
        Ok((g1, g2))
    } else {
        let s = elastic_series(params);
        let lg = d2.ln();
        Ok((s.r1.eval(d2) + lg * s.j1.eval(d2), s.r2.eval(d2) + lg * s.j2.eval(d2)))
    }
}

/// `G(x,y) = G¹(d) I + G²(d) D(x-y)`, complexified points allowed.
pub fn elastic_green(
    params: &ElasticParams,
    x: [Complex64; 2],
    y: [Complex64; 2],
) -> Result<Matrix2<Complex64>> {
    let u = [x[0] - y[0], x[1] - y[1]];
    let d2 = u[0] * u[0] + u[1] * u[1];
    let (g1, g2) = elastic_g1_g2(params, d2)?;
    let d = direction_matrix(u)?;
    Ok(Matrix2::identity() * g1 + d * g2)
}

/// `(i/4)(k_s H₁(k_s d) - k_p H₁(k_p d))/d`, the scalar prefactor of the
/// regular Maue kernels; series route near zero, display beyond.
pub fn hankel_diff_over_d(params: &ElasticParams, d2: Complex64) -> Result<Complex64> {
    if d2.norm() < 1e-28 {
        return Err(Error::Singularity("Maue prefactor at coincident points".into()));
    }
    let d = d2.sqrt();
    let (ks, kp) = (params.k_s(), params.k_p());
    if (ks * d.norm()).max(kp * d.norm()) > 0.5 {
        Ok(I * 0.25 * (ks * hankel1_1(ks * d) - kp * hankel1_1(kp * d)) / d)
    } else {
        let s = elastic_series(params);
        Ok(s.db.eval(d2) * d2.ln() + s.da.eval(d2))
    }
}

fn perp(v: [Complex64; 2]) -> [Complex64; 2] {
    [v[1], -v[0]]
}

fn dyad(a: [Complex64; 2], b: [Complex64; 2]) -> Matrix2<Complex64> {
    Matrix2::new(a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
}

/// The rotation `A = [[0,-1],[1,0]]` of the second Maue kernel.
pub fn rotation_a() -> Matrix2<Complex64> {
    Matrix2::new(c(0.0), c(-1.0), c(1.0), c(0.0))
}

/// The four kernels of the elastic hypersingular representation
/// `W u = R_{G₁} u + d/dt V_{G₂} du/dτ + R_{G₃} du/dτ + d/dt R_{G₄} u`.
pub fn maue_kernels_elastic(
    params: &ElasticParams,
    arc_i: &OpenArc,
    arc_j: &OpenArc,
    t: f64,
    tau: f64,
) -> Result<(Matrix2<Complex64>, Matrix2<Complex64>, Matrix2<Complex64>, Matrix2<Complex64>)> {
    let xi = arc_i.eval(t)?;
    let xj = arc_j.eval(tau)?;
    let ti = arc_i.tangent(t)?;
    let tj = arc_j.tangent(tau)?;
    let u = [xi[0] - xj[0], xi[1] - xj[1]];
    let d2 = u[0] * u[0] + u[1] * u[1];
    if d2.norm() < 1e-28 {
        return Err(Error::Singularity("Maue kernels on the diagonal".into()));
    }
    let d = d2.sqrt();
    let (ks, kp) = (params.k_s(), params.k_p());
    let (om2, beta) = (params.omega * params.omega, params.beta);

    let h0s = I * 0.25 * hankel1_0(ks * d);
    let h0p = I * 0.25 * hankel1_0(kp * d);
    let p_dyad = dyad(perp(ti), perp(tj)); // r_i'^⊥(t) r_j'^⊥(τ)ᵀ
    let tdot = ti[0] * tj[0] + ti[1] * tj[1];
    let m_s = (p_dyad - Matrix2::identity() * tdot) * c(om2)
        - (p_dyad.transpose() - p_dyad) * c(beta * ks * ks);
    let m_p = p_dyad * c(-om2);
    let g1 = m_s * h0s + m_p * h0p;

    let g = elastic_green(params, xi, xj)?;
    let a = rotation_a();
    let g2 = a * g * a * c(4.0 * beta * beta) + Matrix2::identity() * (I * beta * hankel1_0(ks * d));

    // (iβ/2)·(k_s H₁(k_s d) - k_p H₁(k_p d))/d = 2β · hankel_diff_over_d
    let pref = hankel_diff_over_d(params, d2)? * c(2.0 * beta);
    let g3 = dyad(perp(ti), u) * a * pref;
    let g4 = dyad(u, perp(tj)) * pref;

    Ok((g1, g2, g3, g4))
}

/// Traction `B_n v = α n (div v) + 2β ∂_n v + β n^⊥ (∂₁v₂ - ∂₂v₁)` of the
/// columns of `y ↦ G(x, y)`, transposed: the double-layer kernel.
pub fn elastic_dl_kernel(
    params: &ElasticParams,
    x: [f64; 2],
    y: [f64; 2],
    normal_y: [f64; 2],
) -> Result<Matrix2<Complex64>> {
    let u = [x[0] - y[0], x[1] - y[1]];
    let d = (u[0] * u[0] + u[1] * u[1]).sqrt();
    if d < 1e-14 {
        return Err(Error::Singularity("double-layer kernel at coincident points".into()));
    }
    let (ks, kp) = (params.k_s(), params.k_p());
    let (om2, alpha, beta) = (params.omega * params.omega, params.alpha, params.beta);

    let h0s = hankel1_0(c(ks * d));
    let h0p = hankel1_0(c(kp * d));
    let h1s = hankel1_1(c(ks * d));
    let h1p = hankel1_1(c(kp * d));
    let g2 = I * 0.25 / om2 * (2.0 * (ks * h1s - kp * h1p) / d + kp * kp * h0p - ks * ks * h0s);
    let dphi_s = ks * ks * h0s / d - 2.0 * ks * h1s / (d * d);
    let dphi_p = kp * kp * h0p / d - 2.0 * kp * h1p / (d * d);
    let g1p = -I * 0.25 / beta * ks * h1s - I * 0.25 / om2 * (dphi_s - dphi_p);
    let g2p = I * 0.25 / om2 * (2.0 * (dphi_s - dphi_p) - kp * kp * kp * h1p + ks * ks * ks * h1s);

    // ∂_{u_k} G_{ic} for the column c: gradients in u = x - y; flip sign for ∂_y
    let d2 = d * d;
    let grad = |i: usize, k: usize, cc: usize| -> Complex64 {
        let del = |a: usize, b: usize| if a == b { 1.0 } else { 0.0 };
        g1p * (u[k] / d) * del(i, cc)
            + g2p * (u[k] / d) * (u[i] * u[cc] / d2)
            + g2 * ((del(i, k) * u[cc] + del(cc, k) * u[i]) / d2
                - 2.0 * u[i] * u[cc] * u[k] / (d2 * d2))
    };

    let n = normal_y;
    let mut traction = Matrix2::zeros();
    for col in 0..2 {
        // ∂_{y_k} V_i = -grad(i, k, col)
        let dv = |i: usize, k: usize| -grad(i, k, col);
        let div = dv(0, 0) + dv(1, 1);
        let curl = dv(1, 0) - dv(0, 1); // ∂₁v₂ - ∂₂v₁
        for i in 0..2 {
            let n_perp_i = if i == 0 { n[1] } else { -n[0] };
            let dn = n[0] * dv(i, 0) + n[1] * dv(i, 1);
            traction[(i, col)] =
                c(alpha) * n[i] * div + c(2.0 * beta) * dn + c(beta) * n_perp_i * curl;
        }
    }
    Ok(traction.transpose())
}
