//! Fundamental solutions and every kernel decomposition used by the
//! boundary integral operators: `(F1, F2)` splits, the self-interaction
//! `G^R / G^{S,1} / G^{S,2}` pieces, the direction matrix `D`, and the
//! Maue-formula kernels.

pub mod bessel;
mod elastic;
mod helmholtz;
mod split;

pub use elastic::{
    direction_matrix, elastic_dl_kernel, elastic_g1_g2, elastic_g2_split, elastic_green,
    elastic_series, elastic_split, hankel_diff_over_d, maue_kernels_elastic, rotation_a,
    ElasticParams, ElasticSeries,
};
pub use helmholtz::{
    helmholtz_dl_kernel, helmholtz_green, helmholtz_green_gradient, helmholtz_split,
    maue_tilde_helmholtz, point_distance_sq, HelmholtzParams,
};
pub use split::{helmholtz_series, KernelSplit, KernelValue, PowerSeries};

use crate::error::{Error, Result};
use crate::geometry::{q_function, OpenArc};
use nalgebra::Matrix2;
use num_complex::Complex64;

/// PDE selector carried by configurations and block systems.
#[derive(Debug, Clone, Copy, serde::Serialize, serde::Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PdeParams {
    Helmholtz { kappa: f64 },
    Elastic { alpha: f64, beta: f64, omega: f64 },
}

impl PdeParams {
    pub fn validate(&self) -> Result<()> {
        match *self {
            PdeParams::Helmholtz { kappa } => HelmholtzParams::new(kappa).map(|_| ()),
            PdeParams::Elastic { alpha, beta, omega } => {
                ElasticParams::new(alpha, beta, omega).map(|_| ())
            }
        }
    }

    pub fn components(&self) -> usize {
        match self {
            PdeParams::Helmholtz { .. } => 1,
            PdeParams::Elastic { .. } => 2,
        }
    }

    pub fn helmholtz(&self) -> Option<HelmholtzParams> {
        match *self {
            PdeParams::Helmholtz { kappa } => Some(HelmholtzParams { kappa }),
            _ => None,
        }
    }

    pub fn elastic(&self) -> Option<ElasticParams> {
        match *self {
            PdeParams::Elastic { alpha, beta, omega } => Some(ElasticParams { alpha, beta, omega }),
            _ => None,
        }
    }

    /// The split of the fundamental solution for this PDE.
    pub fn split(&self) -> KernelSplit {
        match self.validated_kind() {
            Kind::Helmholtz(h) => helmholtz_split(&h),
            Kind::Elastic(e) => elastic_split(&e),
        }
    }

    fn validated_kind(&self) -> Kind {
        match *self {
            PdeParams::Helmholtz { kappa } => Kind::Helmholtz(HelmholtzParams { kappa }),
            PdeParams::Elastic { alpha, beta, omega } => {
                Kind::Elastic(ElasticParams { alpha, beta, omega })
            }
        }
    }

    /// Scalar-kernel (Helmholtz) or matrix-kernel (elastic) fundamental
    /// solution between complexified points.
    pub fn green(&self, x: [Complex64; 2], y: [Complex64; 2]) -> Result<KernelValue> {
        match self.validated_kind() {
            Kind::Helmholtz(h) => Ok(KernelValue::Scalar(helmholtz_green(&h, x, y)?)),
            Kind::Elastic(e) => Ok(KernelValue::Matrix(elastic_green(&e, x, y)?)),
        }
    }
}

enum Kind {
    Helmholtz(HelmholtzParams),
    Elastic(ElasticParams),
}

/// Direction matrix `D_{r,p}(t,τ)` with entries
/// `(r_j(t)-p_j(τ))(r_k(t)-p_k(τ))/d²`; on the self-diagonal
/// `r'_j r'_k / (r'·r')`, continuous across it.
pub fn d_matrix_self(arc: &OpenArc, t: f64, tau: f64) -> Result<Matrix2<Complex64>> {
    let dd = arc.divided_difference(t, tau);
    let q = dd[0] * dd[0] + dd[1] * dd[1];
    if q.norm() < 1e-28 {
        return Err(Error::DegenerateGeometry(
            "vanishing averaged tangent in the direction matrix".into(),
        ));
    }
    Ok(Matrix2::new(dd[0] * dd[0], dd[0] * dd[1], dd[1] * dd[0], dd[1] * dd[1]) / q)
}

/// Cross-interaction direction matrix; errors when the arcs touch.
pub fn d_matrix_cross(r: &OpenArc, p: &OpenArc, t: f64, tau: f64) -> Result<Matrix2<Complex64>> {
    let a = r.eval(t)?;
    let b = p.eval(tau)?;
    let u = [a[0] - b[0], a[1] - b[1]];
    let d2 = u[0] * u[0] + u[1] * u[1];
    if d2.norm() < 1e-24 {
        return Err(Error::DegenerateGeometry("arcs touch: direction matrix undefined".into()));
    }
    direction_matrix(u)
}

/// The regular and Taylor-factor pieces of the self-interaction kernel:
///
/// `G_R(t,τ) = log(Q) F1(d²) + F2(d²)` (principal branch), and
/// `f_S2(t,τ) = (F1(d²) - F1(0))/(t-τ)²` evaluated through the entire
/// divided series times `Q`, so that
/// `G = G_R + 2 log|t-τ| F1(0) + 2 (t-τ)² log|t-τ| f_S2`.
pub fn kernel_self_split(
    arc: &OpenArc,
    split: &KernelSplit,
    t: f64,
    tau: f64,
) -> Result<(KernelValue, KernelValue)> {
    let q = q_function(arc, t, tau);
    if q.re <= 0.0 {
        return Err(Error::BranchCut(format!(
            "Re Q = {} ≤ 0 at (t,τ) = ({t},{tau}): geometry outside the admissible tube",
            q.re
        )));
    }
    let h = t - tau;
    let z = q * (h * h);
    let dmat;
    let dref = match split {
        KernelSplit::Scalar { .. } => None,
        KernelSplit::Matrix { .. } => {
            dmat = d_matrix_self(arc, t, tau)?;
            Some(&dmat)
        }
    };
    let g_r = split.f1(z, dref).scale(q.ln()).add(&split.f2(z, dref));
    let f_s2 = split.f1_divided(z, dref).scale(q);
    Ok((g_r, f_s2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::squared_distance;
    use std::f64::consts::PI;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn circular() -> OpenArc {
        OpenArc::from_functions(|t| (PI * t / 4.0).cos(), |t| (PI * t / 4.0).sin(), 24, 3, 1.0)
    }

    #[test]
    fn direction_matrix_examples() {
        let line = OpenArc::segment([-1.0, 0.0], [1.0, 0.0]);
        for &(t, tau) in &[(0.4, 0.4), (0.7, -0.3)] {
            let d = d_matrix_self(&line, t, tau).unwrap();
            assert!((d[(0, 0)] - c(1.0)).norm() < 1e-14);
            assert!(d[(0, 1)].norm() < 1e-14 && d[(1, 1)].norm() < 1e-14);
        }

        // trace ≡ 1 everywhere
        let arc = circular();
        for &(t, tau) in &[(0.3, 0.3), (0.5, -0.2), (0.9, 0.89)] {
            let d = d_matrix_self(&arc, t, tau).unwrap();
            assert!(((d[(0, 0)] + d[(1, 1)]) - c(1.0)).norm() < 1e-12);
        }

        // circular arc at t = τ = 0: tangent direction (0, 1)
        let d = d_matrix_self(&circular(), 0.0, 0.0).unwrap();
        assert!(d[(0, 0)].norm() < 1e-13 && d[(0, 1)].norm() < 1e-13);
        assert!((d[(1, 1)] - c(1.0)).norm() < 1e-13);

        let far = OpenArc::segment([5.0, 0.0], [6.0, 0.0]);
        assert!(d_matrix_cross(&OpenArc::segment([-1.0, 0.0], [1.0, 0.0]), &far, 0.2, 0.4).is_ok());
    }

    #[test]
    fn laplace_limit_self_split_has_zero_regular_part_on_a_line() {
        let line = OpenArc::segment([-1.0, 0.0], [1.0, 0.0]);
        let split = KernelSplit::laplace_limit();
        let (g_r, f_s2) = kernel_self_split(&line, &split, 0.3, -0.5).unwrap();
        match (g_r, f_s2) {
            (KernelValue::Scalar(gr), KernelValue::Scalar(fs)) => {
                assert!(gr.norm() < 1e-16, "Q ≡ 1 ⇒ log Q · F1 = 0 and F2 = 0");
                assert!(fs.norm() < 1e-16, "constant F1 ⇒ no Taylor factor");
            }
            _ => panic!(),
        }
    }

    #[test]
    fn self_split_reconstructs_helmholtz_kernel() {
        let params = HelmholtzParams::new(1.3).unwrap();
        let split = helmholtz_split(&params);
        let arc = circular();
        let mut state = 123u64;
        let mut rand = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 1.9 - 0.95
        };
        for _ in 0..100 {
            let t = rand();
            let mut tau = rand();
            if (t - tau).abs() < 1e-3 {
                tau = (tau + 0.5).clamp(-0.95, 0.95);
            }
            let (g_r, _) = kernel_self_split(&arc, &split, t, tau).unwrap();
            let z = squared_distance(&arc, &arc, t, tau);
            let g_s = match split.f1(z, None) {
                KernelValue::Scalar(f1) => 2.0 * (t - tau).abs().ln() * f1,
                _ => panic!(),
            };
            let direct =
                helmholtz_green(&params, arc.eval(t).unwrap(), arc.eval(tau).unwrap()).unwrap();
            let rec = g_r.entry(0, 0) + g_s;
            assert!(
                (rec - direct).norm() < 1e-11 * direct.norm().max(1.0),
                "t={t} τ={tau}: {rec} vs {direct}"
            );
        }
    }

    #[test]
    fn self_split_reconstructs_elastic_kernel() {
        let params = ElasticParams::new(2.0, 1.0, 1.0).unwrap();
        let split = elastic_split(&params);
        let arc = circular();
        for &(t, tau) in &[(0.3, -0.2), (0.8, 0.75), (-0.6, 0.1)] {
            let (g_r, _) = kernel_self_split(&arc, &split, t, tau).unwrap();
            let z = squared_distance(&arc, &arc, t, tau);
            let dmat = d_matrix_self(&arc, t, tau).unwrap();
            let g_s = match split.f1(z, Some(&dmat)) {
                KernelValue::Matrix(f1) => f1 * c(2.0 * (t - tau).abs().ln()),
                _ => panic!(),
            };
            let direct =
                elastic_green(&params, arc.eval(t).unwrap(), arc.eval(tau).unwrap()).unwrap();
            let rec = match g_r {
                KernelValue::Matrix(m) => m + g_s,
                _ => panic!(),
            };
            assert!((rec - direct).norm() < 1e-10 * direct.norm().max(1.0), "t={t} τ={tau}");
        }
    }

    #[test]
    fn taylor_factor_diagonal_value() {
        // f_S2(t,t) = F1'(0)·(r'·r'), checked against central differences of F1
        let params = HelmholtzParams::new(2.0).unwrap();
        let split = helmholtz_split(&params);
        let arc = circular();
        let t = 0.37;
        let (_, f_s2) = kernel_self_split(&arc, &split, t, t).unwrap();
        let h = 1e-5;
        let f1 = |z: Complex64| match split.f1(z, None) {
            KernelValue::Scalar(v) => v,
            _ => panic!(),
        };
        let f1p0 = (f1(c(h)) - f1(c(-h))) / (2.0 * h);
        let tg = arc.tangent(t).unwrap();
        let rr = tg[0] * tg[0] + tg[1] * tg[1];
        let want = f1p0 * rr;
        assert!((f_s2.entry(0, 0) - want).norm() < 1e-8, "{} vs {want}", f_s2.entry(0, 0));
    }

    #[test]
    fn entire_split_functions_pass_cauchy_reconstruction() {
        // F1, F2 (and the elastic series) reproduce interior values from
        // boundary samples of the disk |z| = 4: an analyticity surrogate.
        let hp = HelmholtzParams::new(1.0).unwrap();
        let (f1, f2) = helmholtz_series(hp.kappa);
        let ep = ElasticParams::new(2.0, 1.0, 1.0).unwrap();
        let es = elastic_series(&ep);
        let series: Vec<&PowerSeries> = vec![&f1, &f2, &es.j1, &es.j2, &es.r1, &es.r2];
        let radius = 4.0;
        let nq = 512;
        for s in series {
            for &(zr, zi) in &[(0.3, 0.1), (-1.2, 0.7), (2.0, -1.5)] {
                let z = Complex64::new(zr, zi);
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..nq {
                    let th = 2.0 * PI * k as f64 / nq as f64;
                    let zeta = Complex64::from_polar(radius, th);
                    // (1/2πi)∮ f(ζ)/(ζ-z) dζ, trapezoid on the circle
                    acc += s.eval(zeta) * zeta / (zeta - z);
                }
                let cauchy = acc / nq as f64;
                let direct = s.eval(z);
                assert!(
                    (cauchy - direct).norm() < 1e-9 * direct.norm().max(1.0),
                    "z = {z}: {cauchy} vs {direct}"
                );
            }
        }
    }

    #[test]
    fn helmholtz_green_solves_the_pde() {
        // 5-point finite-difference (−Δ−κ²)G at h = 1e-4, away from the source
        let params = HelmholtzParams::new(1.7).unwrap();
        let y = [Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)];
        let h = 1e-4;
        for &(px, py) in &[(0.8, 0.3), (1.5, -0.7), (0.2, 1.1)] {
            let g = |x: f64, yv: f64| {
                helmholtz_green(&params, [c(x), c(yv)], y).unwrap()
            };
            let center = g(px, py);
            let lap = (g(px + h, py) + g(px - h, py) + g(px, py + h) + g(px, py - h)
                - 4.0 * center)
                / (h * h);
            let residual = -lap - params.kappa * params.kappa * center;
            assert!(
                residual.norm() < 1e-4 * center.norm(),
                "({px},{py}): residual {residual}"
            );
        }
    }

    #[test]
    fn branch_cut_error_outside_tube() {
        // a wildly complexified arc pushes Re Q below zero
        let arc = OpenArc::new(
            vec![c(0.0), c(1.0)],
            vec![Complex64::new(0.0, 0.0), Complex64::new(0.0, 1.5)],
            3,
            1.0,
        );
        let split = KernelSplit::laplace_limit();
        let r = kernel_self_split(&arc, &split, 0.5, -0.5);
        assert!(matches!(r, Err(Error::BranchCut(_))), "{r:?}");
    }
}
