//! Open-arc parametrizations stored as Chebyshev coefficients.

use crate::cheb::{self, TSeriesDerivs};
use crate::error::{Error, Result};
use num_complex::Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Default resolution for grid-based inf/sup estimates.
pub const DEFAULT_GRID: usize = 512;

/// An open arc `r : [-1, 1] → ℂ²`, each coordinate a classical Chebyshev
/// T-series. Real scattering geometry has real coefficients; complexified
/// arcs appear in the holomorphy harness.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct OpenArc {
    pub x_coeffs: Vec<Complex64>,
    pub y_coeffs: Vec<Complex64>,
    /// Smoothness metadata (m, α) used by the admissibility machinery.
    pub m: u32,
    pub alpha: f64,
    #[serde(skip)]
    cache: Option<DerivCache>,
}

#[derive(Debug, Clone)]
struct DerivCache {
    x: TSeriesDerivs,
    y: TSeriesDerivs,
    dx: Vec<Complex64>,
    dy: Vec<Complex64>,
}

impl OpenArc {
    pub fn new(x_coeffs: Vec<Complex64>, y_coeffs: Vec<Complex64>, m: u32, alpha: f64) -> Self {
        let mut arc = Self { x_coeffs, y_coeffs, m, alpha, cache: None };
        arc.build_cache();
        arc
    }

    /// The straight segment from `a` to `b`.
    pub fn segment(a: [f64; 2], b: [f64; 2]) -> Self {
        let x = vec![
            Complex64::new(0.5 * (a[0] + b[0]), 0.0),
            Complex64::new(0.5 * (b[0] - a[0]), 0.0),
        ];
        let y = vec![
            Complex64::new(0.5 * (a[1] + b[1]), 0.0),
            Complex64::new(0.5 * (b[1] - a[1]), 0.0),
        ];
        Self::new(x, y, 3, 1.0)
    }

    /// Interpolate a smooth parametrization to machine precision.
    pub fn from_functions(
        fx: impl Fn(f64) -> f64,
        fy: impl Fn(f64) -> f64,
        degree: usize,
        m: u32,
        alpha: f64,
    ) -> Self {
        let nodes = cheb::nodes_first_kind(degree + 1);
        let vx: Vec<Complex64> = nodes.iter().map(|&t| Complex64::new(fx(t), 0.0)).collect();
        let vy: Vec<Complex64> = nodes.iter().map(|&t| Complex64::new(fy(t), 0.0)).collect();
        let strip = |v: Vec<Complex64>| -> Vec<Complex64> {
            v.into_iter().map(|z| Complex64::new(z.re, 0.0)).collect()
        };
        Self::new(
            strip(cheb::analyze_first_kind(&vx)),
            strip(cheb::analyze_first_kind(&vy)),
            m,
            alpha,
        )
    }

    fn build_cache(&mut self) {
        let dx = cheb::derivative_t_series(&self.x_coeffs);
        let dy = cheb::derivative_t_series(&self.y_coeffs);
        self.cache = Some(DerivCache {
            x: TSeriesDerivs::new(&self.x_coeffs),
            y: TSeriesDerivs::new(&self.y_coeffs),
            dx,
            dy,
        });
    }

    fn cache(&self) -> &DerivCache {
        self.cache.as_ref().expect("derivative cache built at construction")
    }

    /// Restore caches after deserialization.
    pub fn rebuild(&mut self) {
        self.build_cache();
    }

    pub fn degree(&self) -> usize {
        self.x_coeffs.len().max(self.y_coeffs.len()).saturating_sub(1)
    }

    pub fn is_real(&self) -> bool {
        let scale = self
            .x_coeffs
            .iter()
            .chain(&self.y_coeffs)
            .map(|c| c.norm())
            .fold(1.0f64, f64::max);
        self.x_coeffs
            .iter()
            .chain(&self.y_coeffs)
            .all(|c| c.im.abs() <= 1e-13 * scale)
    }

    fn check_param(t: f64) -> Result<()> {
        if !(-1.0..=1.0).contains(&t) {
            return Err(Error::InvalidArgument(format!("arc parameter {t} outside [-1, 1]")));
        }
        Ok(())
    }

    /// `r(t)`.
    pub fn eval(&self, t: f64) -> Result<[Complex64; 2]> {
        Self::check_param(t)?;
        Ok(self.eval_unchecked(t))
    }

    pub fn eval_unchecked(&self, t: f64) -> [Complex64; 2] {
        [cheb::eval_t_series(&self.x_coeffs, t), cheb::eval_t_series(&self.y_coeffs, t)]
    }

    /// `r'(t)`.
    pub fn tangent(&self, t: f64) -> Result<[Complex64; 2]> {
        Self::check_param(t)?;
        Ok(self.tangent_unchecked(t))
    }

    pub fn tangent_unchecked(&self, t: f64) -> [Complex64; 2] {
        let c = self.cache();
        [cheb::eval_t_series(&c.dx, t), cheb::eval_t_series(&c.dy, t)]
    }

    /// Unit normal `(r₂', -r₁')/‖r'‖` for real arcs.
    pub fn unit_normal(&self, t: f64) -> Result<[f64; 2]> {
        let tg = self.tangent(t)?;
        let (tx, ty) = (tg[0].re, tg[1].re);
        let norm = (tx * tx + ty * ty).sqrt();
        if norm == 0.0 {
            return Err(Error::DegenerateGeometry(format!("vanishing tangent at t = {t}")));
        }
        Ok([ty / norm, -tx / norm])
    }

    /// Divided difference `(r(t) - r(τ))/(t - τ)` per coordinate, continuous
    /// across the diagonal where it equals `r'(t)`.
    pub fn divided_difference(&self, t: f64, tau: f64) -> [Complex64; 2] {
        let c = self.cache();
        [
            cheb::divided_difference(&self.x_coeffs, &c.x, t, tau),
            cheb::divided_difference(&self.y_coeffs, &c.y, t, tau),
        ]
    }

    /// Grid invariants for real arcs: nonvanishing tangent and injectivity
    /// (positive secant slope) on the default grid.
    pub fn validate_real_geometry(&self, grid: usize) -> Result<()> {
        if !self.is_real() {
            return Err(Error::InvalidArgument(
                "geometry validation applies to real-valued arcs".into(),
            ));
        }
        let ts: Vec<f64> = param_grid(grid);
        let mut min_tangent = f64::INFINITY;
        let pts: Vec<[f64; 2]> = ts
            .iter()
            .map(|&t| {
                let tg = self.tangent_unchecked(t);
                min_tangent = min_tangent.min((tg[0].re.powi(2) + tg[1].re.powi(2)).sqrt());
                let v = self.eval_unchecked(t);
                [v[0].re, v[1].re]
            })
            .collect();
        if min_tangent <= 1e-10 {
            return Err(Error::DegenerateGeometry(format!(
                "tangent norm {min_tangent:.3e} on the validation grid"
            )));
        }
        let mut min_slope = f64::INFINITY;
        for i in 0..ts.len() {
            for j in (i + 1)..ts.len() {
                let d = ((pts[i][0] - pts[j][0]).powi(2) + (pts[i][1] - pts[j][1]).powi(2)).sqrt();
                min_slope = min_slope.min(d / (ts[j] - ts[i]).abs());
            }
        }
        if min_slope <= 1e-10 {
            return Err(Error::DegenerateGeometry(format!(
                "injectivity slope {min_slope:.3e} on the validation grid"
            )));
        }
        Ok(())
    }

    /// Pointwise sum `r + z·q` of this arc with a scaled perturbation.
    pub fn add_scaled(&self, other: &OpenArc, z: Complex64) -> OpenArc {
        let x = add_series(&self.x_coeffs, &other.x_coeffs, z);
        let y = add_series(&self.y_coeffs, &other.y_coeffs, z);
        OpenArc::new(x, y, self.m.min(other.m), self.alpha.min(other.alpha))
    }
}

fn add_series(a: &[Complex64], b: &[Complex64], z: Complex64) -> Vec<Complex64> {
    let mut out = vec![ZERO; a.len().max(b.len())];
    for (o, &v) in out.iter_mut().zip(a) {
        *o += v;
    }
    for (o, &v) in out.iter_mut().zip(b) {
        *o += z * v;
    }
    out
}

/// Uniform parameter grid strictly inside (-1, 1).
pub fn param_grid(n: usize) -> Vec<f64> {
    (0..n).map(|k| -1.0 + 2.0 * (k as f64 + 0.5) / n as f64).collect()
}

/// Uniform closed grid on [-1, 1] including both endpoints; an odd `n`
/// additionally hits the midpoint exactly.
pub fn closed_grid(n: usize) -> Vec<f64> {
    assert!(n >= 2);
    (0..n).map(|k| -1.0 + 2.0 * k as f64 / (n - 1) as f64).collect()
}

/// Bilinear squared distance
/// `d²(t,τ) = (r(t)-p(τ))·(r(t)-p(τ))` (no conjugation: the complexified
/// kernel machinery needs the holomorphic extension).
pub fn squared_distance(r: &OpenArc, p: &OpenArc, t: f64, tau: f64) -> Complex64 {
    let a = r.eval_unchecked(t);
    let b = p.eval_unchecked(tau);
    let dx = a[0] - b[0];
    let dy = a[1] - b[1];
    dx * dx + dy * dy
}

/// `Q(t,τ) = d²(t,τ)/(t-τ)²` with the removable singularity filled by the
/// averaged-tangent product `(∫₀¹ r'(t+η(τ-t)) dη)·(∫₀¹ r'(t+η(τ-t)) dη)`,
/// evaluated here in the equivalent divided-difference form.
pub fn q_function(r: &OpenArc, t: f64, tau: f64) -> Complex64 {
    let dd = r.divided_difference(t, tau);
    dd[0] * dd[0] + dd[1] * dd[1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn circular() -> OpenArc {
        OpenArc::from_functions(
            |t| (PI * t / 4.0).cos(),
            |t| (PI * t / 4.0).sin(),
            24,
            3,
            1.0,
        )
    }

    #[test]
    fn straight_arc_eval_and_tangent() {
        let arc = OpenArc::segment([-1.0, 0.0], [1.0, 0.0]);
        let v = arc.eval(0.5).unwrap();
        assert!((v[0].re - 0.5).abs() < 1e-15 && v[1].norm() < 1e-15);
        let tg = arc.tangent(-0.3).unwrap();
        assert!((tg[0].re - 1.0).abs() < 1e-15 && tg[1].norm() < 1e-15);
        assert!(arc.eval(1.2).is_err());
    }

    #[test]
    fn circular_arc_tangent_matches_symbolic_derivative() {
        let arc = circular();
        let tg = arc.tangent(0.0).unwrap();
        assert!(tg[0].norm() < 1e-13, "{:?}", tg);
        assert!((tg[1].re - PI / 4.0).abs() < 1e-13);
        for &t in &[-0.8, -0.1, 0.66] {
            let tg = arc.tangent(t).unwrap();
            let want = [-(PI / 4.0) * (PI * t / 4.0).sin(), (PI / 4.0) * (PI * t / 4.0).cos()];
            assert!((tg[0].re - want[0]).abs() < 1e-12);
            assert!((tg[1].re - want[1]).abs() < 1e-12);
        }
    }

    #[test]
    fn squared_distance_examples() {
        let line = OpenArc::segment([-1.0, 0.0], [1.0, 0.0]);
        let d2 = squared_distance(&line, &line, 0.2, -0.1);
        assert!((d2.re - 0.09).abs() < 1e-15 && d2.im == 0.0);

        let above = OpenArc::segment([-1.0, 1.0], [1.0, 1.0]);
        let d2 = squared_distance(&line, &above, 0.0, 0.0);
        assert!((d2.re - 1.0).abs() < 1e-15);

        // complexified bump iε(1-t²) vanishes at the endpoints
        let eps = 0.1;
        let bump = OpenArc::new(
            vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
            vec![
                Complex64::new(0.0, eps * 0.5),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, -eps * 0.5),
            ],
            3,
            1.0,
        ); // y = iε(1-t²)/... = iε(T_0 - T_2)/2
        let d2 = squared_distance(&bump, &bump, 1.0, -1.0);
        assert!((d2 - Complex64::new(4.0, 0.0)).norm() < 1e-14, "{d2}");
    }

    #[test]
    fn symmetry_of_squared_distance() {
        let a = circular();
        let b = OpenArc::segment([0.0, 2.0], [1.0, 3.0]);
        for &(t, tau) in &[(0.3, -0.5), (-0.9, 0.9), (0.0, 0.77)] {
            let ab = squared_distance(&a, &b, t, tau);
            let ba = squared_distance(&b, &a, tau, t);
            assert!((ab - ba).norm() == 0.0);
        }
    }

    #[test]
    fn q_function_examples() {
        let line = OpenArc::segment([-1.0, 0.0], [1.0, 0.0]);
        for &(t, tau) in &[(0.4, 0.4), (0.2, -0.6), (0.99, 0.98)] {
            let q = q_function(&line, t, tau);
            assert!((q.re - 1.0).abs() < 1e-13, "Q = {q}");
        }
        let double = OpenArc::segment([-2.0, 0.0], [2.0, 0.0]);
        assert!((q_function(&double, 0.1, -0.3).re - 4.0).abs() < 1e-13);

        let arc = circular();
        let q = q_function(&arc, 0.3, 0.3);
        assert!((q.re - (PI / 4.0).powi(2)).abs() < 1e-12, "diagonal Q = ‖r'‖²");
    }

    #[test]
    fn q_approaches_diagonal_linearly() {
        let arc = circular();
        let t = 0.21;
        let qd = q_function(&arc, t, t);
        for &eps in &[1e-3, 1e-6] {
            let q = q_function(&arc, t, t + eps);
            assert!((q - qd).norm() < 10.0 * eps, "offset {eps}: {}", (q - qd).norm());
        }
    }

    #[test]
    fn validation_flags_degenerate_arcs() {
        let good = circular();
        good.validate_real_geometry(128).unwrap();
        // r(t) = (t², 0) has r'(0) = 0 and is non-injective
        let bad = OpenArc::new(
            vec![
                Complex64::new(0.5, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.5, 0.0),
            ],
            vec![Complex64::new(0.0, 0.0)],
            3,
            1.0,
        );
        assert!(bad.validate_real_geometry(128).is_err());
    }

    #[test]
    fn serde_round_trip_matches_schema() {
        let arc = OpenArc::segment([0.0, 0.0], [1.0, 2.0]);
        let json = serde_json::to_string(&arc).unwrap();
        assert!(json.contains("\"x_coeffs\":[[0.5,0.0],[0.5,0.0]]"), "{json}");
        let mut back: OpenArc = serde_json::from_str(&json).unwrap();
        back.rebuild();
        let v = back.eval(0.25).unwrap();
        let want = arc.eval(0.25).unwrap();
        assert!((v[0] - want[0]).norm() < 1e-15 && (v[1] - want[1]).norm() < 1e-15);
    }
}
