//! Sampling checks that the complexified kernel geometry stays usable
//! inside the explicit admissibility radii: `Re Q > 0`, `Re Q⁻¹ > 0` on the
//! self tube and `Re d² > 0` on the cross tube.

use super::admissibility::complexified_surrogate_norm;
use super::arc::{param_grid, q_function, squared_distance, OpenArc};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Outcome of a tube-positivity sampling run.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct TubePositivityReport {
    pub samples: usize,
    pub min_re_q: f64,
    pub min_re_q_inv: f64,
    pub min_re_d2_cross: Option<f64>,
    pub pass: bool,
}

/// Draw a complex perturbation of the arc with complexified surrogate norm
/// equal to `target`. Gaussian per-coefficient directions, then rescaled.
fn sample_perturbation(arc: &OpenArc, target: f64, rng: &mut ChaCha8Rng) -> OpenArc {
    let deg = arc.degree().max(6);
    let mut gauss = || {
        // Box-Muller
        let u1: f64 = rng.gen_range(1e-12..1.0);
        let u2: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        (-2.0 * u1.ln()).sqrt() * u2.cos()
    };
    let coeffs = |g: &mut dyn FnMut() -> f64| -> Vec<Complex64> {
        (0..=deg).map(|_| Complex64::new(g(), g())).collect()
    };
    let raw = OpenArc::new(coeffs(&mut gauss), coeffs(&mut gauss), arc.m, arc.alpha);
    let norm = complexified_surrogate_norm(&raw, 64);
    let scale = if norm > 0.0 { target / norm } else { 0.0 };
    OpenArc::new(
        raw.x_coeffs.iter().map(|z| z * scale).collect(),
        raw.y_coeffs.iter().map(|z| z * scale).collect(),
        arc.m,
        arc.alpha,
    )
}

/// Minimum of `Re Q` and `Re Q⁻¹` over a (t, τ) grid for `n_samples`
/// complex perturbations of `arc` with surrogate norm `< delta`.
pub fn tube_positivity_self(
    arc: &OpenArc,
    delta: f64,
    n_samples: usize,
    grid: usize,
    seed: u64,
) -> TubePositivityReport {
    let ts = param_grid(grid);
    let mins: Vec<(f64, f64)> = (0..n_samples)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (k as u64).wrapping_mul(0x9e37));
            let u: f64 = rng.gen_range(0.0..1.0);
            let pert = sample_perturbation(arc, delta * u, &mut rng);
            let sampled = arc.add_scaled(&pert, Complex64::new(1.0, 0.0));
            let mut min_q = f64::INFINITY;
            let mut min_qinv = f64::INFINITY;
            for &t in &ts {
                for &tau in &ts {
                    let q = q_function(&sampled, t, tau);
                    min_q = min_q.min(q.re);
                    min_qinv = min_qinv.min((1.0 / q).re);
                }
            }
            (min_q, min_qinv)
        })
        .collect();
    let min_re_q = mins.iter().map(|m| m.0).fold(f64::INFINITY, f64::min);
    let min_re_q_inv = mins.iter().map(|m| m.1).fold(f64::INFINITY, f64::min);
    TubePositivityReport {
        samples: n_samples,
        min_re_q,
        min_re_q_inv,
        min_re_d2_cross: None,
        pass: min_re_q > 0.0 && min_re_q_inv > 0.0,
    }
}

/// Minimum of `Re d²` between independently perturbed copies of two arcs.
pub fn tube_positivity_cross(
    arc1: &OpenArc,
    arc2: &OpenArc,
    delta1: f64,
    delta2: f64,
    n_samples: usize,
    grid: usize,
    seed: u64,
) -> TubePositivityReport {
    let ts = param_grid(grid);
    let mins: Vec<f64> = (0..n_samples)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (k as u64).wrapping_mul(0x85eb));
            let u1: f64 = rng.gen_range(0.0..1.0);
            let u2: f64 = rng.gen_range(0.0..1.0);
            let p1 = sample_perturbation(arc1, delta1 * u1, &mut rng);
            let p2 = sample_perturbation(arc2, delta2 * u2, &mut rng);
            let a = arc1.add_scaled(&p1, Complex64::new(1.0, 0.0));
            let b = arc2.add_scaled(&p2, Complex64::new(1.0, 0.0));
            let mut min_d2 = f64::INFINITY;
            for &t in &ts {
                for &tau in &ts {
                    min_d2 = min_d2.min(squared_distance(&a, &b, t, tau).re);
                }
            }
            min_d2
        })
        .collect();
    let min_re_d2 = mins.iter().copied().fold(f64::INFINITY, f64::min);
    TubePositivityReport {
        samples: n_samples,
        min_re_q: f64::INFINITY,
        min_re_q_inv: f64::INFINITY,
        min_re_d2_cross: Some(min_re_d2),
        pass: min_re_d2 > 0.0,
    }
}
