//! Explicit admissibility radii for complexified arc geometry and the
//! affine-parametric family checks behind them.

use super::arc::{closed_grid, OpenArc, DEFAULT_GRID};
use crate::cheb;
use crate::error::{Error, Result};
use num_complex::Complex64;

/// `δ = √(𝓘_Q² + 𝓢_Q²) - 𝓢_Q` with `𝓘_Q, 𝓢_Q` the grid inf/sup of `‖r'‖`
/// over the sample set. The self-interaction kernel split stays holomorphic
/// for complex perturbations strictly inside this radius.
pub fn delta_self(arcs: &[OpenArc]) -> Result<f64> {
    delta_self_grid(arcs, DEFAULT_GRID)
}

pub fn delta_self_grid(arcs: &[OpenArc], grid: usize) -> Result<f64> {
    if arcs.is_empty() {
        return Err(Error::InvalidArgument("delta_self: empty arc set".into()));
    }
    let ts = closed_grid(grid | 1);
    let mut inf = f64::INFINITY;
    let mut sup: f64 = 0.0;
    for arc in arcs {
        if !arc.is_real() {
            return Err(Error::InvalidArgument("delta_self expects real arcs".into()));
        }
        for &t in &ts {
            let tg = arc.tangent_unchecked(t);
            let n = (tg[0].re * tg[0].re + tg[1].re * tg[1].re).sqrt();
            inf = inf.min(n);
            sup = sup.max(n);
        }
    }
    if inf <= 1e-12 {
        return Err(Error::DegenerateGeometry(format!(
            "vanishing tangent (inf ‖r'‖ = {inf:.3e})"
        )));
    }
    Ok((inf * inf + sup * sup).sqrt() - sup)
}

/// `δ₁ = δ₂ = (√(𝓘_d² + 𝓢_d²) - 𝓢_d)/2` with `𝓘_d` the grid inf of the
/// cross-arc distance and `𝓢_d` the sum of the two sup norms. The cross
/// kernel stays holomorphic while both perturbations stay inside.
pub fn delta_cross(k1: &[OpenArc], k2: &[OpenArc]) -> Result<(f64, f64)> {
    delta_cross_grid(k1, k2, DEFAULT_GRID)
}

pub fn delta_cross_grid(k1: &[OpenArc], k2: &[OpenArc], grid: usize) -> Result<(f64, f64)> {
    if k1.is_empty() || k2.is_empty() {
        return Err(Error::InvalidArgument("delta_cross: empty arc set".into()));
    }
    let ts = closed_grid(grid | 1);
    let values = |set: &[OpenArc]| -> Vec<Vec<[f64; 2]>> {
        set.iter()
            .map(|a| {
                ts.iter()
                    .map(|&t| {
                        let v = a.eval_unchecked(t);
                        [v[0].re, v[1].re]
                    })
                    .collect()
            })
            .collect()
    };
    let v1 = values(k1);
    let v2 = values(k2);
    let sup_norm = |vals: &Vec<Vec<[f64; 2]>>| {
        vals.iter()
            .flatten()
            .map(|p| (p[0] * p[0] + p[1] * p[1]).sqrt())
            .fold(0.0f64, f64::max)
    };
    let mut inf_d = f64::INFINITY;
    for a in &v1 {
        for b in &v2 {
            for p in a {
                for q in b {
                    let d = ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt();
                    inf_d = inf_d.min(d);
                }
            }
        }
    }
    if inf_d < 1e-12 {
        return Err(Error::DegenerateGeometry(format!(
            "arcs touch (grid separation {inf_d:.3e})"
        )));
    }
    let sup_d = sup_norm(&v1) + sup_norm(&v2);
    let delta = 0.5 * ((inf_d * inf_d + sup_d * sup_d).sqrt() - sup_d);
    Ok((delta, delta))
}

/// Grid surrogate for the `C^{m,α}` norm of a (possibly complex) coordinate
/// pair: sup norms of derivatives up to order m plus a Hölder quotient of
/// the m-th derivative sampled at dyadic scale pairs.
pub fn holder_surrogate_norm(arc: &OpenArc, grid: usize) -> f64 {
    let m = arc.m.min(6) as usize;
    let ts = closed_grid(grid | 1);
    let mut dx = arc.x_coeffs.clone();
    let mut dy = arc.y_coeffs.clone();
    let mut total = 0.0;
    let mut last: Vec<[Complex64; 2]> = Vec::new();
    for order in 0..=m {
        if order > 0 {
            dx = cheb::derivative_t_series(&dx);
            dy = cheb::derivative_t_series(&dy);
        }
        let vals: Vec<[Complex64; 2]> = ts
            .iter()
            .map(|&t| [cheb::eval_t_series(&dx, t), cheb::eval_t_series(&dy, t)])
            .collect();
        total += vals
            .iter()
            .map(|v| (v[0].norm_sqr() + v[1].norm_sqr()).sqrt())
            .fold(0.0f64, f64::max);
        if order == m {
            last = vals;
        }
    }
    if arc.alpha > 0.0 {
        let mut quot: f64 = 0.0;
        let mut step = 1usize;
        while step < ts.len() {
            for i in 0..ts.len() - step {
                let j = i + step;
                let num = ((last[i][0] - last[j][0]).norm_sqr()
                    + (last[i][1] - last[j][1]).norm_sqr())
                .sqrt();
                quot = quot.max(num / (ts[j] - ts[i]).abs().powf(arc.alpha));
            }
            step *= 2;
        }
        total += quot;
    }
    total
}

/// Norm of the complexification `b + i d` of a real pair:
/// `sup_θ ‖b cos θ + d sin θ‖`, approximated over a θ grid of the
/// surrogate norms.
pub fn complexified_surrogate_norm(arc: &OpenArc, grid: usize) -> f64 {
    let mut best: f64 = 0.0;
    let n_theta = 16;
    for k in 0..n_theta {
        let th = std::f64::consts::PI * k as f64 / n_theta as f64;
        let (c, s) = (th.cos(), th.sin());
        let combo = OpenArc::new(
            arc.x_coeffs.iter().map(|z| Complex64::new(z.re * c + z.im * s, 0.0)).collect(),
            arc.y_coeffs.iter().map(|z| Complex64::new(z.re * c + z.im * s, 0.0)).collect(),
            arc.m,
            arc.alpha,
        );
        best = best.max(holder_surrogate_norm(&combo, grid));
    }
    best
}

/// An affine-parametric family of arcs `r_{j,y} = r⁰_j + Σ_n yⁿ_j rⁿ_j`.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct ParametricArcFamily {
    pub nominal: Vec<OpenArc>,
    /// `perturbations[j][n]` is the coefficient pair of `r^{n+1}_j`.
    pub perturbations: Vec<Vec<OpenArc>>,
    /// Summability exponent `p ∈ (0, 1)` claimed for the `b` sequences.
    pub p: f64,
    /// `b[j][n] = ‖rⁿ_j‖` surrogate estimates, filled at construction.
    #[serde(default)]
    pub b: Vec<Vec<f64>>,
}

impl ParametricArcFamily {
    pub fn new(
        nominal: Vec<OpenArc>,
        perturbations: Vec<Vec<OpenArc>>,
        p: f64,
    ) -> Result<Self> {
        if nominal.is_empty() {
            return Err(Error::InvalidArgument("family needs at least one arc".into()));
        }
        if nominal.len() != perturbations.len() {
            return Err(Error::InvalidArgument(
                "perturbation lists must match the nominal arc count".into(),
            ));
        }
        if !(0.0..1.0).contains(&p) || p == 0.0 {
            return Err(Error::InvalidArgument(format!("p must lie in (0,1), got {p}")));
        }
        let b = perturbations
            .iter()
            .map(|per_arc| {
                per_arc.iter().map(|q| holder_surrogate_norm(q, 128)).collect::<Vec<_>>()
            })
            .collect();
        Ok(Self { nominal, perturbations, p, b })
    }

    pub fn arc_count(&self) -> usize {
        self.nominal.len()
    }

    pub fn max_perturbations(&self) -> usize {
        self.perturbations.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Verdicts and radii for a parametric family.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct AdmissibilityReport {
    pub zeta: f64,
    pub eta: f64,
    /// Worst-case Condition-2 radius per arc over the whole family range.
    pub delta_self: Vec<f64>,
    /// Worst-case Condition-3 radius per (i, j) pair, i < j.
    pub delta_cross: Vec<PairRadius>,
    pub b_summable: bool,
    pub pass_tangent: bool,
    pub pass_separation: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, serde::Serialize, serde::Deserialize)]
pub struct PairRadius {
    pub i: usize,
    pub j: usize,
    pub delta: f64,
}

/// Check Assumption-style admissibility of the family: summable `b`,
/// tangent domination `ζ < 1`, pairwise separation margin `η < 1`, and the
/// explicit per-arc / per-pair radii computed from worst-case grid bounds.
pub fn check_family(family: &ParametricArcFamily) -> AdmissibilityReport {
    let ts = closed_grid(257);
    let m = family.arc_count();

    let b_summable = family.b.iter().all(|bj| bj.iter().sum::<f64>().is_finite());

    // ζ: sup_t Σ_n ‖(rⁿ_j)'(t)‖ ≤ ζ inf_t ‖(r⁰_j)'(t)‖
    let mut zeta: f64 = 0.0;
    let mut inf_tan = vec![f64::INFINITY; m];
    let mut sup_tan = vec![0.0f64; m];
    let mut sup_pert_tan = vec![0.0f64; m];
    for j in 0..m {
        for &t in &ts {
            let tg = family.nominal[j].tangent_unchecked(t);
            let n = (tg[0].norm_sqr() + tg[1].norm_sqr()).sqrt();
            inf_tan[j] = inf_tan[j].min(n);
            sup_tan[j] = sup_tan[j].max(n);
            let mut acc = 0.0;
            for q in &family.perturbations[j] {
                let tq = q.tangent_unchecked(t);
                acc += (tq[0].norm_sqr() + tq[1].norm_sqr()).sqrt();
            }
            sup_pert_tan[j] = sup_pert_tan[j].max(acc);
        }
        if inf_tan[j] > 0.0 {
            zeta = zeta.max(sup_pert_tan[j] / inf_tan[j]);
        } else {
            zeta = f64::INFINITY;
        }
    }
    let pass_tangent = zeta < 1.0;

    // Worst-case Condition-2 radius per arc:
    // 𝓘_Q ≥ (inf‖r⁰'‖ - supΣ‖rⁿ'‖), 𝓢_Q ≤ (sup‖r⁰'‖ + supΣ‖rⁿ'‖)
    let delta_self: Vec<f64> = (0..m)
        .map(|j| {
            let iq = (inf_tan[j] - sup_pert_tan[j]).max(0.0);
            let sq = sup_tan[j] + sup_pert_tan[j];
            if iq > 0.0 {
                (iq * iq + sq * sq).sqrt() - sq
            } else {
                0.0
            }
        })
        .collect();

    // η and cross radii
    let sup_pert_val: Vec<f64> = (0..m)
        .map(|j| {
            ts.iter()
                .map(|&t| {
                    family.perturbations[j]
                        .iter()
                        .map(|q| {
                            let v = q.eval_unchecked(t);
                            (v[0].norm_sqr() + v[1].norm_sqr()).sqrt()
                        })
                        .sum::<f64>()
                })
                .fold(0.0f64, f64::max)
        })
        .collect();
    let sup_val: Vec<f64> = (0..m)
        .map(|j| {
            ts.iter()
                .map(|&t| {
                    let v = family.nominal[j].eval_unchecked(t);
                    (v[0].norm_sqr() + v[1].norm_sqr()).sqrt()
                })
                .fold(0.0f64, f64::max)
        })
        .collect();

    let mut eta: f64 = 0.0;
    let mut delta_cross_list = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let mut inf_sep = f64::INFINITY;
            for &t in &ts {
                let a = family.nominal[i].eval_unchecked(t);
                for &tau in &ts {
                    let b = family.nominal[j].eval_unchecked(tau);
                    let d = ((a[0] - b[0]).norm_sqr() + (a[1] - b[1]).norm_sqr()).sqrt();
                    inf_sep = inf_sep.min(d);
                }
            }
            // worst-case bound for ‖Σ yⁿ_i rⁿ_i(t) - yⁿ_j rⁿ_j(τ)‖
            let worst = sup_pert_val[i] + sup_pert_val[j];
            if inf_sep > 0.0 {
                eta = eta.max(worst / inf_sep);
            } else {
                eta = f64::INFINITY;
            }
            let inf_d = (inf_sep - worst).max(0.0);
            let sup_d = sup_val[i] + sup_pert_val[i] + sup_val[j] + sup_pert_val[j];
            let delta = if inf_d > 0.0 {
                0.5 * ((inf_d * inf_d + sup_d * sup_d).sqrt() - sup_d)
            } else {
                0.0
            };
            delta_cross_list.push(PairRadius { i, j, delta });
        }
    }
    let pass_separation = m < 2 || eta < 1.0;

    let pass = b_summable
        && pass_tangent
        && pass_separation
        && delta_self.iter().all(|&d| d > 0.0)
        && delta_cross_list.iter().all(|p| p.delta > 0.0);
    AdmissibilityReport {
        zeta,
        eta,
        delta_self,
        delta_cross: delta_cross_list,
        b_summable,
        pass_tangent,
        pass_separation,
        pass,
    }
}

/// Materialize `r_{j,y} = r⁰_j + Σ_n yⁿ_j rⁿ_j` with the interleaved index
/// map `(y_j)_n = y_{j + nM}` (1-based `j`, global parameter vector `y`).
/// The sum truncates at the family's stored perturbation count.
pub fn materialize(family: &ParametricArcFamily, y: &[f64]) -> Result<Vec<OpenArc>> {
    if let Some(bad) = y.iter().find(|v| v.abs() > 1.0) {
        return Err(Error::InvalidArgument(format!("parameter {bad} outside [-1, 1]")));
    }
    let m = family.arc_count();
    let mut out = Vec::with_capacity(m);
    for j in 0..m {
        let mut arc = family.nominal[j].clone();
        for (n, q) in family.perturbations[j].iter().enumerate() {
            let global = j + n * m;
            let coef = y.get(global).copied().unwrap_or(0.0);
            if coef != 0.0 {
                arc = arc.add_scaled(q, Complex64::new(coef, 0.0));
            }
        }
        out.push(arc);
    }
    Ok(out)
}

/// Materialize at a complex parameter vector (the holomorphy harness
/// evaluates sweeps on Bernstein ellipses and complex-step stencils).
pub fn materialize_complex(family: &ParametricArcFamily, y: &[Complex64]) -> Vec<OpenArc> {
    let m = family.arc_count();
    (0..m)
        .map(|j| {
            let mut arc = family.nominal[j].clone();
            for (n, q) in family.perturbations[j].iter().enumerate() {
                let coef = y.get(j + n * m).copied().unwrap_or(Complex64::new(0.0, 0.0));
                if coef.norm_sqr() != 0.0 {
                    arc = arc.add_scaled(q, coef);
                }
            }
            arc
        })
        .collect()
}
