//! The resolvent condition itself: bound evaluation, pointwise ratios,
//! grid suprema for the minimal constant, and the torus estimates that the
//! geometric results for `beta < 1` are built from.
//!
//! The condition on an operator `T` reads
//! `||R(lambda, T)|| <= C |lambda|^(alpha+beta-1) / (|lambda-1|^alpha (|lambda|-1)^beta)`
//! for `|lambda| > 1`, with parameters `alpha, beta >= 0` and `C >= 1`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::linalg::{resolvent_norm, singular_extremes, ComplexMatrix};

/// The `(alpha, beta, C)` triple of the resolvent bound. `C >= 1` is forced:
/// `lambda R(lambda, T) -> I` as `|lambda| -> infinity`, so no smaller
/// constant can work.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RKParams {
    pub alpha: f64,
    pub beta: f64,
    pub c: f64,
}

impl RKParams {
    pub fn new(alpha: f64, beta: f64, c: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha >= 0.0) {
            return Err(CoreError::domain(format!("alpha must be finite >= 0, got {alpha}")));
        }
        if !(beta.is_finite() && beta >= 0.0) {
            return Err(CoreError::domain(format!("beta must be finite >= 0, got {beta}")));
        }
        if !(c.is_finite() && c >= 1.0) {
            return Err(CoreError::domain(format!("c must be finite >= 1, got {c}")));
        }
        Ok(Self { alpha, beta, c })
    }

    /// `q = 1 / C`, the reciprocal constant used by the gap-region geometry.
    pub fn q(&self) -> f64 {
        1.0 / self.c
    }
}

/// Evaluation grid over `|lambda| > 1`: a radius list strictly above 1 and an
/// angle list in `[0, 2pi)`. The default packs radii logarithmically in
/// `r - 1` because the interesting behavior happens as `|lambda| -> 1+`.
#[derive(Debug, Clone, PartialEq)]
pub struct LambdaGrid {
    radii: Vec<f64>,
    angles: Vec<f64>,
}

pub const DEFAULT_RADII: usize = 48;
pub const DEFAULT_ANGLES: usize = 256;
pub const DEFAULT_RMIN: f64 = 1e-6;
pub const DEFAULT_RMAX: f64 = 9.0;

impl LambdaGrid {
    pub fn new(radii: Vec<f64>, angles: Vec<f64>) -> Result<Self> {
        if radii.is_empty() || angles.is_empty() {
            return Err(CoreError::domain("grid must be non-empty"));
        }
        if radii.iter().any(|&r| !(r > 1.0) || !r.is_finite()) {
            return Err(CoreError::domain("all grid radii must be finite and > 1"));
        }
        if angles
            .iter()
            .any(|&t| !t.is_finite() || t < 0.0 || t >= std::f64::consts::TAU)
        {
            return Err(CoreError::domain("grid angles must lie in [0, 2pi)"));
        }
        Ok(Self { radii, angles })
    }

    /// `n_radii` radii with `r - 1` log-spaced over `[rmin, rmax]`, and
    /// `n_angles` uniform angles starting at 0.
    pub fn log_spaced(n_radii: usize, n_angles: usize, rmin: f64, rmax: f64) -> Result<Self> {
        if n_radii == 0 || n_angles == 0 {
            return Err(CoreError::domain("grid must be non-empty"));
        }
        if !(rmin > 0.0 && rmax >= rmin) {
            return Err(CoreError::domain("need 0 < rmin <= rmax"));
        }
        let (lo, hi) = (rmin.log10(), rmax.log10());
        let radii: Vec<f64> = (0..n_radii)
            .map(|i| {
                let t = if n_radii == 1 {
                    0.0
                } else {
                    i as f64 / (n_radii - 1) as f64
                };
                1.0 + 10f64.powf(lo + t * (hi - lo))
            })
            .collect();
        let angles: Vec<f64> = (0..n_angles)
            .map(|j| std::f64::consts::TAU * j as f64 / n_angles as f64)
            .collect();
        Self::new(radii, angles)
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    /// Grid points in deterministic order: radius-major, then angle.
    pub fn points(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.radii
            .iter()
            .flat_map(move |&r| self.angles.iter().map(move |&t| Complex64::from_polar(r, t)))
    }
}

impl Default for LambdaGrid {
    fn default() -> Self {
        Self::log_spaced(DEFAULT_RADII, DEFAULT_ANGLES, DEFAULT_RMIN, DEFAULT_RMAX)
            .expect("default grid parameters are valid")
    }
}

fn require_outside_disk(lambda: Complex64) -> Result<f64> {
    let modulus = lambda.norm();
    if !(modulus > 1.0) {
        return Err(CoreError::domain(format!(
            "bound is only defined for |lambda| > 1, got |{lambda}| = {modulus}"
        )));
    }
    Ok(modulus)
}

/// Right-hand side of the resolvent condition at `lambda`.
pub fn rk_bound(lambda: Complex64, params: &RKParams) -> Result<f64> {
    let modulus = require_outside_disk(lambda)?;
    let one = Complex64::new(1.0, 0.0);
    let dist_one = (lambda - one).norm();
    let value = params.c * modulus.powf(params.alpha + params.beta - 1.0)
        / (dist_one.powf(params.alpha) * (modulus - 1.0).powf(params.beta));
    Ok(value)
}

/// `||R(lambda, T)|| * |lambda-1|^alpha * (|lambda|-1)^beta * |lambda|^(1-alpha-beta)`:
/// the smallest `C` that makes the bound hold at this single `lambda`.
pub fn rk_ratio(t: &ComplexMatrix, lambda: Complex64, alpha: f64, beta: f64) -> Result<f64> {
    let modulus = require_outside_disk(lambda)?;
    let norm = resolvent_norm(t, lambda)?;
    let one = Complex64::new(1.0, 0.0);
    let dist_one = (lambda - one).norm();
    Ok(norm
        * dist_one.powf(alpha)
        * (modulus - 1.0).powf(beta)
        * modulus.powf(1.0 - alpha - beta))
}

/// Grid supremum of [`rk_ratio`], which is a *lower* bound for the true
/// minimal constant (the grid under-samples the sup). The argmax is reported;
/// ties resolve to the lexicographically first (radius index, angle index).
pub fn estimate_min_c(
    t: &ComplexMatrix,
    alpha: f64,
    beta: f64,
    grid: &LambdaGrid,
) -> Result<(f64, Complex64)> {
    estimate_min_c_impl(t, alpha, beta, grid, false)
}

/// Unguarded variant for divergence diagnostics: grid nodes that fall in the
/// numerical spectrum evaluate through the raw reciprocal singular value
/// instead of aborting. Only meaningful as a probe for "no finite C".
pub fn estimate_min_c_unguarded(
    t: &ComplexMatrix,
    alpha: f64,
    beta: f64,
    grid: &LambdaGrid,
) -> Result<(f64, Complex64)> {
    estimate_min_c_impl(t, alpha, beta, grid, true)
}

fn estimate_min_c_impl(
    t: &ComplexMatrix,
    alpha: f64,
    beta: f64,
    grid: &LambdaGrid,
    unguarded: bool,
) -> Result<(f64, Complex64)> {
    let mut best = f64::NEG_INFINITY;
    let mut best_lambda = Complex64::new(0.0, 0.0);
    for &r in grid.radii() {
        for &theta in grid.angles() {
            let lambda = Complex64::from_polar(r, theta);
            let ratio = match rk_ratio(t, lambda, alpha, beta) {
                Ok(v) => v,
                Err(CoreError::SingularResolvent { .. }) if unguarded => {
                    let (_, smin) = singular_extremes(&t.shifted_from(lambda));
                    let norm = if smin > 0.0 { 1.0 / smin } else { f64::MAX };
                    let one = Complex64::new(1.0, 0.0);
                    norm * (lambda - one).norm().powf(alpha)
                        * (r - 1.0).powf(beta)
                        * r.powf(1.0 - alpha - beta)
                }
                Err(e) => return Err(e),
            };
            if ratio > best {
                best = ratio;
                best_lambda = lambda;
            }
        }
    }
    Ok((best, best_lambda))
}

/// The three bound values `B_{alpha+beta,0}`, `B_{alpha,beta}`,
/// `B_{0,alpha+beta}` at `lambda` with the same `C`. The reverse triangle
/// inequality `|lambda| - 1 <= |lambda - 1|` orders them ascending, which is
/// the pointwise face of the inclusion chain between the Ritt-like and
/// Kreiss-like condition families.
pub fn pointwise_inclusion_bounds(
    lambda: Complex64,
    alpha: f64,
    beta: f64,
    c: f64,
) -> Result<(f64, f64, f64)> {
    let s = alpha + beta;
    let ritt_like = rk_bound(lambda, &RKParams { alpha: s, beta: 0.0, c })?;
    let mid = rk_bound(lambda, &RKParams { alpha, beta, c })?;
    let kreiss_like = rk_bound(lambda, &RKParams { alpha: 0.0, beta: s, c })?;
    Ok((ritt_like, mid, kreiss_like))
}

/// The constant `C_{alpha,beta}` of the boundary estimate
/// `||R(e^{i theta}, T)|| <= C_{alpha,beta} / |e^{i theta} - 1|^(alpha/(1-beta))`,
/// valid for `beta < 1`:
///
/// * `beta = 0`: `C`,
/// * `beta > 0`, `alpha + beta <= 1`: `C^(1/(1-beta)) / (beta^(beta/(1-beta)) (1-beta))`,
/// * `beta > 0`, `alpha + beta > 1`: the same times `2^(alpha/(1-beta))`.
pub fn torus_constant(params: &RKParams) -> Result<f64> {
    let RKParams { alpha, beta, c } = *params;
    if beta >= 1.0 {
        return Err(CoreError::domain(format!(
            "torus constant requires beta < 1, got beta = {beta}"
        )));
    }
    if beta == 0.0 {
        return Ok(c);
    }
    let base = c.powf(1.0 / (1.0 - beta)) / (beta.powf(beta / (1.0 - beta)) * (1.0 - beta));
    if alpha + beta <= 1.0 {
        Ok(base)
    } else {
        Ok(base * 2f64.powf(alpha / (1.0 - beta)))
    }
}

/// Boundary estimate at `lambda = e^{i theta}`:
/// `C_{alpha,beta} / (2 sin(theta/2))^(alpha/(1-beta))`. Undefined at
/// `theta = 0 mod 2pi` (the point 1 on the circle).
pub fn torus_bound(theta: f64, params: &RKParams) -> Result<f64> {
    let reduced = theta.rem_euclid(std::f64::consts::TAU);
    if reduced == 0.0 {
        return Err(CoreError::domain(
            "torus bound is undefined at theta = 0 mod 2pi",
        ));
    }
    let constant = torus_constant(params)?;
    let dist_one = 2.0 * (reduced / 2.0).sin();
    Ok(constant / dist_one.powf(params.alpha / (1.0 - params.beta)))
}
