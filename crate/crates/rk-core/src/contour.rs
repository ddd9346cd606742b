//! Circle-contour representations of `T^n` and `T^{n+1} - T^n`, measured
//! norm sequences with slope fits, and the spectral-radius estimate
//! `||T^n||^{1/n}`.
//!
//! After `k` integrations by parts,
//!
//! ```text
//! T^n           = binom(n+k, k)^{-1}   (2 pi i)^{-1} \oint  lambda^{n+k}              R(lambda, T)^{k+1} d lambda
//! T^{n+1} - T^n = binom(n+k+1, k)^{-1} (2 pi i)^{-1} \oint  lambda^{n+k} (lambda - w) R(lambda, T)^{k+1} d lambda
//! ```
//!
//! where `w = 1 + k/(n+1)`; for `k = 0` this degenerates to `w = 1`, and the
//! contour then runs at radius `1 + 1/(n+1)` instead. Uniform trapezoid
//! nodes on the circle are spectrally accurate here because the integrand is
//! analytic in a neighborhood of the contour.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::linalg::{singular_extremes, ComplexMatrix, LuFactors};

/// Quadrature contour: a circle of the given radius with uniform nodes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ContourSpec {
    pub radius: f64,
    pub nodes: usize,
}

impl ContourSpec {
    pub fn new(radius: f64, nodes: usize) -> Result<Self> {
        if !(radius > 1.0 && radius.is_finite()) {
            return Err(CoreError::domain(format!("contour radius must be > 1, got {radius}")));
        }
        if nodes < 64 {
            return Err(CoreError::domain(format!("need at least 64 nodes, got {nodes}")));
        }
        Ok(Self { radius, nodes })
    }

    /// Default contour for `T^n`: radius `1 + 1/n`, node count `max(256, 8n)`
    /// since the integrand oscillates with frequency `n`.
    pub fn for_power(n: u64) -> Self {
        Self {
            radius: 1.0 + 1.0 / n as f64,
            nodes: 256.max(8 * n as usize),
        }
    }

    /// Default contour for `T^{n+1} - T^n`: radius `1 + k/(n+1)` for
    /// `k >= 1` and `1 + 1/(n+1)` for `k = 0`.
    pub fn for_diff(n: u64, k: u32) -> Self {
        let bump = if k == 0 { 1.0 } else { k as f64 };
        Self {
            radius: 1.0 + bump / (n as f64 + 1.0),
            nodes: 256.max(8 * n as usize),
        }
    }
}

/// `binom(n+k, k)` as a float, exact enough for small `k`.
fn binom_shift(n: u64, k: u32) -> f64 {
    (1..=k as u64).fold(1.0, |acc, i| acc * (n + i) as f64 / i as f64)
}

/// `R(lambda, T)^{k+1}` through an explicit LU inverse.
fn resolvent_power(
    t: &ComplexMatrix,
    lambda: Complex64,
    k: u32,
) -> Result<ComplexMatrix> {
    let shifted = t.shifted_from(lambda);
    let lu = LuFactors::new(&shifted)
        .map_err(|_| CoreError::SingularResolvent { lambda })?;
    if lu.pivot_ratio() < 1e-14 {
        return Err(CoreError::SingularResolvent { lambda });
    }
    let dim = t.dim();
    let mut inv = ComplexMatrix::zero(dim).expect("dim validated");
    let mut e = vec![Complex64::new(0.0, 0.0); dim];
    for j in 0..dim {
        e.fill(Complex64::new(0.0, 0.0));
        e[j] = Complex64::new(1.0, 0.0);
        let col = lu.solve(&e);
        for i in 0..dim {
            inv[(i, j)] = col[i];
        }
    }
    let mut power = inv.clone();
    for _ in 0..k {
        power = power.mul(&inv);
    }
    Ok(power)
}

/// Shared quadrature core: accumulates
/// `prefactor^{-1} (1/N) sum_j lambda_j^{m+1} g(lambda_j) R(lambda_j)^{k+1}`
/// with `lambda_j = r e^{2 pi i j / N}`. The angle of `lambda_j^{m+1}` is
/// reduced exactly as `2 pi ((j (m+1)) mod N) / N`.
fn contour_sum(
    t: &ComplexMatrix,
    m: u64,
    k: u32,
    spec: &ContourSpec,
    prefactor: f64,
    extra: impl Fn(Complex64) -> Complex64,
) -> Result<ComplexMatrix> {
    let n_nodes = spec.nodes as u64;
    let r_pow = spec.radius.powi((m + 1) as i32);
    let mut acc = ComplexMatrix::zero(t.dim()).expect("dim validated");
    for j in 0..n_nodes {
        let theta = std::f64::consts::TAU * j as f64 / n_nodes as f64;
        let lambda = Complex64::from_polar(spec.radius, theta);
        let rp = resolvent_power(t, lambda, k)?;
        let phase = std::f64::consts::TAU * ((j * ((m + 1) % n_nodes)) % n_nodes) as f64
            / n_nodes as f64;
        let lambda_pow = Complex64::from_polar(r_pow, phase);
        acc = acc.add(&rp.scale(lambda_pow * extra(lambda)));
    }
    Ok(acc.scale(Complex64::new(1.0 / (prefactor * n_nodes as f64), 0.0)))
}

/// Trapezoidal contour approximation of `T^n`. The contour must keep all
/// nodes in the resolvent set; it does not need to dominate the spectral
/// radius as long as the spectrum stays inside the unit disk.
pub fn power_via_contour(
    t: &ComplexMatrix,
    n: u64,
    k: u32,
    spec: &ContourSpec,
) -> Result<ComplexMatrix> {
    if n == 0 {
        return Err(CoreError::domain("n must be positive"));
    }
    contour_sum(t, n + k as u64, k, spec, binom_shift(n, k), |_| {
        Complex64::new(1.0, 0.0)
    })
}

/// Trapezoidal contour approximation of `T^{n+1} - T^n`.
pub fn diff_via_contour(
    t: &ComplexMatrix,
    n: u64,
    k: u32,
    spec: &ContourSpec,
) -> Result<ComplexMatrix> {
    if n == 0 {
        return Err(CoreError::domain("n must be positive"));
    }
    // The multiplier root must sit at w = 1 + k/(n+1) for the identity to be
    // exact; the contour radius is free (the default happens to coincide for
    // k >= 1).
    let w = Complex64::new(1.0 + k as f64 / (n as f64 + 1.0), 0.0);
    contour_sum(t, n + k as u64, k, spec, binom_shift(n + 1, k), move |lambda| {
        lambda - w
    })
}

// ---------------------------------------------------------------------------
// Measured norm sequences.

/// Per-series slope diagnostics computed on the fit window.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SeriesFit {
    /// Log-log slope of the plain power-law fit.
    pub slope: f64,
    /// Slope after adding a `log log n` regressor, when a log factor was
    /// detected; equals `slope` otherwise.
    pub slope_with_log: f64,
    /// t-statistic of the `log log n` regressor on the power-law residuals.
    pub log_t_stat: f64,
    pub log_detected: bool,
    /// R^2 of `ln y` against `n` (geometric-decay diagnostic).
    pub exp_r2: f64,
    /// Slope of `ln y` against `n`.
    pub exp_rate: f64,
    /// Number of samples actually used in the window.
    pub window_len: usize,
}

/// Measured `||T^n||` and `||T^{n+1} - T^n||` sequences with fit
/// diagnostics and the spectral-radius estimate `||T^{n_max}||^{1/n_max}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NormSequenceReport {
    pub n_values: Vec<u64>,
    pub power_norms: Vec<f64>,
    pub diff_norms: Vec<f64>,
    pub fitted_power_slope: f64,
    pub fitted_diff_slope: f64,
    pub log_detected: bool,
    pub diff_log_detected: bool,
    pub gelfand_estimate: f64,
    pub power_fit: Option<SeriesFit>,
    pub diff_fit: Option<SeriesFit>,
    /// First `n` whose norm exceeded `1e300`; data before it is retained.
    pub overflow_at: Option<u64>,
}

fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let sx: f64 = xs.iter().sum();
    let sy: f64 = ys.iter().sum();
    let sxx: f64 = xs.iter().map(|x| x * x).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| x * y).sum();
    let denom = n * sxx - sx * sx;
    if denom.abs() < 1e-30 {
        return (0.0, sy / n.max(1.0));
    }
    let slope = (n * sxy - sx * sy) / denom;
    let intercept = (sy - slope * sx) / n;
    (slope, intercept)
}

fn r_squared(xs: &[f64], ys: &[f64], slope: f64, intercept: f64) -> f64 {
    let n = ys.len() as f64;
    let mean = ys.iter().sum::<f64>() / n;
    let ss_tot: f64 = ys.iter().map(|y| (y - mean) * (y - mean)).sum();
    let ss_res: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| {
            let e = y - (intercept + slope * x);
            e * e
        })
        .sum();
    if ss_tot < 1e-30 {
        return 1.0;
    }
    1.0 - ss_res / ss_tot
}

/// Two-regressor least squares `y ~ 1 + x1 + x2`, returning the two slopes.
fn two_var_fit(x1: &[f64], x2: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = ys.len() as f64;
    let mean = |v: &[f64]| v.iter().sum::<f64>() / n;
    let (m1, m2, my) = (mean(x1), mean(x2), mean(ys));
    let mut s11 = 0.0;
    let mut s22 = 0.0;
    let mut s12 = 0.0;
    let mut s1y = 0.0;
    let mut s2y = 0.0;
    for i in 0..ys.len() {
        let d1 = x1[i] - m1;
        let d2 = x2[i] - m2;
        let dy = ys[i] - my;
        s11 += d1 * d1;
        s22 += d2 * d2;
        s12 += d1 * d2;
        s1y += d1 * dy;
        s2y += d2 * dy;
    }
    let det = s11 * s22 - s12 * s12;
    if det.abs() < 1e-30 {
        let (slope, _) = linear_fit(x1, ys);
        return (slope, 0.0);
    }
    let b1 = (s22 * s1y - s12 * s2y) / det;
    let b2 = (s11 * s2y - s12 * s1y) / det;
    (b1, b2)
}

fn fit_series(ns: &[u64], ys: &[f64], window_start: u64) -> Option<SeriesFit> {
    // Transients below the window (and any zero norms) are discarded.
    let mut log_n = Vec::new();
    let mut log_log_n = Vec::new();
    let mut log_y = Vec::new();
    let mut plain_n = Vec::new();
    for (&n, &y) in ns.iter().zip(ys) {
        if n >= window_start && y > 0.0 && y.is_finite() {
            log_n.push((n as f64).ln());
            log_log_n.push((n as f64).ln().ln());
            log_y.push(y.ln());
            plain_n.push(n as f64);
        }
    }
    if log_y.len() < 2 {
        return None;
    }
    let (slope, intercept) = linear_fit(&log_n, &log_y);
    // Residual curvature test: the log log n regressor is nearly collinear
    // with log n on a [n/4, n] window, so detrend it by log n first and
    // read the partial t-statistic off the detrended pair.
    let residuals: Vec<f64> = log_n
        .iter()
        .zip(&log_y)
        .map(|(x, y)| y - (intercept + slope * x))
        .collect();
    let (z_slope, z_intercept) = linear_fit(&log_n, &log_log_n);
    let z_resid: Vec<f64> = log_n
        .iter()
        .zip(&log_log_n)
        .map(|(x, z)| z - (z_intercept + z_slope * x))
        .collect();
    let m = residuals.len() as f64;
    let szz: f64 = z_resid.iter().map(|z| z * z).sum();
    let coef = if szz < 1e-30 {
        0.0
    } else {
        z_resid.iter().zip(&residuals).map(|(z, e)| z * e).sum::<f64>() / szz
    };
    let sse: f64 = z_resid
        .iter()
        .zip(&residuals)
        .map(|(z, e)| {
            let d = e - coef * z;
            d * d
        })
        .sum();
    let log_t_stat = if szz < 1e-30 {
        0.0
    } else if sse < 1e-24 || m <= 3.0 {
        if coef.abs() > 1e-10 {
            f64::INFINITY
        } else {
            0.0
        }
    } else {
        coef / (sse / (m - 3.0) / szz).sqrt()
    };
    let log_detected = log_t_stat >= 4.0;
    let slope_with_log = if log_detected {
        two_var_fit(&log_n, &log_log_n, &log_y).0
    } else {
        slope
    };
    let (exp_rate, exp_intercept) = linear_fit(&plain_n, &log_y);
    let exp_r2 = r_squared(&plain_n, &log_y, exp_rate, exp_intercept);
    Some(SeriesFit {
        slope,
        slope_with_log,
        log_t_stat,
        log_detected,
        exp_r2,
        exp_rate,
        window_len: log_y.len(),
    })
}

impl NormSequenceReport {
    /// Assemble a report from raw sequences, fitting log-log slopes on the
    /// window `n in [max(16, n_max/4), n_max]`.
    pub fn from_sequences(
        n_values: Vec<u64>,
        power_norms: Vec<f64>,
        diff_norms: Vec<f64>,
        overflow_at: Option<u64>,
    ) -> Result<Self> {
        if n_values.len() != power_norms.len() || n_values.len() != diff_norms.len() {
            return Err(CoreError::domain("sequence lengths must agree"));
        }
        let n_max = n_values.last().copied().unwrap_or(0);
        let window_start = 16.max(n_max / 4);
        let power_fit = fit_series(&n_values, &power_norms, window_start);
        let diff_fit = fit_series(&n_values, &diff_norms, window_start);
        let gelfand_estimate = match (n_values.last(), power_norms.last()) {
            (Some(&n), Some(&y)) if n > 0 => y.powf(1.0 / n as f64),
            _ => f64::NAN,
        };
        let slope_of = |fit: &Option<SeriesFit>| {
            fit.map(|f| if f.log_detected { f.slope_with_log } else { f.slope })
                .unwrap_or(f64::NAN)
        };
        Ok(Self {
            fitted_power_slope: slope_of(&power_fit),
            fitted_diff_slope: slope_of(&diff_fit),
            log_detected: power_fit.map(|f| f.log_detected).unwrap_or(false),
            diff_log_detected: diff_fit.map(|f| f.log_detected).unwrap_or(false),
            gelfand_estimate,
            power_fit,
            diff_fit,
            overflow_at,
            n_values,
            power_norms,
            diff_norms,
        })
    }

    /// CSV emission with header `n,power_norm,diff_norm`, 17 significant
    /// digits, deterministic bytes.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,power_norm,diff_norm\n");
        for i in 0..self.n_values.len() {
            out.push_str(&format!(
                "{},{:.16e},{:.16e}\n",
                self.n_values[i], self.power_norms[i], self.diff_norms[i]
            ));
        }
        out
    }
}

/// Iteratively accumulate `T^n`, recording `||T^n||` and `||T^{n+1} - T^n||`
/// up to `n_max` (one multiply per step). Diagonal matrices take a fast path
/// through their diagonal. Overflow past `1e300` truncates the sequence and
/// marks the report rather than failing.
pub fn norm_sequence(t: &ComplexMatrix, n_max: u64) -> Result<NormSequenceReport> {
    if n_max == 0 || n_max > 1_000_000 {
        return Err(CoreError::domain(format!(
            "n_max must lie in [1, 1e6], got {n_max}"
        )));
    }
    let mut n_values = Vec::new();
    let mut power_norms = Vec::new();
    let mut diff_norms = Vec::new();
    let mut overflow_at = None;

    if t.is_diagonal() {
        let diag = t.diag();
        let mut powers = diag.clone();
        for n in 1..=n_max {
            let norm = powers.iter().map(|z| z.norm()).fold(0.0, f64::max);
            if !norm.is_finite() || norm > 1e300 {
                overflow_at = Some(n);
                break;
            }
            let diff = powers
                .iter()
                .zip(&diag)
                .map(|(p, d)| (p * (d - Complex64::new(1.0, 0.0))).norm())
                .fold(0.0, f64::max);
            n_values.push(n);
            power_norms.push(norm);
            diff_norms.push(diff);
            for (p, d) in powers.iter_mut().zip(&diag) {
                *p *= d;
            }
        }
    } else {
        let mut current = t.clone();
        for n in 1..=n_max {
            if current.max_abs_entry() > 1e300 {
                overflow_at = Some(n);
                break;
            }
            let next = t.mul(&current);
            let (norm, _) = singular_extremes(&current);
            let (diff_norm, _) = singular_extremes(&next.sub(&current));
            n_values.push(n);
            power_norms.push(norm);
            diff_norms.push(diff_norm);
            current = next;
        }
    }
    NormSequenceReport::from_sequences(n_values, power_norms, diff_norms, overflow_at)
}

/// Which measured series to map to a regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Series {
    Powers,
    Differences,
}

/// Map fitted slopes and log detection to a growth regime. Requires at
/// least 32 samples in the fit window. Geometric decay is reported when the
/// `ln y` vs `n` fit is essentially exact (R^2 >= 0.999) with a decay of at
/// least 2 nats across the window.
pub fn fit_regime(report: &NormSequenceReport, series: Series) -> Result<crate::growth::GrowthRegime> {
    use crate::growth::GrowthRegime;
    let fit = match series {
        Series::Powers => &report.power_fit,
        Series::Differences => &report.diff_fit,
    };
    let fit = fit.as_ref().ok_or_else(|| {
        CoreError::InsufficientData("no usable samples in the fit window".into())
    })?;
    if fit.window_len < 32 {
        return Err(CoreError::InsufficientData(format!(
            "need >= 32 window samples, have {}",
            fit.window_len
        )));
    }
    let span = report.n_values.last().copied().unwrap_or(0) as f64 * 0.75;
    let decay_nats = -fit.exp_rate * span;
    if fit.exp_r2 >= 0.999 && fit.exp_rate < 0.0 && decay_nats >= 2.0 {
        return Ok(GrowthRegime::exp_decay("fit", None));
    }
    if fit.log_detected {
        Ok(GrowthRegime::poly_log(fit.slope_with_log, "fit", None))
    } else {
        Ok(GrowthRegime::poly(fit.slope, "fit", None))
    }
}
