//! Closed-form growth machinery: the circle integrals `I_gamma`, `J_gamma`
//! with their bound forms, the per-`k` power and difference exponents, and
//! the full classification of `||T^n||` and `||T^{n+1} - T^n||` regimes.
//!
//! Exponent conventions: a regime `Poly(e)` means `O(n^e)`, `PolyLog(e)`
//! means `O(n^e log n)`, and a `PolyLog` with `log_inside_power` set means
//! `O((log n / n)^{-e})`, i.e. `n^e (log n)^{-e}` with `e < 0`.

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};

/// Tolerance for the case boundaries (`alpha = 1`, `alpha + beta = 1`, ...).
pub const CASE_EQ_TOL: f64 = 1e-12;
/// `alpha` counts as an integer inverse when `1/alpha` is this close to an
/// integer; CLI flags arrive as decimal floats.
pub const INTEGER_INVERSE_TOL: f64 = 1e-9;
/// Search cap for the brute-force `k` minimum in the difference classifier.
pub const K_SEARCH_CAP: u32 = 64;

// ---------------------------------------------------------------------------
// Growth regimes.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RegimeKind {
    ExpDecay,
    Poly,
    PolyLog,
    /// Reserved for regimes outside the polynomial/logarithmic family.
    Special,
}

/// Asymptotic class for a norm sequence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthRegime {
    pub kind: RegimeKind,
    /// Power of `n`; 0 for exponential decay.
    pub exponent: f64,
    pub has_log: bool,
    /// When set, the log sits inside the power: `(log n / n)^{-exponent}`.
    pub log_inside_power: bool,
    /// Which case of the classification produced this regime.
    pub case: String,
    pub optimal_k: Option<u32>,
}

impl GrowthRegime {
    pub fn exp_decay(case: impl Into<String>, k: Option<u32>) -> Self {
        Self {
            kind: RegimeKind::ExpDecay,
            exponent: 0.0,
            has_log: false,
            log_inside_power: false,
            case: case.into(),
            optimal_k: k,
        }
    }

    pub fn poly(exponent: f64, case: impl Into<String>, k: Option<u32>) -> Self {
        Self {
            kind: RegimeKind::Poly,
            exponent,
            has_log: false,
            log_inside_power: false,
            case: case.into(),
            optimal_k: k,
        }
    }

    pub fn poly_log(exponent: f64, case: impl Into<String>, k: Option<u32>) -> Self {
        Self {
            kind: RegimeKind::PolyLog,
            exponent,
            has_log: true,
            log_inside_power: false,
            case: case.into(),
            optimal_k: k,
        }
    }

    /// `(log n / n)^s` encoded with exponent `-s`.
    pub fn log_over_n_power(s: f64, case: impl Into<String>) -> Self {
        Self {
            kind: RegimeKind::PolyLog,
            exponent: -s,
            has_log: true,
            log_inside_power: true,
            case: case.into(),
            optimal_k: None,
        }
    }

    /// Power of `log n` carried next to `n^exponent`.
    pub fn log_power(&self) -> f64 {
        if !self.has_log {
            0.0
        } else if self.log_inside_power {
            -self.exponent
        } else {
            1.0
        }
    }

    /// Total order on asymptotic classes: exponential decay below everything,
    /// then lexicographic on (n-exponent, log-power).
    pub fn asymptotic_cmp(&self, other: &GrowthRegime) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match (self.kind, other.kind) {
            (RegimeKind::ExpDecay, RegimeKind::ExpDecay) => Ordering::Equal,
            (RegimeKind::ExpDecay, _) => Ordering::Less,
            (_, RegimeKind::ExpDecay) => Ordering::Greater,
            _ => {
                let by_exp = self
                    .exponent
                    .partial_cmp(&other.exponent)
                    .expect("exponents are finite");
                if by_exp != Ordering::Equal
                    && (self.exponent - other.exponent).abs() > CASE_EQ_TOL
                {
                    return by_exp;
                }
                self.log_power()
                    .partial_cmp(&other.log_power())
                    .expect("log powers are finite")
            }
        }
    }
}

// ---------------------------------------------------------------------------
// The circle integrals and their bound forms.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundRegime {
    Constant,
    Log,
    Power,
}

/// Closed upper-bound form for `I_gamma` or `J_gamma`: a constant, a
/// `log(1/(r-1))` multiple, or a power of `r - 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntegralBound {
    pub gamma: f64,
    pub regime: BoundRegime,
    pub constant: f64,
    /// Exponent on `r - 1`; zero unless `regime == Power`.
    pub power_exponent: f64,
}

impl IntegralBound {
    pub fn eval(&self, r: f64) -> f64 {
        match self.regime {
            BoundRegime::Constant => self.constant,
            BoundRegime::Log => self.constant * (1.0 / (r - 1.0)).ln(),
            BoundRegime::Power => self.constant * (r - 1.0).powf(self.power_exponent),
        }
    }
}

fn check_integral_domain(r: f64, gamma: f64) -> Result<()> {
    // The estimates hold for r in (1, 3/2); the right endpoint is admitted
    // since nothing degenerates there.
    if !(r > 1.0 && r <= 1.5) {
        return Err(CoreError::domain(format!("r must lie in (1, 1.5], got {r}")));
    }
    if !(gamma >= 0.0 && gamma.is_finite()) {
        return Err(CoreError::domain(format!("gamma must be finite >= 0, got {gamma}")));
    }
    Ok(())
}

/// `|r e^{it} - 1|^2` in the cancellation-free form `(r-1)^2 + 4 r sin^2(t/2)`.
fn chord_sq(r: f64, t: f64) -> f64 {
    let s = (t / 2.0).sin();
    (r - 1.0) * (r - 1.0) + 4.0 * r * s * s
}

fn adaptive_simpson(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let refined = left + right;
    if depth == 0 || (refined - whole).abs() <= 15.0 * tol {
        return refined + (refined - whole) / 15.0;
    }
    adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

fn integrate_half_period(f: impl Fn(f64) -> f64) -> f64 {
    let (a, b) = (0.0, std::f64::consts::PI);
    // Rough scale from a uniform scan so the absolute tolerance tracks the
    // magnitude of the integral even when the integrand is sharply peaked.
    let scan = 2048;
    let h = (b - a) / scan as f64;
    let mut rough = 0.5 * (f(a) + f(b));
    for i in 1..scan {
        rough += f(a + i as f64 * h);
    }
    rough *= h;
    let tol = 1e-12 * rough.abs().max(1e-300);
    let (fa, fb) = (f(a), f(b));
    let fm = f(0.5 * (a + b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    adaptive_simpson(&f, a, b, fa, fm, fb, whole, tol, 48)
}

/// `I_gamma(r) = \int_{-pi}^{pi} |r e^{it} - 1|^{-gamma} dt` by adaptive
/// quadrature (even integrand: integrate `[0, pi]` and double).
pub fn integral_i_numeric(r: f64, gamma: f64) -> Result<f64> {
    check_integral_domain(r, gamma)?;
    Ok(2.0 * integrate_half_period(|t| chord_sq(r, t).powf(-gamma / 2.0)))
}

/// `J_gamma(r) = \int_{-pi}^{pi} |e^{it} - 1| |r e^{it} - 1|^{-gamma} dt`.
pub fn integral_j_numeric(r: f64, gamma: f64) -> Result<f64> {
    check_integral_domain(r, gamma)?;
    Ok(2.0 * integrate_half_period(|t| {
        2.0 * (t / 2.0).sin() * chord_sq(r, t).powf(-gamma / 2.0)
    }))
}

/// Bound form for `I_gamma` on `(1, 1.5]`. The `gamma < 1` constant
/// `2^{1-gamma} pi / (1 - gamma)` is exact from the derivation; the others
/// are explicit but not tight.
pub fn integral_bound_i(r: f64, gamma: f64) -> Result<IntegralBound> {
    check_integral_domain(r, gamma)?;
    use std::f64::consts::PI;
    let bound = if (gamma - 1.0).abs() < CASE_EQ_TOL {
        IntegralBound {
            gamma,
            regime: BoundRegime::Log,
            constant: PI * (1.0 + 4.5f64.ln() / 2f64.ln()),
            power_exponent: 0.0,
        }
    } else if gamma < 1.0 {
        IntegralBound {
            gamma,
            regime: BoundRegime::Constant,
            constant: 2f64.powf(1.0 - gamma) * PI / (1.0 - gamma),
            power_exponent: 0.0,
        }
    } else {
        IntegralBound {
            gamma,
            regime: BoundRegime::Power,
            constant: PI * gamma / (gamma - 1.0),
            power_exponent: 1.0 - gamma,
        }
    };
    Ok(bound)
}

/// Bound form for `J_gamma` on `(1, 1.5]`. Thresholds sit at `gamma = 2`,
/// and the power branch carries exponent `-gamma + 2`: reducing `J` the same
/// way as `I` leaves `(r-1)^{2-gamma}` times a convergent integral once
/// `gamma > 2`, and the difference-of-powers growth statement needs exactly
/// that exponent to reproduce the known `O(1/n)` rate in the Ritt corner.
pub fn integral_bound_j(r: f64, gamma: f64) -> Result<IntegralBound> {
    check_integral_domain(r, gamma)?;
    use std::f64::consts::PI;
    let pi2 = PI * PI;
    let bound = if (gamma - 2.0).abs() < CASE_EQ_TOL {
        IntegralBound {
            gamma,
            regime: BoundRegime::Log,
            constant: pi2 / 4.0 * (2.0 + (17.0f64 / 4.0).ln() / 2f64.ln()),
            power_exponent: 0.0,
        }
    } else if gamma < 2.0 {
        IntegralBound {
            gamma,
            regime: BoundRegime::Constant,
            constant: pi2 / 2.0 * (17.0f64 / 4.0).powf(1.0 - gamma / 2.0) / (2.0 - gamma),
            power_exponent: 0.0,
        }
    } else {
        IntegralBound {
            gamma,
            regime: BoundRegime::Power,
            constant: pi2 / (2.0 * (gamma - 2.0)),
            power_exponent: 2.0 - gamma,
        }
    };
    Ok(bound)
}

// ---------------------------------------------------------------------------
// Per-k exponents.

/// Exponent (and log flag) of the power bound at integration-by-parts order
/// `k`: threshold at `alpha (k+1) = 1`.
pub fn power_bound_exponent(alpha: f64, beta: f64, k: u32) -> (f64, bool) {
    let kf = k as f64;
    let gamma = alpha * (kf + 1.0);
    if (gamma - 1.0).abs() < CASE_EQ_TOL {
        (kf * (beta - 1.0) + beta, true)
    } else if gamma < 1.0 {
        (kf * (beta - 1.0) + beta, false)
    } else {
        ((alpha + beta - 1.0) * (kf + 1.0), false)
    }
}

/// Difference counterpart: threshold at `alpha (k+1) = 2`, and the large-`k`
/// branch carries the extra `-1`.
pub fn diff_bound_exponent(alpha: f64, beta: f64, k: u32) -> (f64, bool) {
    let kf = k as f64;
    let gamma = alpha * (kf + 1.0);
    if (gamma - 2.0).abs() < CASE_EQ_TOL {
        (kf * (beta - 1.0) + beta, true)
    } else if gamma < 2.0 {
        (kf * (beta - 1.0) + beta, false)
    } else {
        ((alpha + beta - 1.0) * (kf + 1.0) - 1.0, false)
    }
}

// ---------------------------------------------------------------------------
// Classification.

fn require_nonnegative(alpha: f64, beta: f64) -> Result<()> {
    if !(alpha >= 0.0 && alpha.is_finite() && beta >= 0.0 && beta.is_finite()) {
        return Err(CoreError::domain(format!(
            "classification needs finite alpha, beta >= 0, got ({alpha}, {beta})"
        )));
    }
    Ok(())
}

/// Growth class of `||T^n||` for the parameter pair: the eight cases of the
/// power-norm classification, selected by closed-form case analysis with the
/// optimal integration-by-parts order recorded.
pub fn classify_powers(alpha: f64, beta: f64) -> Result<GrowthRegime> {
    require_nonnegative(alpha, beta)?;
    let sum = alpha + beta;
    let alpha_is_zero = alpha < CASE_EQ_TOL;
    let alpha_is_one = (alpha - 1.0).abs() < CASE_EQ_TOL;
    let sum_is_one = (sum - 1.0).abs() < CASE_EQ_TOL;

    if !alpha_is_one && alpha < 1.0 && !sum_is_one && sum < 1.0 {
        // Some k drives the exponent negative, after which a power with norm
        // below 1 exists and the whole tail decays geometrically.
        let k = (beta / (1.0 - beta)).floor() as u32 + 1;
        return Ok(GrowthRegime::exp_decay("1", Some(k)));
    }
    if alpha_is_zero {
        // beta >= 1 here (smaller beta fell into case 1, beta ~= 1 is the
        // boundary stratum of case 2).
        return Ok(GrowthRegime::poly(beta, "2", Some(0)));
    }
    if !alpha_is_one && alpha < 1.0 && sum_is_one {
        let mut k = (1.0 / alpha).floor() as u32;
        if alpha * (k as f64 + 1.0) <= 1.0 + CASE_EQ_TOL {
            k += 1;
        }
        return Ok(GrowthRegime::poly(0.0, "3", Some(k)));
    }
    if alpha_is_one {
        return if beta < CASE_EQ_TOL {
            Ok(GrowthRegime::poly(0.0, "6", Some(1)))
        } else {
            Ok(GrowthRegime::poly_log(beta, "7", Some(0)))
        };
    }
    if alpha > 1.0 {
        return Ok(GrowthRegime::poly(sum - 1.0, "8", Some(0)));
    }
    // 0 < alpha < 1 from here on.
    if beta >= 1.0 - CASE_EQ_TOL {
        return Ok(GrowthRegime::poly(beta, "5", Some(0)));
    }
    // Case 4: 0 < alpha < 1, 0 < beta < 1, alpha + beta > 1.
    let inv = 1.0 / alpha;
    let nearest = inv.round();
    if (inv - nearest).abs() < INTEGER_INVERSE_TOL && nearest >= 2.0 {
        let m = nearest as u32 - 1;
        return Ok(GrowthRegime::poly_log((sum - 1.0) / alpha, "4.1", Some(m)));
    }
    let floor_inv = inv.floor();
    let eta = inv - floor_inv;
    let ratio = (sum - 1.0) / alpha;
    let exp_low_k = floor_inv * (beta - 1.0) + 1.0;
    let exp_high_k = (sum - 1.0) * (floor_inv + 1.0);
    if (eta - ratio).abs() < CASE_EQ_TOL {
        // Both branches land on the same exponent, log-free.
        return Ok(GrowthRegime::poly(exp_low_k, "4.2-tie", Some(floor_inv as u32 - 1)));
    }
    if eta > ratio {
        Ok(GrowthRegime::poly(exp_high_k, "4.2.1", Some(floor_inv as u32)))
    } else {
        Ok(GrowthRegime::poly(exp_low_k, "4.2.2", Some(floor_inv as u32 - 1)))
    }
}

/// Growth class of `||T^{n+1} - T^n||`: the asymptotically smallest among
/// the brute-force `k` minimum, the `(log n / n)^{(1-beta)/alpha}` rate
/// available for `beta < 1`, `alpha + beta >= 1`, and the log-free `O(1/n)`
/// available at `alpha + beta = 1`, `alpha > 0`.
pub fn classify_differences(alpha: f64, beta: f64) -> Result<GrowthRegime> {
    require_nonnegative(alpha, beta)?;
    let sum = alpha + beta;
    let sum_is_one = (sum - 1.0).abs() < CASE_EQ_TOL;
    if !sum_is_one && sum < 1.0 {
        // Powers decay geometrically, so differences do too.
        let k = if beta < 1.0 { (beta / (1.0 - beta)).floor() as u32 + 1 } else { 0 };
        return Ok(GrowthRegime::exp_decay("diff-1", Some(k)));
    }

    let mut best: Option<GrowthRegime> = None;
    let mut consider = |candidate: GrowthRegime| {
        let better = match &best {
            None => true,
            Some(current) => {
                candidate.asymptotic_cmp(current) == std::cmp::Ordering::Less
            }
        };
        if better {
            best = Some(candidate);
        }
    };

    if sum_is_one && alpha > 0.0 {
        consider(GrowthRegime::poly(-1.0, "diff-log-free", None));
    }
    for k in 0..=K_SEARCH_CAP {
        let (e, has_log) = diff_bound_exponent(alpha, beta, k);
        let candidate = if has_log {
            GrowthRegime::poly_log(e, "diff-k", Some(k))
        } else {
            GrowthRegime::poly(e, "diff-k", Some(k))
        };
        consider(candidate);
    }
    if beta < 1.0 && sum >= 1.0 - CASE_EQ_TOL {
        consider(GrowthRegime::log_over_n_power((1.0 - beta) / alpha, "diff-improved"));
    }
    Ok(best.expect("at least the k sweep produced a candidate"))
}

/// `alpha + beta = 1` (within 1e-12) with `alpha > 0` forces the Ritt
/// condition: powers are bounded and `n ||T^{n+1} - T^n||` is bounded.
pub fn is_ritt(alpha: f64, beta: f64) -> bool {
    (alpha + beta - 1.0).abs() < CASE_EQ_TOL && alpha > 0.0
}

/// Why the condition family at `(alpha, beta)` cannot coincide with the set
/// of all power-bounded operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairHorn {
    /// `alpha + beta != 1`: the inclusion chain between the Ritt-like and
    /// Kreiss-like families already forces the sum to be 1.
    InclusionChain,
    /// `alpha + beta = 1`, `beta < 1`: equality would make every power
    /// bounded operator Ritt, which is false.
    RittHorn,
    /// `beta = 1` (so `alpha = 0`): equality would make every Kreiss
    /// operator power bounded, which is false.
    KreissHorn,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairWitness {
    pub horn: PairHorn,
    pub explanation: String,
}

pub fn no_power_bounded_pair_witness(alpha: f64, beta: f64) -> PairWitness {
    let sum = alpha + beta;
    if (sum - 1.0).abs() >= CASE_EQ_TOL {
        PairWitness {
            horn: PairHorn::InclusionChain,
            explanation: format!(
                "alpha + beta = {sum} != 1: sandwiching the power-bounded class between \
                 the Ritt and Kreiss families forces alpha + beta = 1"
            ),
        }
    } else if beta < 1.0 {
        PairWitness {
            horn: PairHorn::RittHorn,
            explanation: "alpha + beta = 1 with beta < 1: equality would make every \
                          power bounded operator Ritt, which is false"
                .into(),
        }
    } else {
        PairWitness {
            horn: PairHorn::KreissHorn,
            explanation: "beta = 1: equality would make every Kreiss operator power \
                          bounded, which is false"
                .into(),
        }
    }
}
