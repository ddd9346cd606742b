//! Spectral localization regions and their geometry.
//!
//! For `beta < 1` the resolvent condition pins the spectrum inside one of a
//! small family of regions in the closed unit disk, keyed off the sign of
//! `alpha + beta - 1`:
//!
//! * `alpha + beta < 1`: an open disk with a radial gap under the circle
//!   (`OmegaGap`), with the point 1 excluded;
//! * `alpha + beta = 1`: the closure of a Stolz domain, equivalently a
//!   sector with vertex at 1;
//! * `alpha + beta > 1`: the closure of a generalized Stolz domain with
//!   exponent `alpha / (1 - beta)`.
//!
//! For `beta >= 1` nothing sharper than the closed unit disk is available.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::rk::{torus_constant, RKParams};

const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

/// Region family plus parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum RegionKind {
    /// `{ |z| <= 1 }`.
    ClosedUnitDisk,
    /// The open unit disk together with the point 1.
    OpenDiskUnionOne,
    /// `{ r e^{i theta} : r <= 1 - q |e^{i theta} - 1|^a }` minus the point 1.
    /// `a = 0` collapses the gap to a concentric disk of radius `1 - q`.
    OmegaGap { q: f64, a: f64 },
    /// `(1 - closure(Sigma_omega)) ∩ closed disk`: the sector of half-angle
    /// `omega` with vertex at 1 opening toward the origin.
    SectorAtOne { omega: f64 },
    /// Closure of the Stolz-type domain `{ |1-z|^a <= sigma (1-|z|) }`, the
    /// point 1 always included.
    StolzClosure { sigma: f64, a: f64 },
}

/// A region together with a human-readable note saying which hypothesis
/// produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionDescriptor {
    #[serde(flatten)]
    pub kind: RegionKind,
    pub provenance: String,
}

impl RegionDescriptor {
    pub fn new(kind: RegionKind, provenance: impl Into<String>) -> Result<Self> {
        match kind {
            RegionKind::OmegaGap { q, a } => {
                if !(q > 0.0 && q <= 1.0) {
                    return Err(CoreError::domain(format!("OmegaGap needs q in (0,1], got {q}")));
                }
                if !(a >= 0.0) {
                    return Err(CoreError::domain(format!("OmegaGap needs a >= 0, got {a}")));
                }
            }
            RegionKind::SectorAtOne { omega } => {
                if !(0.0..std::f64::consts::FRAC_PI_2).contains(&omega) {
                    return Err(CoreError::domain(format!(
                        "SectorAtOne needs omega in [0, pi/2), got {omega}"
                    )));
                }
            }
            RegionKind::StolzClosure { sigma, a } => {
                if !(sigma > 0.0) {
                    return Err(CoreError::domain(format!("Stolz needs sigma > 0, got {sigma}")));
                }
                if !(a >= 1.0) {
                    return Err(CoreError::domain(format!("Stolz needs a >= 1, got {a}")));
                }
            }
            RegionKind::ClosedUnitDisk | RegionKind::OpenDiskUnionOne => {}
        }
        Ok(Self { kind, provenance: provenance.into() })
    }
}

/// Dispatch the localization result for a parameter triple.
pub fn region_for(params: &RKParams) -> RegionDescriptor {
    let RKParams { alpha, beta, .. } = *params;
    if beta >= 1.0 {
        return RegionDescriptor::new(
            RegionKind::ClosedUnitDisk,
            "beta >= 1: no localization beyond the closed unit disk",
        )
        .expect("unit disk descriptor is always valid");
    }
    let c_torus = torus_constant(params).expect("beta < 1 checked above");
    let a = alpha / (1.0 - beta);
    let sum = alpha + beta;
    if (sum - 1.0).abs() < 1e-12 {
        let omega = (1.0 / c_torus).min(1.0).acos();
        RegionDescriptor::new(
            RegionKind::StolzClosure { sigma: c_torus, a: 1.0 },
            format!(
                "alpha + beta = 1, beta < 1: boundary estimate is of Ritt type; \
                 Stolz closure with sigma = C_torus = {c_torus:.6}; equivalent sector \
                 at 1 with omega = arccos(1/C_torus) = {omega:.6} rad"
            ),
        )
        .expect("sigma = C_torus >= 1, a = 1")
    } else if sum < 1.0 {
        RegionDescriptor::new(
            RegionKind::OmegaGap { q: 1.0 / c_torus, a },
            format!(
                "alpha + beta < 1, beta < 1: spectrum inside the open disk with a \
                 radial gap of depth |e^(i theta) - 1|^(alpha/(1-beta)) / C_torus, \
                 C_torus = {c_torus:.6}; the point 1 is excluded"
            ),
        )
        .expect("q = 1/C_torus in (0,1], a >= 0")
    } else {
        RegionDescriptor::new(
            RegionKind::StolzClosure { sigma: 2.0 * c_torus, a },
            format!(
                "alpha + beta > 1, beta < 1: closure of the alpha/(1-beta)-Stolz \
                 domain with sigma = 2 C_torus = {:.6}",
                2.0 * c_torus
            ),
        )
        .expect("sigma = 2 C_torus >= 2, a > 1")
    }
}

/// `|e^{i theta} - 1| = 2 |sin(theta/2)|` evaluated from an angle.
fn circle_chord(theta: f64) -> f64 {
    2.0 * (theta / 2.0).sin().abs()
}

/// Exact membership per variant.
pub fn contains(region: &RegionDescriptor, z: Complex64) -> bool {
    let modulus = z.norm();
    match region.kind {
        RegionKind::ClosedUnitDisk => modulus <= 1.0,
        RegionKind::OpenDiskUnionOne => modulus < 1.0 || z == ONE,
        RegionKind::OmegaGap { q, a } => {
            if z == ONE {
                return false;
            }
            modulus <= 1.0 - q * circle_chord(z.arg()).powf(a)
        }
        RegionKind::SectorAtOne { omega } => {
            if z == ONE {
                return true;
            }
            modulus <= 1.0 && (ONE - z).arg().abs() <= omega
        }
        RegionKind::StolzClosure { sigma, a } => {
            if z == ONE {
                return true;
            }
            // For a = 1 and sigma <= 1 the open domain is empty, so its
            // closure is the single point 1; the non-strict inequality set
            // would spuriously pick up the segment [0, 1].
            if a == 1.0 && sigma <= 1.0 {
                return false;
            }
            modulus <= 1.0 && (ONE - z).norm().powf(a) <= sigma * (1.0 - modulus)
        }
    }
}

/// Radial profile of the region boundary at polar angle `theta`, i.e. the
/// largest admissible radius along the ray (clipped to the unit disk).
fn radial_profile(kind: &RegionKind, theta: f64) -> f64 {
    match *kind {
        RegionKind::ClosedUnitDisk | RegionKind::OpenDiskUnionOne => 1.0,
        RegionKind::OmegaGap { q, a } => (1.0 - q * circle_chord(theta).powf(a)).max(0.0),
        RegionKind::SectorAtOne { omega } => {
            // Fold to the upper half-plane; the region is symmetric.
            let t = {
                let t = theta.rem_euclid(std::f64::consts::TAU);
                if t > std::f64::consts::PI { std::f64::consts::TAU - t } else { t }
            };
            if t == 0.0 {
                return 1.0;
            }
            if t + omega >= std::f64::consts::PI {
                return 1.0;
            }
            (omega.sin() / (t + omega).sin()).min(1.0)
        }
        RegionKind::StolzClosure { sigma, a } => {
            // Bisection on g(r) = sigma (1 - r) - |1 - r e^{i theta}|^a,
            // which is >= 0 inside and <= 0 outside along the ray.
            let g = |r: f64| {
                let z = Complex64::from_polar(r, theta);
                sigma * (1.0 - r) - (ONE - z).norm().powf(a)
            };
            if g(0.0) < 0.0 {
                // Degenerate configuration: the ray never enters the region.
                return if theta.rem_euclid(std::f64::consts::TAU) == 0.0 { 1.0 } else { 0.0 };
            }
            let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
            while hi - lo > 1e-13 {
                let mid = 0.5 * (lo + hi);
                if g(mid) >= 0.0 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            0.5 * (lo + hi)
        }
    }
}

/// `n` points tracing the region boundary inside the closed disk, ordered by
/// polar angle (`theta_j = 2 pi j / n`). Intended for `n >= 16`; smaller `n`
/// just gives a coarse trace.
pub fn boundary_points(region: &RegionDescriptor, n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|j| {
            let theta = std::f64::consts::TAU * j as f64 / n as f64;
            Complex64::from_polar(radial_profile(&region.kind, theta), theta)
        })
        .collect()
}

/// Non-empty-spectrum floor: with `beta < 1`, the torus constant must reach
/// `2^(alpha/(1-beta) - 1)` or no operator can satisfy the bound. `false`
/// flags a vacuous parameter triple.
pub fn kreiss_floor_ok(params: &RKParams) -> Result<bool> {
    let c_torus = torus_constant(params)?;
    let floor = 2f64.powf(params.alpha / (1.0 - params.beta) - 1.0);
    Ok(c_torus >= floor)
}

/// One eigenvalue that escaped the (inflated) region.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Violation {
    pub eig: Complex64,
    /// Positive residual of the defining inequality; 0 for the bare
    /// exclusion of the point 1.
    pub margin: f64,
}

/// Result of testing a spectrum against a region.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectrumCheck {
    pub violations: Vec<Violation>,
    pub tested: usize,
    pub tol: f64,
}

impl SpectrumCheck {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Test each eigenvalue against the region inflated by `tol`: Stolz regions
/// inflate `sigma -> sigma (1 + tol)`, disk-like regions scale the radial
/// profile by `1 + tol`.
pub fn check_spectrum(eigs: &[Complex64], region: &RegionDescriptor, tol: f64) -> SpectrumCheck {
    assert!(tol >= 0.0, "tolerance must be nonnegative");
    let mut violations = Vec::new();
    for &z in eigs {
        let modulus = z.norm();
        let violation = match region.kind {
            RegionKind::ClosedUnitDisk => {
                let bound = 1.0 + tol;
                (modulus > bound).then(|| Violation { eig: z, margin: modulus - bound })
            }
            RegionKind::OpenDiskUnionOne => {
                let bound = 1.0 + tol;
                (!(modulus < bound || z == ONE))
                    .then(|| Violation { eig: z, margin: modulus - bound })
            }
            RegionKind::OmegaGap { q, a } => {
                if z == ONE {
                    Some(Violation { eig: z, margin: 0.0 })
                } else {
                    let profile =
                        (1.0 - q * circle_chord(z.arg()).powf(a)).max(0.0) * (1.0 + tol);
                    (modulus > profile).then(|| Violation { eig: z, margin: modulus - profile })
                }
            }
            RegionKind::SectorAtOne { omega } => {
                let scaled = z / (1.0 + tol);
                let inside = contains(
                    &RegionDescriptor {
                        kind: RegionKind::SectorAtOne { omega },
                        provenance: String::new(),
                    },
                    scaled,
                );
                (!inside).then(|| {
                    let angular = (ONE - scaled).arg().abs() - omega;
                    let radial = scaled.norm() - 1.0;
                    Violation { eig: z, margin: angular.max(radial).max(0.0) }
                })
            }
            RegionKind::StolzClosure { sigma, a } => {
                let sigma_inflated = sigma * (1.0 + tol);
                let inflated = RegionDescriptor {
                    kind: RegionKind::StolzClosure { sigma: sigma_inflated, a },
                    provenance: String::new(),
                };
                (!contains(&inflated, z)).then(|| {
                    let residual =
                        (ONE - z).norm().powf(a) - sigma_inflated * (1.0 - modulus);
                    // Degenerate sigma <= 1, a = 1 regions reject everything
                    // but 1 even when the residual is non-positive; fall back
                    // to the distance from the lone member.
                    let margin = if residual > 0.0 { residual } else { (z - ONE).norm() };
                    Violation { eig: z, margin }
                })
            }
        };
        if let Some(v) = violation {
            violations.push(v);
        }
    }
    SpectrumCheck { violations, tested: eigs.len(), tol }
}

// ---------------------------------------------------------------------------
// Emission formats consumed by the CLI.

/// Boundary polyline as CSV with header `theta,re,im`, 17 significant digits.
pub fn boundary_csv(region: &RegionDescriptor, n: usize) -> String {
    let mut out = String::from("theta,re,im\n");
    for (j, z) in boundary_points(region, n).iter().enumerate() {
        let theta = std::f64::consts::TAU * j as f64 / n as f64;
        out.push_str(&format!("{:.16e},{:.16e},{:.16e}\n", theta, z.re, z.im));
    }
    out
}

const SVG_DISK_TINT: &str = "#cfd8ea";
const SVG_CIRCLE_STROKE: &str = "#30435f";
const SVG_AXIS: &str = "#d9d9d9";
const SVG_CYAN: &str = "#00bcd4";

fn svg_path(points: &[Complex64]) -> String {
    let mut d = String::new();
    for (i, z) in points.iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        // SVG y-axis points down; negate the imaginary part.
        d.push_str(&format!("{}{:.6},{:.6}", cmd, z.re, -z.im));
    }
    d.push('Z');
    d
}

/// Deterministic SVG rendering: the admissible region is painted white over
/// a tinted unit disk, with pure path fills only (byte-identical output for
/// identical inputs). `highlight_border` adds a cyan stroke along the region
/// boundary.
pub fn region_svg(region: &RegionDescriptor, n: usize, highlight_border: bool) -> String {
    let pts = boundary_points(region, n.max(16));
    let mut svg = String::new();
    svg.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" \
         viewBox=\"-1.05 -1.05 2.1 2.1\">\n",
    );
    svg.push_str("<rect x=\"-1.05\" y=\"-1.05\" width=\"2.1\" height=\"2.1\" fill=\"#ffffff\"/>\n");
    svg.push_str(&format!(
        "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"{SVG_DISK_TINT}\"/>\n"
    ));
    svg.push_str(&format!(
        "<path d=\"{}\" fill=\"#ffffff\"/>\n",
        svg_path(&pts)
    ));
    svg.push_str(&format!(
        "<line x1=\"-1.05\" y1=\"0\" x2=\"1.05\" y2=\"0\" stroke=\"{SVG_AXIS}\" stroke-width=\"0.004\"/>\n"
    ));
    svg.push_str(&format!(
        "<line x1=\"0\" y1=\"-1.05\" x2=\"0\" y2=\"1.05\" stroke=\"{SVG_AXIS}\" stroke-width=\"0.004\"/>\n"
    ));
    svg.push_str(&format!(
        "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"{SVG_CIRCLE_STROKE}\" stroke-width=\"0.008\"/>\n"
    ));
    if highlight_border {
        svg.push_str(&format!(
            "<path d=\"{}\" fill=\"none\" stroke=\"{SVG_CYAN}\" stroke-width=\"0.01\"/>\n",
            svg_path(&pts)
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c64(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn stolz(sigma: f64, a: f64) -> RegionDescriptor {
        RegionDescriptor::new(RegionKind::StolzClosure { sigma, a }, "test").unwrap()
    }

    #[test]
    fn region_dispatch_matches_parameter_cases() {
        let r = region_for(&RKParams { alpha: 0.25, beta: 0.25, c: 2.0 });
        match r.kind {
            RegionKind::OmegaGap { q, a } => {
                let c_torus =
                    torus_constant(&RKParams { alpha: 0.25, beta: 0.25, c: 2.0 }).unwrap();
                assert_relative_eq!(q, 1.0 / c_torus, max_relative = 1e-14);
                assert_relative_eq!(a, 0.25 / 0.75, max_relative = 1e-14);
            }
            other => panic!("expected OmegaGap, got {other:?}"),
        }
        // 1 is excluded from the gap region.
        assert!(!contains(&r, c64(1.0, 0.0)));

        let r = region_for(&RKParams { alpha: 0.5, beta: 0.5, c: 2.0 });
        assert_eq!(r.kind, RegionKind::StolzClosure { sigma: 16.0, a: 1.0 });
        assert!(r.provenance.contains("arccos"));

        let r = region_for(&RKParams { alpha: 0.75, beta: 0.5, c: 2.0 });
        match r.kind {
            RegionKind::StolzClosure { sigma, a } => {
                assert_relative_eq!(sigma, 2.0 * 45.254833995939045, max_relative = 1e-12);
                assert_relative_eq!(a, 1.5, max_relative = 1e-14);
            }
            other => panic!("expected StolzClosure, got {other:?}"),
        }

        let r = region_for(&RKParams { alpha: 0.5, beta: 1.5, c: 2.0 });
        assert_eq!(r.kind, RegionKind::ClosedUnitDisk);
    }

    #[test]
    fn contains_examples() {
        assert!(contains(&stolz(2.0, 1.0), c64(1.0, 0.0)));
        // sigma = 1, a = 1 degenerates to the single point 1.
        assert!(!contains(&stolz(1.0, 1.0), c64(0.5, 0.0)));
        assert!(contains(&stolz(1.0, 1.0), c64(1.0, 0.0)));
        // |1 - 0|^1.2 = 1 <= 1.5.
        assert!(contains(&stolz(1.5, 1.2), c64(0.0, 0.0)));
    }

    #[test]
    fn unit_disk_boundary_samples() {
        let disk = RegionDescriptor::new(RegionKind::ClosedUnitDisk, "test").unwrap();
        let pts = boundary_points(&disk, 4);
        let want = [c64(1.0, 0.0), c64(0.0, 1.0), c64(-1.0, 0.0), c64(0.0, -1.0)];
        for (p, w) in pts.iter().zip(&want) {
            assert!((p - w).norm() < 1e-14);
        }
    }

    /// Closed-form radial gap r(theta) = 1 - 2 sin(theta/2), clipped at 0,
    /// cross-checked against a bisection oracle on the membership predicate.
    #[test]
    fn omega_gap_profile_against_bisection_oracle() {
        let gap =
            RegionDescriptor::new(RegionKind::OmegaGap { q: 1.0, a: 1.0 }, "test").unwrap();
        let n = 64;
        let pts = boundary_points(&gap, n);
        for (j, p) in pts.iter().enumerate() {
            let theta = std::f64::consts::TAU * j as f64 / n as f64;
            let formula = (1.0 - 2.0 * (theta / 2.0).sin().abs()).max(0.0);
            assert_relative_eq!(p.norm(), formula, epsilon = 1e-12);
            // Bisection oracle: largest radius that still belongs.
            if theta != 0.0 {
                let (mut lo, mut hi) = (0.0, 1.0);
                for _ in 0..60 {
                    let mid = 0.5 * (lo + hi);
                    if contains(&gap, Complex64::from_polar(mid, theta)) {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                assert!((lo - formula).abs() < 1e-10);
            }
        }
    }

    /// On the negative real axis the Stolz boundary with sigma = 2, a = 1
    /// solves 1 - z = 2 (1 + z), i.e. z = -1/3.
    #[test]
    fn stolz_boundary_crosses_negative_axis_at_one_third() {
        let region = stolz(2.0, 1.0);
        let pts = boundary_points(&region, 64);
        let at_pi = pts[32];
        assert_relative_eq!(at_pi.re, -1.0 / 3.0, epsilon = 1e-10);
        assert!(at_pi.im.abs() < 1e-12);
    }

    #[test]
    fn boundary_points_satisfy_defining_equation() {
        for &(sigma, a) in &[(2.0, 1.0), (16.0, 1.0), (90.5, 1.5), (3.0, 2.0)] {
            let region = stolz(sigma, a);
            for z in boundary_points(&region, 128) {
                let residual = (ONE - z).norm().powf(a) - sigma * (1.0 - z.norm());
                assert!(
                    residual.abs() <= 1e-10,
                    "residual {residual} at {z} (sigma={sigma}, a={a})"
                );
            }
        }
    }

    #[test]
    fn kreiss_floor_examples() {
        assert!(kreiss_floor_ok(&RKParams { alpha: 1.0, beta: 0.0, c: 1.0 }).unwrap());
        assert!(kreiss_floor_ok(&RKParams { alpha: 0.75, beta: 0.5, c: 2.0 }).unwrap());
        // C_{2,0} = 1.5 < 2^1: vacuous triple.
        assert!(!kreiss_floor_ok(&RKParams { alpha: 2.0, beta: 0.0, c: 1.5 }).unwrap());
        assert!(kreiss_floor_ok(&RKParams { alpha: 1.0, beta: 1.0, c: 1.0 }).is_err());
    }

    #[test]
    fn check_spectrum_examples() {
        let region = stolz(2.0, 1.0);
        let check = check_spectrum(&[c64(0.0, 0.0)], &region, 0.0);
        assert!(check.pass());

        let gap = region_for(&RKParams { alpha: 0.25, beta: 0.25, c: 2.0 });
        let check = check_spectrum(&[c64(1.0, 0.0)], &gap, 0.0);
        assert_eq!(check.violations.len(), 1);

        // Points constructed strictly inside a wider Stolz region.
        let inner = crate::zoo::stolz_spectrum(1.5, 1.0, 20).unwrap();
        let check = check_spectrum(&inner, &stolz(2.0, 1.0), 0.0);
        assert!(check.pass(), "violations: {:?}", check.violations);
    }

    #[test]
    fn sector_membership_agrees_with_profile() {
        let omega = std::f64::consts::FRAC_PI_3;
        let sector =
            RegionDescriptor::new(RegionKind::SectorAtOne { omega }, "test").unwrap();
        // z = i sits on the unit circle and satisfies |arg(1 - i)| = pi/4.
        assert!(contains(&sector, c64(0.0, 1.0)));
        assert!(contains(&sector, c64(-1.0, 0.0)));
        assert!(!contains(&sector, c64(0.9999, 0.01)));
        for z in boundary_points(&sector, 256) {
            assert!(z.norm() <= 1.0 + 1e-12);
        }
    }

    /// The Stolz closure with sigma = C embeds in the sector of angle
    /// arccos(1/C): both phrasings of the Ritt-type localization, and the
    /// inclusion is the provable direction.
    #[test]
    fn stolz_closure_embeds_in_companion_sector() {
        let c_torus = 16.0;
        let region = stolz(c_torus, 1.0);
        let sector = RegionDescriptor::new(
            RegionKind::SectorAtOne { omega: (1.0 / c_torus).acos() },
            "test",
        )
        .unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut hits = 0;
        for _ in 0..1000 {
            let z = c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            if contains(&region, z) {
                hits += 1;
                assert!(contains(&sector, z), "Stolz member {z} escaped the sector");
            }
        }
        assert!(hits > 50, "sample should hit the region ({hits})");
        // Boundary points belong to both closures, up to boundary tolerance.
        for z in boundary_points(&region, 1000) {
            let shrunk = z * 0.999999999;
            assert!(contains(&sector, shrunk));
        }
    }

    #[test]
    fn csv_and_svg_are_deterministic() {
        let region = region_for(&RKParams { alpha: 0.5, beta: 0.5, c: 2.0 });
        let a = boundary_csv(&region, 64);
        let b = boundary_csv(&region, 64);
        assert_eq!(a, b);
        assert!(a.starts_with("theta,re,im\n"));
        assert_eq!(a.lines().count(), 65);

        let s1 = region_svg(&region, 256, false);
        let s2 = region_svg(&region, 256, false);
        assert_eq!(s1, s2);
        assert!(s1.contains("viewBox=\"-1.05 -1.05 2.1 2.1\""));
        let s3 = region_svg(&region, 256, true);
        assert!(s3.contains(SVG_CYAN));
    }

    proptest! {
        /// Nesting: sigma1 <= sigma2 implies containment transfers upward.
        #[test]
        fn stolz_nesting(
            re in -1.0f64..1.0,
            im in -1.0f64..1.0,
            sigma in 1.01f64..20.0,
            bump in 0.0f64..10.0,
            a in 1.0f64..3.0,
        ) {
            let z = c64(re, im);
            let small = stolz(sigma, a);
            let large = stolz(sigma + bump, a);
            if contains(&small, z) {
                prop_assert!(contains(&large, z));
            }
        }

        /// Convexity for a >= 1: midpoints of members are members.
        #[test]
        fn stolz_midpoint_convexity(
            seed in 0u64..1000,
            sigma in 1.5f64..20.0,
            a in 1.0f64..3.0,
        ) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let region = stolz(sigma, a);
            let mut found = 0;
            while found < 4 {
                let z1 = c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                let z2 = c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                if contains(&region, z1) && contains(&region, z2) {
                    found += 1;
                    let mid = (z1 + z2) * 0.5;
                    // Allow an epsilon of slack for boundary round-off.
                    let grown = stolz(sigma * (1.0 + 1e-12), a);
                    prop_assert!(contains(&grown, mid));
                }
            }
        }

        /// All variants are symmetric about the real axis.
        #[test]
        fn conjugation_symmetry(
            re in -1.2f64..1.2,
            im in -1.2f64..1.2,
            q in 0.05f64..1.0,
            a in 0.5f64..3.0,
            sigma in 1.0f64..20.0,
            omega in 0.0f64..1.5,
        ) {
            let z = c64(re, im);
            let zc = z.conj();
            let regions = vec![
                RegionDescriptor::new(RegionKind::ClosedUnitDisk, "t").unwrap(),
                RegionDescriptor::new(RegionKind::OpenDiskUnionOne, "t").unwrap(),
                RegionDescriptor::new(RegionKind::OmegaGap { q, a }, "t").unwrap(),
                RegionDescriptor::new(
                    RegionKind::SectorAtOne {
                        omega: omega.min(std::f64::consts::FRAC_PI_2 - 1e-4),
                    },
                    "t",
                ).unwrap(),
                RegionDescriptor::new(
                    RegionKind::StolzClosure { sigma, a: a.max(1.0) },
                    "t",
                ).unwrap(),
            ];
            for r in &regions {
                prop_assert_eq!(contains(r, z), contains(r, zc));
            }
        }
    }
}
