//! Test operators with known spectra and known condition status, Cesàro
//! machinery, and the finite-dimensional `l^p` interpolation check.

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::linalg::{singular_extremes, ComplexMatrix, LuFactors, MAX_DIM};
use crate::rk::RKParams;

const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

/// Diagonal matrix with exactly the given spectrum.
pub fn diag_from_spectrum(points: &[Complex64]) -> Result<ComplexMatrix> {
    if points.is_empty() || points.len() > MAX_DIM {
        return Err(CoreError::domain(format!(
            "spectrum size must lie in [1, {MAX_DIM}], got {}",
            points.len()
        )));
    }
    ComplexMatrix::diagonal(points)
}

/// `d x d` Jordan block with eigenvalue `rho`.
pub fn jordan(rho: Complex64, d: usize) -> Result<ComplexMatrix> {
    let mut m = ComplexMatrix::zero(d)?;
    for i in 0..d {
        m[(i, i)] = rho;
        if i + 1 < d {
            m[(i, i + 1)] = ONE;
        }
    }
    Ok(m)
}

/// Points on the boundary curve `|1 - z|^a = sigma (1 - |z|)` with
/// `|1 - z| = 2^{-j}` for `j = 1..count`, in the upper half-plane and
/// accumulating at 1. Each point is located radially by bisection on the
/// circle `|1 - z| = 2^{-j}` to `1e-12`.
pub fn stolz_spectrum(sigma: f64, a: f64, count: usize) -> Result<Vec<Complex64>> {
    if !(sigma > 1.0) {
        return Err(CoreError::domain(format!("need sigma > 1, got {sigma}")));
    }
    if !(a >= 1.0) {
        return Err(CoreError::domain(format!("need a >= 1, got {a}")));
    }
    if count == 0 {
        return Err(CoreError::domain("count must be >= 1"));
    }
    let mut points = Vec::with_capacity(count);
    for j in 1..=count {
        let w = 2f64.powi(-(j as i32));
        let target = 1.0 - w.powf(a) / sigma;
        // On the circle z = 1 - w e^{-i phi}, |z| increases with phi on
        // [0, pi]; bisect for the phi whose modulus hits the target.
        let z_at = |phi: f64| ONE - Complex64::from_polar(w, -phi);
        let (mut lo, mut hi) = (0.0f64, std::f64::consts::PI);
        if z_at(lo).norm() > target || z_at(hi).norm() < target {
            return Err(CoreError::InfeasibleGeometry(format!(
                "no boundary point with |1-z| = 2^-{j} on sigma = {sigma}, a = {a}"
            )));
        }
        while hi - lo > 1e-12 {
            let mid = 0.5 * (lo + hi);
            if z_at(mid).norm() < target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        // The lower bracket end sits a hair inside the closure, so emitted
        // points always pass the membership test.
        points.push(z_at(lo));
    }
    Ok(points)
}

// ---------------------------------------------------------------------------
// Cesàro machinery.

/// Cache of Cesàro numbers `k_alpha(0..=capacity)` computed by the ratio
/// recurrence `k_alpha(n) = k_alpha(n-1) (n - 1 + alpha) / n`, which is
/// overflow-free far past the `n <= 1e4` range used here.
#[derive(Debug, Clone)]
pub struct CesaroContext {
    alpha: f64,
    cache: Vec<f64>,
}

fn cesaro_sequence(alpha: f64, n_max: usize) -> Vec<f64> {
    let mut cache = Vec::with_capacity(n_max + 1);
    cache.push(1.0);
    for n in 1..=n_max {
        let prev = cache[n - 1];
        cache.push(prev * (n as f64 - 1.0 + alpha) / n as f64);
    }
    cache
}

impl CesaroContext {
    pub fn new(alpha: f64, capacity: usize) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(CoreError::domain(format!("alpha must be finite > 0, got {alpha}")));
        }
        Ok(Self { alpha, cache: cesaro_sequence(alpha, capacity) })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn capacity(&self) -> usize {
        self.cache.len() - 1
    }
}

/// `k_alpha(n)` from the context cache. Panics past the cache capacity
/// (documented precondition).
pub fn cesaro_number(ctx: &CesaroContext, n: usize) -> f64 {
    assert!(
        n <= ctx.capacity(),
        "cesaro_number({n}) exceeds cache capacity {}",
        ctx.capacity()
    );
    ctx.cache[n]
}

/// Cesàro mean of order `alpha`:
/// `M(n) = k_{alpha+1}(n)^{-1} sum_{j=0}^{n} k_alpha(n-j) T^j`,
/// computed with running powers.
pub fn cesaro_mean(t: &ComplexMatrix, ctx: &CesaroContext, n: usize) -> Result<ComplexMatrix> {
    if n > 10_000 {
        return Err(CoreError::domain(format!("n must be <= 1e4, got {n}")));
    }
    if n > ctx.capacity() {
        return Err(CoreError::domain(format!(
            "cache capacity {} is below n = {n}",
            ctx.capacity()
        )));
    }
    let norm_weight = cesaro_sequence(ctx.alpha + 1.0, n)[n];
    let mut acc = ComplexMatrix::identity(t.dim())?.scale(Complex64::new(
        cesaro_number(ctx, n),
        0.0,
    ));
    let mut power = ComplexMatrix::identity(t.dim())?;
    for j in 1..=n {
        power = t.mul(&power);
        if power.max_abs_entry() > 1e300 {
            return Err(CoreError::OverflowGuard { n: j });
        }
        acc = acc.add(&power.scale(Complex64::new(cesaro_number(ctx, n - j), 0.0)));
    }
    Ok(acc.scale(Complex64::new(1.0 / norm_weight, 0.0)))
}

/// `max_{8 <= ... n <= n_max} ||M(n)||`: an empirical lower bound for the
/// Cesàro boundedness constant. Powers are stored once, so the sweep costs
/// one multiply per step plus the weighted sums.
pub fn c_alpha_bound_estimate(
    t: &ComplexMatrix,
    ctx: &CesaroContext,
    n_max: usize,
) -> Result<f64> {
    if n_max < 8 {
        return Err(CoreError::domain(format!("n_max must be >= 8, got {n_max}")));
    }
    if n_max > 10_000 {
        return Err(CoreError::domain(format!("n_max must be <= 1e4, got {n_max}")));
    }
    if n_max > ctx.capacity() {
        return Err(CoreError::domain(format!(
            "cache capacity {} is below n_max = {n_max}",
            ctx.capacity()
        )));
    }
    let weights_next = cesaro_sequence(ctx.alpha + 1.0, n_max);
    let mut powers: Vec<ComplexMatrix> = Vec::with_capacity(n_max + 1);
    powers.push(ComplexMatrix::identity(t.dim())?);
    for j in 1..=n_max {
        let next = t.mul(&powers[j - 1]);
        if next.max_abs_entry() > 1e300 {
            return Err(CoreError::OverflowGuard { n: j });
        }
        powers.push(next);
    }
    let mut best = 0.0f64;
    for n in 0..=n_max {
        let mut acc = ComplexMatrix::zero(t.dim())?;
        for (j, power) in powers.iter().enumerate().take(n + 1) {
            acc = acc.add(&power.scale(Complex64::new(cesaro_number(ctx, n - j), 0.0)));
        }
        let mean = acc.scale(Complex64::new(1.0 / weights_next[n], 0.0));
        let (norm, _) = singular_extremes(&mean);
        best = best.max(norm);
    }
    Ok(best)
}

/// Cesàro boundedness of order `alpha` with constant `c` transfers to the
/// resolvent condition at `(0, alpha + 1)`: the chord bound
/// `|lambda - 1| <= 2 |lambda|` converts the boundary estimate, picking up
/// `2^alpha`, and the constant floors at 1.
pub fn rk_from_c_alpha(alpha: f64, c: f64) -> Result<RKParams> {
    if !(alpha >= 0.0 && alpha.is_finite()) {
        return Err(CoreError::domain(format!("alpha must be finite >= 0, got {alpha}")));
    }
    if !(c >= 1.0 && c.is_finite()) {
        return Err(CoreError::domain(format!("c must be finite >= 1, got {c}")));
    }
    RKParams::new(0.0, alpha + 1.0, (2f64.powf(alpha) * c).max(1.0))
}

// ---------------------------------------------------------------------------
// l^p norms and interpolation.

/// Exactly computable operator norms: `p = 1` (max column sum),
/// `p = infinity` (max row sum), `p = 2` (largest singular value).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LpNorm {
    One,
    Two,
    Inf,
}

pub fn lp_operator_norm(t: &ComplexMatrix, p: LpNorm) -> f64 {
    let d = t.dim();
    match p {
        LpNorm::One => (0..d)
            .map(|j| (0..d).map(|i| t[(i, j)].norm()).sum::<f64>())
            .fold(0.0, f64::max),
        LpNorm::Inf => (0..d)
            .map(|i| (0..d).map(|j| t[(i, j)].norm()).sum::<f64>())
            .fold(0.0, f64::max),
        LpNorm::Two => singular_extremes(t).0,
    }
}

/// Result of interpolating a Kreiss-type bound at `p0` against a Ritt-type
/// bound at `p1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InterpolatedBound {
    /// `1/p = (1-theta)/p0 + theta/p1`.
    pub p: f64,
    pub params: RKParams,
}

/// Hölder interpolation of the two resolvent bounds: constants combine as
/// the geometric mix `c0^(1-theta) c1^theta` and the exponents land on
/// `(theta, 1 - theta)`, a Ritt pair.
pub fn interpolate_rk(c0: f64, p0: f64, c1: f64, p1: f64, theta: f64) -> Result<InterpolatedBound> {
    if !(theta > 0.0 && theta < 1.0) {
        return Err(CoreError::domain(format!("theta must lie in (0,1), got {theta}")));
    }
    for (label, c) in [("c0", c0), ("c1", c1)] {
        if !(c >= 1.0 && c.is_finite()) {
            return Err(CoreError::domain(format!("{label} must be finite >= 1, got {c}")));
        }
    }
    for (label, p) in [("p0", p0), ("p1", p1)] {
        if !(p >= 1.0) {
            return Err(CoreError::domain(format!("{label} must lie in [1, inf], got {p}")));
        }
    }
    let inv_p = (1.0 - theta) / p0 + theta / p1;
    let p = if inv_p == 0.0 { f64::INFINITY } else { 1.0 / inv_p };
    let c = c0.powf(1.0 - theta) * c1.powf(theta);
    Ok(InterpolatedBound {
        p,
        params: RKParams::new(theta, 1.0 - theta, c.max(1.0))?,
    })
}

/// Outcome of a sampled `l^p` ratio check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LpRatioReport {
    pub max_ratio: f64,
    pub bound: f64,
    pub samples: usize,
    pub pass: bool,
}

fn lp_vector_norm(v: &[Complex64], p: f64) -> f64 {
    if p.is_infinite() {
        return v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    }
    v.iter().map(|z| z.norm().powf(p)).sum::<f64>().powf(1.0 / p)
}

/// Draw `samples` random vectors (independent uniform phase, unit-exponential
/// magnitude per entry) and compare `||R(lambda,T) x||_p / ||x||_p` against
/// `bound`. This can falsify an interpolated inequality but never certify
/// it; the pass verdict allows a `1e-12` relative grace for round-off on
/// exactly-tight cases.
pub fn sampled_lp_ratio_check(
    t: &ComplexMatrix,
    lambda: Complex64,
    p: f64,
    bound: f64,
    samples: usize,
    rng: &mut impl Rng,
) -> Result<LpRatioReport> {
    if !(lambda.norm() > 1.0) {
        return Err(CoreError::domain("need |lambda| > 1"));
    }
    if !(p > 1.0) {
        return Err(CoreError::domain(format!("p must lie in (1, inf], got {p}")));
    }
    let shifted = t.shifted_from(lambda);
    let lu = LuFactors::new(&shifted).map_err(|_| CoreError::SingularResolvent { lambda })?;
    if lu.pivot_ratio() < 1e-14 {
        return Err(CoreError::SingularResolvent { lambda });
    }
    let dim = t.dim();
    let mut max_ratio = 0.0f64;
    let mut x = vec![Complex64::new(0.0, 0.0); dim];
    for _ in 0..samples {
        for slot in x.iter_mut() {
            let magnitude = -(1.0 - rng.gen::<f64>()).ln();
            let phase = rng.gen_range(0.0..std::f64::consts::TAU);
            *slot = Complex64::from_polar(magnitude, phase);
        }
        let nx = lp_vector_norm(&x, p);
        if nx == 0.0 {
            continue;
        }
        let y = lu.solve(&x);
        max_ratio = max_ratio.max(lp_vector_norm(&y, p) / nx);
    }
    Ok(LpRatioReport {
        max_ratio,
        bound,
        samples,
        pass: max_ratio <= bound * (1.0 + 1e-12),
    })
}

// ---------------------------------------------------------------------------
// Seeded random operators for experiments and test suites.

/// Random upper-triangular matrix with diagonal moduli in
/// `[0.2 rho_cap, rho_cap]` and strictly-upper entries bounded by 0.5, so
/// the spectral radius is capped by construction.
pub fn random_upper_triangular(
    dim: usize,
    rho_cap: f64,
    rng: &mut impl Rng,
) -> Result<ComplexMatrix> {
    let mut m = ComplexMatrix::zero(dim)?;
    for i in 0..dim {
        let r = rng.gen_range(0.2 * rho_cap..=rho_cap);
        let th = rng.gen_range(0.0..std::f64::consts::TAU);
        m[(i, i)] = Complex64::from_polar(r, th);
        for j in i + 1..dim {
            m[(i, j)] = Complex64::new(rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5));
        }
    }
    Ok(m)
}

/// Random entrywise-nonnegative real matrix rescaled so that both the max
/// column sum and max row sum stay at `norm_cap`.
pub fn random_nonnegative(dim: usize, norm_cap: f64, rng: &mut impl Rng) -> Result<ComplexMatrix> {
    let mut m = ComplexMatrix::zero(dim)?;
    for i in 0..dim {
        for j in 0..dim {
            m[(i, j)] = Complex64::new(rng.gen_range(0.0..1.0), 0.0);
        }
    }
    let reach = lp_operator_norm(&m, LpNorm::One).max(lp_operator_norm(&m, LpNorm::Inf));
    Ok(m.scale(Complex64::new(norm_cap / reach, 0.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::growth::{classify_powers, is_ritt, RegimeKind};
    use crate::regions::{contains, RegionDescriptor, RegionKind};
    use crate::rk::rk_bound;
    use approx::assert_relative_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c64(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn diag_constructors() {
        let m = diag_from_spectrum(&[c64(0.0, 0.0)]).unwrap();
        assert_eq!(m.dim(), 1);
        let m = diag_from_spectrum(&[c64(0.5, 0.0), c64(-0.5, 0.0)]).unwrap();
        assert_eq!(m.diag(), vec![c64(0.5, 0.0), c64(-0.5, 0.0)]);
        let pts = stolz_spectrum(2.0, 1.0, 20).unwrap();
        let m = diag_from_spectrum(&pts).unwrap();
        assert_eq!(m.dim(), 20);
        assert!(diag_from_spectrum(&[]).is_err());
    }

    #[test]
    fn jordan_shapes() {
        let j = jordan(c64(0.0, 0.0), 2).unwrap();
        assert_eq!(crate::linalg::mat_power(&j, 2), ComplexMatrix::zero(2).unwrap());
        let j = jordan(c64(1.0, 0.0), 2).unwrap();
        assert_eq!(j[(0, 1)], c64(1.0, 0.0));
        let j = jordan(c64(0.9, 0.0), 3).unwrap();
        assert_eq!(j.diag(), vec![c64(0.9, 0.0); 3]);
        assert!(j.is_triangular());
    }

    /// First point of the sigma = 2, a = 1 family: |1 - z| = 1/2 and
    /// 1 - |z| = 1/4, cross-checked against the circle-intersection oracle
    /// x = (1 + |z|^2 - w^2) / 2.
    #[test]
    fn stolz_spectrum_first_point_against_intersection_oracle() {
        let pts = stolz_spectrum(2.0, 1.0, 1).unwrap();
        let z = pts[0];
        assert_relative_eq!((ONE - z).norm(), 0.5, epsilon = 1e-10);
        assert_relative_eq!(1.0 - z.norm(), 0.25, epsilon = 1e-10);
        let rho: f64 = 0.75;
        let w: f64 = 0.5;
        let x = (1.0 + rho * rho - w * w) / 2.0;
        let y = (rho * rho - x * x).sqrt();
        assert!((z - c64(x, y)).norm() < 1e-9, "z = {z}, oracle = ({x}, {y})");
        assert!(z.im > 0.0);
    }

    #[test]
    fn stolz_spectrum_residuals_and_accumulation() {
        let pts = stolz_spectrum(2.0, 1.0, 5).unwrap();
        for (j, z) in pts.iter().enumerate() {
            let ratio = (ONE - z).norm() / (1.0 - z.norm());
            assert!((ratio - 2.0).abs() < 1e-9, "ratio {ratio}");
            assert_relative_eq!((ONE - z).norm(), 2f64.powi(-(j as i32 + 1)), epsilon = 1e-10);
        }
        // Boundary points belong to the closure.
        let region =
            RegionDescriptor::new(RegionKind::StolzClosure { sigma: 2.0, a: 1.0 }, "t").unwrap();
        for z in &pts {
            assert!(contains(&region, *z));
        }
        // Deeper residual check on a curved family.
        let pts = stolz_spectrum(3.0, 1.5, 12).unwrap();
        for z in &pts {
            let residual = (ONE - z).norm().powf(1.5) - 3.0 * (1.0 - z.norm());
            assert!(residual.abs() < 1e-9, "residual {residual}");
        }
    }

    #[test]
    fn cesaro_numbers_by_recurrence() {
        let ctx = CesaroContext::new(1.0, 32).unwrap();
        assert_relative_eq!(cesaro_number(&ctx, 0), 1.0);
        assert_relative_eq!(cesaro_number(&ctx, 17), 1.0);
        let ctx = CesaroContext::new(2.0, 8).unwrap();
        assert_relative_eq!(cesaro_number(&ctx, 5), 6.0);
        let ctx = CesaroContext::new(0.5, 4).unwrap();
        // k_{1/2}: 1, 1/2, 3/8, 5/16, ...
        assert_relative_eq!(cesaro_number(&ctx, 1), 0.5);
        assert_relative_eq!(cesaro_number(&ctx, 2), 0.375);
        assert_relative_eq!(cesaro_number(&ctx, 3), 0.3125);
    }

    /// Exact rational oracle for the normalization identity
    /// sum_{j<=n} k_alpha(j) = k_{alpha+1}(n) at half-integer alpha.
    #[test]
    fn cesaro_normalization_rational_oracle() {
        use num::BigRational;
        use num::FromPrimitive;
        for two_alpha in [1i64, 2, 5] {
            let alpha = BigRational::from_i64(two_alpha).unwrap()
                / BigRational::from_i64(2).unwrap();
            let up = &alpha + BigRational::from_i64(1).unwrap();
            let mut k_a = BigRational::from_i64(1).unwrap();
            let mut k_a1 = BigRational::from_i64(1).unwrap();
            let mut partial = k_a.clone();
            for n in 1..=30i64 {
                let nn = BigRational::from_i64(n).unwrap();
                let shift = BigRational::from_i64(n - 1).unwrap();
                k_a = k_a * ((&shift + &alpha) / &nn);
                k_a1 = k_a1 * ((&shift + &up) / &nn);
                partial += &k_a;
                assert_eq!(partial, k_a1, "identity fails at n = {n}");
            }
            // Float recurrence tracks the exact value.
            let af = two_alpha as f64 / 2.0;
            let ctx = CesaroContext::new(af, 30).unwrap();
            let exact: f64 = {
                let numer: f64 = k_a.numer().to_string().parse().unwrap();
                let denom: f64 = k_a.denom().to_string().parse().unwrap();
                numer / denom
            };
            assert_relative_eq!(cesaro_number(&ctx, 30), exact, max_relative = 1e-12);
        }
    }

    #[test]
    fn cesaro_mean_of_identity_is_identity() {
        let id = ComplexMatrix::identity(3).unwrap();
        for &alpha in &[0.5, 1.0, 2.5] {
            let ctx = CesaroContext::new(alpha, 64).unwrap();
            for n in [0, 1, 5, 32] {
                let m = cesaro_mean(&id, &ctx, n).unwrap();
                let err = m.sub(&id).frobenius_norm();
                assert!(err < 1e-11, "alpha = {alpha}, n = {n}: {err}");
            }
        }
    }

    /// For T = 0 only the j = 0 term survives:
    /// M(n) = k_alpha(n) / k_{alpha+1}(n) I.
    #[test]
    fn cesaro_mean_of_zero_matrix() {
        let zero = ComplexMatrix::zero(2).unwrap();
        let ctx = CesaroContext::new(1.5, 16).unwrap();
        let upper = cesaro_sequence(2.5, 16);
        for n in [1usize, 4, 9] {
            let m = cesaro_mean(&zero, &ctx, n).unwrap();
            let want = cesaro_number(&ctx, n) / upper[n];
            assert_relative_eq!(m[(0, 0)].re, want, max_relative = 1e-13);
            assert_relative_eq!(m[(1, 1)].re, want, max_relative = 1e-13);
        }
    }

    /// Scalar oracle for T = diag(-1): the order-1 mean of (-1)^j is
    /// (sum of alternating signs) / (n + 1).
    #[test]
    fn cesaro_mean_alternating_scalar_oracle() {
        let t = ComplexMatrix::diagonal(&[c64(-1.0, 0.0)]).unwrap();
        let ctx = CesaroContext::new(1.0, 128).unwrap();
        for n in [3usize, 10, 25, 64] {
            let m = cesaro_mean(&t, &ctx, n).unwrap();
            let alternating: f64 = (0..=n).map(|j| if j % 2 == 0 { 1.0 } else { -1.0 }).sum();
            assert_relative_eq!(
                m[(0, 0)].re,
                alternating / (n as f64 + 1.0),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn c_alpha_estimates() {
        let id = ComplexMatrix::identity(2).unwrap();
        let ctx = CesaroContext::new(1.0, 128).unwrap();
        let c = c_alpha_bound_estimate(&id, &ctx, 100).unwrap();
        assert_relative_eq!(c, 1.0, max_relative = 1e-10);

        let t = ComplexMatrix::diagonal(&[c64(-1.0, 0.0)]).unwrap();
        let c = c_alpha_bound_estimate(&t, &ctx, 100).unwrap();
        assert!(c <= 1.0 + 1e-12, "alternating means stay Cesàro bounded: {c}");

        // Jordan block at 1 is not Cesàro-1 bounded: the off-diagonal entry
        // of the mean grows like n/2.
        let j = jordan(c64(1.0, 0.0), 2).unwrap();
        let ctx = CesaroContext::new(1.0, 1024).unwrap();
        let c_small = c_alpha_bound_estimate(&j, &ctx, 100).unwrap();
        let c_large = c_alpha_bound_estimate(&j, &ctx, 1000).unwrap();
        assert!(c_large >= 9.0 * c_small, "growth {c_small} -> {c_large}");
        assert!((c_large - 500.0).abs() / 500.0 < 0.01, "c_large = {c_large}");
    }

    #[test]
    fn rk_from_c_alpha_cases() {
        let p = rk_from_c_alpha(0.0, 1.0).unwrap();
        assert_eq!((p.alpha, p.beta, p.c), (0.0, 1.0, 1.0));
        let p = rk_from_c_alpha(1.0, 1.0).unwrap();
        assert_eq!((p.alpha, p.beta, p.c), (0.0, 2.0, 2.0));
        let p = rk_from_c_alpha(2.0, 3.0).unwrap();
        assert_eq!((p.alpha, p.beta, p.c), (0.0, 3.0, 12.0));
    }

    /// The transfer is lossy by design: a Cesàro-alpha operator's powers grow
    /// like n^alpha, but the classified regime of the transferred parameters
    /// is the strictly weaker n^(alpha+1).
    #[test]
    fn rk_from_c_alpha_classifies_one_power_worse() {
        for &alpha in &[0.5, 1.0, 2.0] {
            let params = rk_from_c_alpha(alpha, 1.0).unwrap();
            let regime = classify_powers(params.alpha, params.beta).unwrap();
            assert_eq!(regime.kind, RegimeKind::Poly);
            assert_relative_eq!(regime.exponent, alpha + 1.0, max_relative = 1e-12);
        }
    }

    #[test]
    fn lp_norm_textbook_values() {
        let t = ComplexMatrix::new(
            2,
            vec![c64(1.0, 0.0), c64(2.0, 0.0), c64(3.0, 0.0), c64(4.0, 0.0)],
        )
        .unwrap();
        assert_relative_eq!(lp_operator_norm(&t, LpNorm::One), 6.0);
        assert_relative_eq!(lp_operator_norm(&t, LpNorm::Inf), 7.0);

        let id = ComplexMatrix::identity(3).unwrap();
        for p in [LpNorm::One, LpNorm::Two, LpNorm::Inf] {
            assert_relative_eq!(lp_operator_norm(&id, p), 1.0, max_relative = 1e-13);
        }

        let d = ComplexMatrix::diagonal(&[c64(0.3, 0.4), c64(-0.2, 0.0)]).unwrap();
        for p in [LpNorm::One, LpNorm::Two, LpNorm::Inf] {
            assert_relative_eq!(lp_operator_norm(&d, p), 0.5, max_relative = 1e-13);
        }
    }

    #[test]
    fn interpolation_examples() {
        let out = interpolate_rk(2.0, 1.0, 2.0, f64::INFINITY, 0.5).unwrap();
        assert_relative_eq!(out.p, 2.0);
        assert_relative_eq!(out.params.alpha, 0.5);
        assert_relative_eq!(out.params.beta, 0.5);
        assert_relative_eq!(out.params.c, 2.0, max_relative = 1e-14);
        assert!(is_ritt(out.params.alpha, out.params.beta));

        let out = interpolate_rk(1.0, 1.0, 1.0, f64::INFINITY, 0.3).unwrap();
        assert_relative_eq!(out.params.alpha, 0.3);
        assert_relative_eq!(out.params.beta, 0.7);
        assert_relative_eq!(out.params.c, 1.0);

        let out = interpolate_rk(4.0, 2.0, 9.0, 4.0, 0.5).unwrap();
        assert_relative_eq!(out.params.c, 6.0, max_relative = 1e-14);

        assert!(interpolate_rk(1.0, 1.0, 1.0, 2.0, 0.0).is_err());
        assert!(interpolate_rk(1.0, 1.0, 1.0, 2.0, 1.0).is_err());
    }

    #[test]
    fn interpolated_params_are_always_ritt() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..200 {
            let theta = rng.gen_range(0.001..0.999);
            let out = interpolate_rk(
                rng.gen_range(1.0..10.0),
                rng.gen_range(1.0..4.0),
                rng.gen_range(1.0..10.0),
                rng.gen_range(1.0..4.0),
                theta,
            )
            .unwrap();
            assert!((out.params.alpha + out.params.beta - 1.0).abs() < 1e-14);
            assert!(is_ritt(out.params.alpha, out.params.beta));
        }
    }

    #[test]
    fn sampled_ratio_zero_matrix_is_exactly_half() {
        let t = ComplexMatrix::zero(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let report =
            sampled_lp_ratio_check(&t, c64(2.0, 0.0), 1.5, 0.5, 1000, &mut rng).unwrap();
        assert!(report.pass);
        assert_relative_eq!(report.max_ratio, 0.5, max_relative = 1e-12);
    }

    /// For diagonal T the resolvent is diagonal, but the *worst-case* ratio
    /// max_i 1/|lambda - d_i| is only approached by sampling; every sampled
    /// ratio must respect it regardless of p.
    #[test]
    fn sampled_ratio_diagonal_bounded_by_spectral_gap() {
        let t = ComplexMatrix::diagonal(&[c64(0.5, 0.0), c64(-0.25, 0.3)]).unwrap();
        let lambda = c64(1.3, 0.2);
        let cap = 1.0
            / t.diag()
                .iter()
                .map(|d| (lambda - d).norm())
                .fold(f64::INFINITY, f64::min);
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for p in [1.5, 2.0, 3.0] {
            let report = sampled_lp_ratio_check(&t, lambda, p, cap, 1000, &mut rng).unwrap();
            assert!(report.pass, "p = {p}: {report:?}");
        }
    }

    /// Interpolation inequality for matrices: sampled l^p ratios stay under
    /// the Riesz-Thorin mix of the measured l^1 and l^inf constants.
    #[test]
    fn sampled_ratio_respects_interpolated_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let t = random_nonnegative(8, 0.9, &mut rng).unwrap();
        let lambda = c64(1.05, 0.0);
        let inv = t.shifted_from(lambda).inverse().unwrap();
        let c1 = (lambda.norm() - 1.0) * lp_operator_norm(&inv, LpNorm::One);
        let c2 = (lambda - ONE).norm() * lp_operator_norm(&inv, LpNorm::Inf);
        let bound = c1.sqrt()
            * c2.sqrt()
            * rk_bound(lambda, &RKParams { alpha: 0.5, beta: 0.5, c: 1.0 }).unwrap();
        let report = sampled_lp_ratio_check(&t, lambda, 2.0, bound, 2000, &mut rng).unwrap();
        assert!(report.pass, "{report:?}");
    }
}
