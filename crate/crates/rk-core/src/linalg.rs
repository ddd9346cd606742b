//! Dense complex linear algebra for small matrices.
//!
//! Everything here targets desk scale (`dim <= 512`): row-major storage,
//! binary-exponentiation powers, one-sided Jacobi SVD for singular-value
//! extremes, and LU with partial pivoting for explicit resolvents. The
//! operator norm used throughout the crate is the `l2 -> l2` norm, computed
//! as the largest singular value.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};

/// Largest matrix dimension accepted by the constructors.
pub const MAX_DIM: usize = 512;

/// Relative threshold under which `lambda I - T` counts as singular.
pub const SINGULARITY_RTOL: f64 = 1e-14;

/// Dense square matrix over complex scalars, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

fn check_finite(z: Complex64) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(CoreError::Parse(format!("non-finite entry {z}")))
    }
}

impl ComplexMatrix {
    /// Build a matrix from row-major entries. Rejects non-square entry
    /// counts, `dim == 0`, `dim > 512` and non-finite components.
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if dim == 0 {
            return Err(CoreError::Parse("dim must be >= 1".into()));
        }
        if dim > MAX_DIM {
            return Err(CoreError::Parse(format!("dim {dim} exceeds {MAX_DIM}")));
        }
        if entries.len() != dim * dim {
            return Err(CoreError::Parse(format!(
                "entry count {} does not match dim^2 = {}",
                entries.len(),
                dim * dim
            )));
        }
        for &z in &entries {
            check_finite(z)?;
        }
        Ok(Self { dim, entries })
    }

    pub fn zero(dim: usize) -> Result<Self> {
        Self::new(dim, vec![Complex64::new(0.0, 0.0); dim * dim])
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zero(dim)?;
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        Ok(m)
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal(diag: &[Complex64]) -> Result<Self> {
        let mut m = Self::zero(diag.len())?;
        for (i, &d) in diag.iter().enumerate() {
            check_finite(d)?;
            m[(i, i)] = d;
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn diag(&self) -> Vec<Complex64> {
        (0..self.dim).map(|i| self[(i, i)]).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i != j && self[(i, j)] != Complex64::new(0.0, 0.0) {
                    return false;
                }
            }
        }
        true
    }

    /// Upper or lower triangular (diagonal included either way).
    pub fn is_triangular(&self) -> bool {
        let zero = Complex64::new(0.0, 0.0);
        let mut upper = true;
        let mut lower = true;
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i < j && self[(i, j)] != zero {
                    lower = false;
                }
                if i > j && self[(i, j)] != zero {
                    upper = false;
                }
            }
        }
        upper || lower
    }

    pub fn mul(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let d = self.dim;
        let mut out = vec![Complex64::new(0.0, 0.0); d * d];
        // ikj order keeps the inner loop contiguous in both operands.
        for i in 0..d {
            for k in 0..d {
                let a = self.entries[i * d + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let row = &rhs.entries[k * d..(k + 1) * d];
                let dst = &mut out[i * d..(i + 1) * d];
                for j in 0..d {
                    dst[j] += a * row[j];
                }
            }
        }
        ComplexMatrix { dim: d, entries: out }
    }

    pub fn add(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        ComplexMatrix { dim: self.dim, entries }
    }

    pub fn sub(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a - b)
            .collect();
        ComplexMatrix { dim: self.dim, entries }
    }

    pub fn scale(&self, s: Complex64) -> ComplexMatrix {
        let entries = self.entries.iter().map(|a| a * s).collect();
        ComplexMatrix { dim: self.dim, entries }
    }

    /// `lambda I - self`.
    pub fn shifted_from(&self, lambda: Complex64) -> ComplexMatrix {
        let mut m = self.scale(Complex64::new(-1.0, 0.0));
        for i in 0..self.dim {
            m[(i, i)] += lambda;
        }
        m
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Matrix-vector product.
    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.dim, "dimension mismatch");
        let d = self.dim;
        let mut y = vec![Complex64::new(0.0, 0.0); d];
        for i in 0..d {
            let row = &self.entries[i * d..(i + 1) * d];
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..d {
                acc += row[j] * x[j];
            }
            y[i] = acc;
        }
        y
    }

    /// Explicit inverse through LU with partial pivoting.
    pub fn inverse(&self) -> Result<ComplexMatrix> {
        let lu = LuFactors::new(self)?;
        let d = self.dim;
        let mut out = ComplexMatrix::zero(d).expect("dim already validated");
        let mut e = vec![Complex64::new(0.0, 0.0); d];
        for j in 0..d {
            e.fill(Complex64::new(0.0, 0.0));
            e[j] = Complex64::new(1.0, 0.0);
            let col = lu.solve(&e);
            for i in 0..d {
                out[(i, j)] = col[i];
            }
        }
        Ok(out)
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[i * self.dim + j]
    }
}

/// LU factorization with partial pivoting, kept around for repeated solves.
pub struct LuFactors {
    dim: usize,
    lu: Vec<Complex64>,
    perm: Vec<usize>,
}

impl LuFactors {
    pub fn new(a: &ComplexMatrix) -> Result<Self> {
        let d = a.dim;
        let mut lu = a.entries.clone();
        let mut perm: Vec<usize> = (0..d).collect();
        let scale = a.max_abs_entry().max(f64::MIN_POSITIVE);
        for col in 0..d {
            let mut pivot_row = col;
            let mut pivot_mag = lu[col * d + col].norm();
            for r in col + 1..d {
                let mag = lu[r * d + col].norm();
                if mag > pivot_mag {
                    pivot_mag = mag;
                    pivot_row = r;
                }
            }
            if pivot_mag < 1e-300 * scale.max(1.0) {
                return Err(CoreError::Domain(format!(
                    "matrix is numerically singular at pivot {col}"
                )));
            }
            if pivot_row != col {
                for j in 0..d {
                    lu.swap(col * d + j, pivot_row * d + j);
                }
                perm.swap(col, pivot_row);
            }
            let pivot = lu[col * d + col];
            for r in col + 1..d {
                let factor = lu[r * d + col] / pivot;
                lu[r * d + col] = factor;
                for j in col + 1..d {
                    let sub = factor * lu[col * d + j];
                    lu[r * d + j] -= sub;
                }
            }
        }
        Ok(Self { dim: d, lu, perm })
    }

    /// Ratio of the smallest to largest pivot magnitude, a cheap proxy for
    /// conditioning; values near machine epsilon flag near-singularity.
    pub fn pivot_ratio(&self) -> f64 {
        let d = self.dim;
        let mut min = f64::INFINITY;
        let mut max = 0.0f64;
        for i in 0..d {
            let p = self.lu[i * d + i].norm();
            min = min.min(p);
            max = max.max(p);
        }
        if max == 0.0 {
            0.0
        } else {
            min / max
        }
    }

    pub fn solve(&self, b: &[Complex64]) -> Vec<Complex64> {
        let d = self.dim;
        assert_eq!(b.len(), d, "dimension mismatch");
        let mut y: Vec<Complex64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 1..d {
            for j in 0..i {
                let sub = self.lu[i * d + j] * y[j];
                y[i] -= sub;
            }
        }
        for i in (0..d).rev() {
            for j in i + 1..d {
                let sub = self.lu[i * d + j] * y[j];
                y[i] -= sub;
            }
            y[i] /= self.lu[i * d + i];
        }
        y
    }
}

/// `T^n` by binary exponentiation; `T^0` is the identity.
pub fn mat_power(t: &ComplexMatrix, n: u64) -> ComplexMatrix {
    let mut result = ComplexMatrix::identity(t.dim).expect("dim already validated");
    let mut base = t.clone();
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            result = result.mul(&base);
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base);
        }
    }
    result
}

/// All singular values, descending, by one-sided Jacobi on the columns.
///
/// Cyclic sweeps rotate column pairs until the Gram matrix is diagonal to
/// relative `1e-15`; the column norms are then the singular values. This
/// keeps high relative accuracy on the small singular values, which is what
/// the resolvent norms feed on.
pub fn singular_values(a: &ComplexMatrix) -> Vec<f64> {
    if a.is_diagonal() {
        let mut sv: Vec<f64> = a.diag().iter().map(|z| z.norm()).collect();
        sv.sort_by(|x, y| y.partial_cmp(x).expect("finite entries"));
        return sv;
    }
    let d = a.dim;
    // Columns of A, contiguous per column.
    let mut cols: Vec<Vec<Complex64>> = (0..d)
        .map(|j| (0..d).map(|i| a[(i, j)]).collect())
        .collect();
    let tol = 1e-15;
    let max_sweeps = 60;
    for _ in 0..max_sweeps {
        let mut converged = true;
        for p in 0..d - 1 {
            for q in p + 1..d {
                let mut app = 0.0;
                let mut aqq = 0.0;
                let mut apq = Complex64::new(0.0, 0.0);
                for i in 0..d {
                    app += cols[p][i].norm_sqr();
                    aqq += cols[q][i].norm_sqr();
                    apq += cols[p][i].conj() * cols[q][i];
                }
                let off = apq.norm();
                if off <= tol * (app * aqq).sqrt() || off == 0.0 {
                    continue;
                }
                converged = false;
                // Diagonalize the Hermitian 2x2 Gram block: strip the phase
                // of the off-diagonal entry, then apply the classical
                // symmetric Jacobi rotation.
                let phase = apq / off;
                let tau = (aqq - app) / (2.0 * off);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for i in 0..d {
                    let vp = cols[p][i];
                    let vq = cols[q][i] * phase.conj();
                    cols[p][i] = vp * c - vq * s;
                    cols[q][i] = vp * s + vq * c;
                }
            }
        }
        if converged {
            break;
        }
    }
    let mut sv: Vec<f64> = cols
        .iter()
        .map(|col| col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .collect();
    sv.sort_by(|x, y| y.partial_cmp(x).expect("norms are finite"));
    sv
}

/// `(sigma_max, sigma_min)`: the operator 2-norm and the smallest singular
/// value. `sigma_min == 0` is a valid return for singular input.
pub fn singular_extremes(a: &ComplexMatrix) -> (f64, f64) {
    let sv = singular_values(a);
    (sv[0], sv[sv.len() - 1])
}

/// `||R(lambda, T)|| = 1 / sigma_min(lambda I - T)` in the 2-norm.
///
/// Fails with [`CoreError::SingularResolvent`] when `sigma_min` drops below
/// `1e-14 * ||lambda I - T||`, which signals that `lambda` numerically
/// belongs to the spectrum.
pub fn resolvent_norm(t: &ComplexMatrix, lambda: Complex64) -> Result<f64> {
    let shifted = t.shifted_from(lambda);
    let (smax, smin) = singular_extremes(&shifted);
    if smin < SINGULARITY_RTOL * smax {
        return Err(CoreError::SingularResolvent { lambda });
    }
    if smin == 0.0 {
        // Zero-dimensional edge: shifted matrix identically zero.
        return Err(CoreError::SingularResolvent { lambda });
    }
    Ok(1.0 / smin)
}

// ---------------------------------------------------------------------------
// Matrix file format: { "dim": d, "entries": [[re, im], ...] } row-major.

#[derive(Serialize, Deserialize)]
struct MatrixFile {
    dim: usize,
    entries: Vec<[f64; 2]>,
}

/// Parse the JSON matrix format. Rejects entry lists whose length is not
/// `dim^2` and non-finite components.
pub fn matrix_from_json(text: &str) -> Result<ComplexMatrix> {
    let file: MatrixFile =
        serde_json::from_str(text).map_err(|e| CoreError::Parse(e.to_string()))?;
    let entries = file
        .entries
        .iter()
        .map(|&[re, im]| Complex64::new(re, im))
        .collect();
    ComplexMatrix::new(file.dim, entries)
}

/// Serialize to the JSON matrix format.
pub fn matrix_to_json(m: &ComplexMatrix) -> String {
    let file = MatrixFile {
        dim: m.dim(),
        entries: m.entries().iter().map(|z| [z.re, z.im]).collect(),
    };
    serde_json::to_string(&file).expect("matrix serialization cannot fail")
}
