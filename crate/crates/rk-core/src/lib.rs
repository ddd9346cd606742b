//! Numerical toolkit for a two-parameter resolvent condition interpolating
//! between the Ritt and Kreiss conditions:
//!
//! ```text
//! ||(lambda I - T)^{-1}|| <= C |lambda|^(alpha+beta-1) / (|lambda-1|^alpha (|lambda|-1)^beta),   |lambda| > 1
//! ```
//!
//! The crate verifies the condition for concrete dense complex matrices,
//! computes the spectral-localization regions it implies, classifies the
//! asymptotic growth of `||T^n||` and `||T^{n+1} - T^n||`, and cross-checks
//! everything with Cauchy contour quadrature and brute-force oracles at desk
//! scale.
//!
//! * [`linalg`] — dense complex matrices, Jacobi SVD, resolvent norms.
//! * [`rk`] — the bound itself, grid suprema for the minimal constant,
//!   and the unit-circle estimates for `beta < 1`.
//! * [`regions`] — Stolz-type domains, gap regions, sectors; membership,
//!   boundary tracing and CSV/SVG emission.
//! * [`growth`] — circle integrals with bound forms and the full growth
//!   classification.
//! * [`contour`] — contour representations of powers and differences,
//!   measured norm sequences, regime fitting.
//! * [`zoo`] — test operators, Cesàro means, `l^p` interpolation checks.

pub mod contour;
pub mod error;
pub mod growth;
pub mod linalg;
pub mod regions;
pub mod rk;
pub mod zoo;

pub use contour::{ContourSpec, NormSequenceReport, Series};
pub use error::{CoreError, Result};
pub use growth::{GrowthRegime, IntegralBound, RegimeKind};
pub use linalg::ComplexMatrix;
pub use regions::{RegionDescriptor, RegionKind, SpectrumCheck};
pub use rk::{LambdaGrid, RKParams};

/// Complex scalar used throughout: finite `f64` components; the matrix and
/// parameter constructors reject NaN and infinities at the boundary.
pub type ComplexScalar = num_complex::Complex64;
