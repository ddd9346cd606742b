use num_complex::Complex64;
use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Clone, Error)]
pub enum CoreError {
    /// `lambda I - T` is numerically singular: the smallest singular value
    /// fell below `1e-14 * ||lambda I - T||`, i.e. `lambda` sits in the
    /// numerical spectrum of `T`.
    #[error("resolvent is numerically singular at lambda = {lambda}")]
    SingularResolvent { lambda: Complex64 },

    /// An argument violated the mathematical domain of the operation
    /// (e.g. `|lambda| <= 1` where the bound requires `|lambda| > 1`).
    #[error("domain error: {0}")]
    Domain(String),

    /// A norm exceeded `1e300` while accumulating operator powers.
    #[error("overflow guard tripped at n = {n} (norm exceeded 1e300)")]
    OverflowGuard { n: usize },

    /// Not enough samples in the fit window to produce a regime estimate.
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// A boundary-point bracket was empty; the requested geometry does not
    /// intersect the admissible range.
    #[error("infeasible geometry: {0}")]
    InfeasibleGeometry(String),

    /// Matrix file (or other structured input) failed to parse or validate.
    #[error("parse error: {0}")]
    Parse(String),
}

impl CoreError {
    pub fn domain(msg: impl Into<String>) -> Self {
        CoreError::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, CoreError>;
