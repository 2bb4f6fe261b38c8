//! Sparse/dense linear algebra: CSR matrices, dense LU with partial
//! pivoting, incomplete LU by level of fill, and restarted GMRES with
//! right preconditioning.

mod csr;
mod dense;
mod gmres;
mod ilu;

pub use csr::CsrMatrix;
pub use dense::{DenseLu, DenseMatrix};
pub use gmres::{gmres, GmresConfig, LinearOperator, SolveReport, StopReason};
pub use ilu::IluFactor;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is singular to working precision at pivot {row}")]
    SingularPivot { row: usize },
    #[error("zero pivot in incomplete factorization at row {row}")]
    ZeroPivot { row: usize },
    #[error("invalid CSR structure: {0}")]
    InvalidStructure(String),
}

/// Dot product with a fixed left-to-right summation order.
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Euclidean norm, derived from [`dot`] so the reduction order is fixed.
pub fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// `y += alpha * x`.
pub fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    debug_assert_eq!(x.len(), y.len());
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}
