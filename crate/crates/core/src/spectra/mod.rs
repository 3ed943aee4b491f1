//! Floating-point Hermitian eigendecomposition and the numerical operations
//! the characterization checkers are built from: clustering, singularity
//! certificates, rank-one extraction, Perron vectors and matrix products.
//!
//! Everything is generic over the entry type: real `f32`/`f64` or complex
//! numbers over them.

mod eigh;
mod matrix;
mod ops;

use num_complex::Complex;
use thiserror::Error;

pub use eigh::{eigh, eigh_with_gap, SpectrumReport};
pub use matrix::{dot, max_abs_diff, norm2, Hermitian, Matrix};
pub use ops::{
    cluster_eigenvalues, eval_poly_matrix_float, min_singular_value, perron_vector,
    rank_one_factor, RankOne,
};
pub(crate) use ops::{dominant_rank_one, product};

/// Real symmetric matrix.
pub type SymMatrix<T> = Hermitian<T>;
/// Complex Hermitian matrix.
pub type HermMatrix<T> = Hermitian<Complex<T>>;

/// Eigenvalues closer than this are treated as one cluster by default.
pub const DEFAULT_GAP_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectraError {
    #[error("matrix has non-finite entries")]
    NonFinite,
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("eigenvalues are not sorted in descending order")]
    Unsorted,
    #[error("tolerance must be positive")]
    InvalidTolerance,
    #[error("rank is not one within tolerance ({significant} significant eigenvalues)")]
    NotRankOne { significant: usize },
    #[error("iteration did not converge after {iterations} steps")]
    NoConvergence { iterations: usize },
    #[error("matrix has a negative entry")]
    NegativeEntry,
    #[error("Perron vector is not strictly positive")]
    NotPositive,
}
