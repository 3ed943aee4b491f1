//! Exact integer linear algebra: characteristic polynomials, polynomial
//! gcds, squarefree classification and minimal polynomials.
//!
//! This is the oracle side of the toolkit. Every answer is a statement about
//! integer polynomials, so distinctness of a spectrum is decided with no
//! rounding at all.

mod charpoly;
mod classify;
mod matrix;
mod poly;

use thiserror::Error;

pub use charpoly::{charpoly, pencil_charpoly};
pub use classify::{
    classify_pencil, classify_polynomial, classify_spectrum_exact, minimal_polynomial,
    SpectrumClassification,
};
pub use matrix::SquareMatrix;
pub use poly::{eval_poly_matrix_exact, poly_derivative, poly_gcd, Poly};

#[derive(Debug, Error)]
pub enum ExactError {
    #[error("matrix is not square: {rows} rows but a row of length {cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix is not diagonal")]
    NotDiagonal,
    #[error("diagonal entry {index} is not positive")]
    NonPositiveDiagonal { index: usize },
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("the zero polynomial has no root structure")]
    ZeroPolynomial,
    #[error("polynomial division is not exact")]
    NotDivisible,
}
