//! Distinct-eigenvalue characterizations for Hermitian and graph matrices.
//!
//! The floating-point side ([`spectra`]) computes spectra and verifies the
//! rank-one product identities; the exact side ([`exact`]) decides
//! distinctness with integer characteristic polynomials. [`characterization`]
//! combines the two per theorem, and [`census`] runs every check over all
//! small labeled graphs.

// `!(x <= tol)` is intentional: a NaN residual must count as a failure.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod census;
pub mod characterization;
pub mod exact;
pub mod graph;
pub mod scalar;
pub mod spectra;

use num_bigint::BigInt;

pub use characterization::{CharacterizationResult, CheckOptions, GraphMatrix, Mode};
pub use graph::Graph;

/// Real symmetric `f64` matrix.
pub type SymMatrixF64 = spectra::SymMatrix<f64>;
/// Complex Hermitian `f64` matrix.
pub type HermMatrixF64 = spectra::HermMatrix<f64>;
/// Integer polynomial with arbitrary-precision coefficients.
pub type IntPolynomial = exact::Poly<BigInt>;
/// Exact integer matrix (symmetric for graph matrices).
pub type IntSymMatrix = exact::SquareMatrix<BigInt>;
