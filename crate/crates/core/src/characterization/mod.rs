//! Checkers for the rank-one characterizations of matrices whose extreme
//! eigenvalue is simple.
//!
//! Two families share one engine. For the top family (Hermitian matrices with
//! a simple largest eigenvalue λ1, adjacency and signless Laplacian), the
//! product of `H - λ_i I` over the other distinct eigenvalues must be
//! `∏(λ1 - λ_i) · y y*` with `y` the unit top eigenvector. For the PSD family
//! (simple least eigenvalue μk, Laplacian and normalized Laplacian), the
//! product over the k-1 larger eigenvalues must be
//! `∏(μk - μ_i) / ‖α‖² · α α*`, whose sign is `(-1)^(k-1)`.

mod demo;
mod engine;
mod graphs;

use std::fmt;

use num_traits::{Float, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::ExactError;
use crate::graph::GraphError;
use crate::scalar::{HermScalar, Real};
use crate::spectra::{Hermitian, SpectraError, SymMatrix};

pub use demo::{counterexample_demo, CounterexampleReport};
pub use graphs::{
    check_adjacency_distinct, check_diameter_bound, check_graph, check_graph_with_eigenvalues,
    check_laplacian_distinct, check_normalized_laplacian_distinct,
    check_signless_laplacian_distinct, graph_matrix_f64, DiameterBound, GraphMatrix,
};

/// Default user tolerance.
pub const DEFAULT_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    /// Complex Hermitian, simple spectral radius.
    #[serde(rename = "thm_2_7")]
    Thm2_7,
    /// Real symmetric, simple spectral radius.
    #[serde(rename = "cor_2_8")]
    Cor2_8,
    /// Adjacency matrix of a connected graph.
    #[serde(rename = "thm_3_1")]
    Thm3_1,
    /// Signless Laplacian of a connected graph.
    #[serde(rename = "signless_3_1")]
    Signless3_1,
    /// Complex PSD, simple least eigenvalue.
    #[serde(rename = "lem_4_1")]
    Lem4_1,
    /// Real PSD, simple least eigenvalue.
    #[serde(rename = "cor_4_5")]
    Cor4_5,
    /// Laplacian of a connected graph.
    #[serde(rename = "thm_4_6")]
    Thm4_6,
    /// Normalized Laplacian of a connected graph.
    #[serde(rename = "thm_4_7")]
    Thm4_7,
}

impl TheoremId {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Thm2_7 => "thm_2_7",
            Self::Cor2_8 => "cor_2_8",
            Self::Thm3_1 => "thm_3_1",
            Self::Signless3_1 => "signless_3_1",
            Self::Lem4_1 => "lem_4_1",
            Self::Cor4_5 => "cor_4_5",
            Self::Thm4_6 => "thm_4_6",
            Self::Thm4_7 => "thm_4_7",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Descriptive mode verifies the identities for whatever k the matrix has.
/// Strict mode additionally requires k = n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Descriptive,
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckOptions {
    /// Scaled internally by n and by the magnitude of the matrix or product.
    pub tol: f64,
    pub mode: Mode,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            mode: Mode::Descriptive,
        }
    }
}

impl CheckOptions {
    pub fn descriptive(tol: f64) -> Self {
        Self {
            tol,
            mode: Mode::Descriptive,
        }
    }

    pub fn strict(tol: f64) -> Self {
        Self {
            tol,
            mode: Mode::Strict,
        }
    }
}

/// The part of a characterization that failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// Some `H - λ_i I` is not singular.
    Singularity,
    /// The product is not the expected rank-one matrix.
    RankOne,
    /// The rank-one factor is not an eigenvector for the extreme eigenvalue.
    Eigenvector,
    /// Recovered coefficient differs from the closed form or has the wrong sign.
    Coefficient,
    /// Perron vector is not entrywise positive.
    Positivity,
    /// Strict mode only: k < n.
    DistinctSpectrum,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Singularity => "condition (i): H - λI not singular",
            Self::RankOne => "condition (ii): product is not the expected rank-one matrix",
            Self::Eigenvector => "rank-one factor is not an extreme eigenvector",
            Self::Coefficient => "recovered coefficient disagrees with the closed form",
            Self::Positivity => "certifying vector is not entrywise positive",
            Self::DistinctSpectrum => "spectrum is not fully distinct (k < n)",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Condition),
}

impl Verdict {
    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

#[derive(Debug, Error)]
pub enum CharacterizationError {
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("spectral radius is not a simple eigenvalue")]
    SpectralRadiusNotSimple,
    #[error("least eigenvalue is not simple")]
    LeastNotSimple,
    #[error("matrix is not positive semidefinite (least eigenvalue {0:e})")]
    NotPsd(f64),
    #[error("tolerance must be positive and finite")]
    InvalidTolerance,
    #[error("eigenvalue list must be non-empty, finite and strictly decreasing")]
    InvalidEigenvalues,
    #[error("internal error: {0}")]
    Internal(String),
}

/// Outcome of one characterization check.
#[derive(Debug, Clone)]
pub struct CharacterizationResult<S: HermScalar = f64> {
    pub theorem: TheoremId,
    pub n: usize,
    /// Number of distinct eigenvalues the identities were checked with.
    pub k: usize,
    /// Cluster count of the floating-point spectrum alone.
    pub k_float: usize,
    /// Distinct count from the exact pipeline (graph matrices only).
    pub k_exact: Option<usize>,
    /// Distinct eigenvalues, largest first.
    pub distinct_eigenvalues: Vec<S::Real>,
    /// Smallest singular value of `H - λ_i I` for each eigenvalue in the product,
    /// in the order of `distinct_eigenvalues`.
    pub condition_i_residuals: Vec<S::Real>,
    pub condition_i_tol: S::Real,
    /// `max |∏(H - λ_i I) - expected rank-one form|`.
    pub condition_ii_residual: S::Real,
    pub condition_ii_tol: S::Real,
    /// `max |∏(H - λ_i I)|`.
    pub product_scale: S::Real,
    /// Recovered coefficient: `b` for unit `y` in the top family, the
    /// multiplier of `α α*` in the PSD family.
    pub coefficient_b: S::Real,
    /// Closed form of the same coefficient.
    pub expected_b: S::Real,
    /// Certifying vector: `√b·y` in the top family, the theorem's fixed
    /// vector (or the unit least eigenvector) in the PSD family.
    pub alpha: Vec<S>,
    /// `max |H y - λ y|` for the recovered rank-one factor `y`.
    pub eigenvector_residual: S::Real,
    /// First failing identity, independent of the mode.
    pub identity_failure: Option<Condition>,
    pub verdict: Verdict,
}

impl<S: HermScalar> CharacterizationResult<S> {
    /// Conditions (i) and (ii) and the side assertions hold for this k.
    pub fn identities_hold(&self) -> bool {
        self.identity_failure.is_none()
    }

    pub fn is_distinct(&self) -> bool {
        self.k == self.n
    }

    /// False when float clustering and exact classification disagree on k.
    pub fn pipelines_agree(&self) -> bool {
        self.k_exact.is_none_or(|k| k == self.k_float)
    }

    pub fn max_condition_i_residual(&self) -> S::Real {
        self.condition_i_residuals
            .iter()
            .fold(S::Real::zero(), |a, &b| a.max(b))
    }

    /// Smallest gap between consecutive distinct eigenvalues.
    pub fn min_gap(&self) -> Option<S::Real> {
        self.distinct_eigenvalues
            .windows(2)
            .map(|w| w[0] - w[1])
            .reduce(|a, b| a.min(b))
    }
}

/// Top-family check for a Hermitian matrix with simple spectral radius.
/// Real input is reported as `cor_2_8` and must have `b > 0`.
pub fn check_hermitian_distinct<S: HermScalar>(
    h: &Hermitian<S>,
    opts: &CheckOptions,
) -> Result<CharacterizationResult<S>, CharacterizationError> {
    engine::Setup::top(h, *opts).run(None)
}

/// As [`check_hermitian_distinct`] but with a caller-supplied distinct
/// eigenvalue list (largest first) in place of the computed one.
pub fn check_hermitian_distinct_with_eigenvalues<S: HermScalar>(
    h: &Hermitian<S>,
    eigenvalues: &[S::Real],
    opts: &CheckOptions,
) -> Result<CharacterizationResult<S>, CharacterizationError> {
    engine::Setup::top(h, *opts).run(Some(eigenvalues))
}

/// PSD-family check for a positive semidefinite matrix with a simple least
/// eigenvalue, certified by the unit least eigenvector.
pub fn check_psd_least_distinct<S: HermScalar>(
    h: &Hermitian<S>,
    opts: &CheckOptions,
) -> Result<CharacterizationResult<S>, CharacterizationError> {
    engine::Setup::psd(h, *opts).run(None)
}

/// Converse of the eigenvector property: with `f(x) = m(x)/(x - λ1)`, the
/// top eigenvector of `f(H)` must be an eigenvector of `H` for `λ1`.
///
/// The check `‖Hα - λ1 α‖ ≤ tol·n·max(1, max|H|)` uses the same scaling as
/// condition (i).
pub fn check_eigenvector_converse<T: Real>(
    h: &SymMatrix<T>,
    tol: T,
) -> Result<bool, CharacterizationError> {
    engine::eigenvector_converse(h, tol)
}
