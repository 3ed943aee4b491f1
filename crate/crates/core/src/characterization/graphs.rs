use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::exact::{classify_pencil, classify_spectrum_exact};
use crate::graph::{
    build_matrix, diameter, is_connected, normalized_laplacian_float, Graph, GraphError, MatrixKind,
};
use crate::spectra::{Hermitian, Matrix, SymMatrix};

use super::engine::{Extreme, Setup};
use super::{CharacterizationError, CharacterizationResult, CheckOptions, TheoremId};

/// The four graph matrices with a characterization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphMatrix {
    Adjacency,
    Laplacian,
    Signless,
    Normalized,
}

impl GraphMatrix {
    pub const ALL: [GraphMatrix; 4] = [
        GraphMatrix::Adjacency,
        GraphMatrix::Laplacian,
        GraphMatrix::Signless,
        GraphMatrix::Normalized,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Adjacency => "adjacency",
            Self::Laplacian => "laplacian",
            Self::Signless => "signless",
            Self::Normalized => "normalized",
        }
    }

    pub fn theorem(self) -> TheoremId {
        match self {
            Self::Adjacency => TheoremId::Thm3_1,
            Self::Laplacian => TheoremId::Thm4_6,
            Self::Signless => TheoremId::Signless3_1,
            Self::Normalized => TheoremId::Thm4_7,
        }
    }
}

impl fmt::Display for GraphMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GraphMatrix {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown matrix kind {s:?}"))
    }
}

/// Floating-point matrix of the given kind.
pub fn graph_matrix_f64(g: &Graph, kind: GraphMatrix) -> Result<SymMatrix<f64>, GraphError> {
    let exact_kind = match kind {
        GraphMatrix::Adjacency => MatrixKind::Adjacency,
        GraphMatrix::Laplacian => MatrixKind::Laplacian,
        GraphMatrix::Signless => MatrixKind::Signless,
        GraphMatrix::Normalized => return normalized_laplacian_float(g),
    };
    let rows = build_matrix(g, exact_kind)
        .to_f64_rows()
        .expect("graph matrix entries fit in f64");
    Ok(Hermitian::new(Matrix::from_rows(&rows).expect("square"))
        .expect("graph matrices are symmetric"))
}

fn require_connected(g: &Graph) -> Result<(), GraphError> {
    if g.n() < 2 {
        return Err(GraphError::TooSmall { n: g.n(), min: 2 });
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(GraphError::IsolatedVertex(v));
    }
    if !is_connected(g) {
        return Err(GraphError::Disconnected);
    }
    Ok(())
}

fn exact_distinct_count(g: &Graph, kind: GraphMatrix) -> Result<usize, CharacterizationError> {
    let c = match kind {
        GraphMatrix::Adjacency => classify_spectrum_exact(&build_matrix(g, MatrixKind::Adjacency)),
        GraphMatrix::Laplacian => classify_spectrum_exact(&build_matrix(g, MatrixKind::Laplacian)),
        GraphMatrix::Signless => classify_spectrum_exact(&build_matrix(g, MatrixKind::Signless)),
        GraphMatrix::Normalized => classify_pencil(
            &build_matrix(g, MatrixKind::Degree),
            &build_matrix(g, MatrixKind::Laplacian),
        )?,
    };
    Ok(c.distinct_count)
}

fn run_graph(
    g: &Graph,
    kind: GraphMatrix,
    eigenvalues: Option<&[f64]>,
    opts: &CheckOptions,
) -> Result<CharacterizationResult, CharacterizationError> {
    require_connected(g)?;
    let h = graph_matrix_f64(g, kind)?;
    let k_exact = Some(exact_distinct_count(g, kind)?);
    let n = g.n();
    let (extreme, alpha, positive_alpha) = match kind {
        GraphMatrix::Adjacency | GraphMatrix::Signless => (Extreme::Top, None, true),
        GraphMatrix::Laplacian => (Extreme::Bottom, Some(vec![1.0; n]), false),
        GraphMatrix::Normalized => (
            Extreme::Bottom,
            Some(g.degrees().iter().map(|&d| (d as f64).sqrt()).collect()),
            false,
        ),
    };
    let setup = Setup {
        h: &h,
        theorem: kind.theorem(),
        extreme,
        alpha,
        k_exact,
        positive_alpha,
        opts: *opts,
    };
    // Connectivity guarantees both extreme eigenvalues are simple.
    setup.run(eigenvalues).map_err(|e| match e {
        CharacterizationError::SpectralRadiusNotSimple | CharacterizationError::LeastNotSimple => {
            CharacterizationError::Internal(format!(
                "{kind} matrix of a connected graph has a repeated extreme eigenvalue"
            ))
        }
        other => other,
    })
}

/// Checks the characterization for one graph matrix. The distinct count is
/// arbitrated by the exact pipeline.
pub fn check_graph(
    g: &Graph,
    kind: GraphMatrix,
    opts: &CheckOptions,
) -> Result<CharacterizationResult, CharacterizationError> {
    run_graph(g, kind, None, opts)
}

/// As [`check_graph`] with a caller-supplied list of distinct eigenvalues,
/// largest first. Used to confirm the checks reject wrong spectra.
pub fn check_graph_with_eigenvalues(
    g: &Graph,
    kind: GraphMatrix,
    eigenvalues: &[f64],
    opts: &CheckOptions,
) -> Result<CharacterizationResult, CharacterizationError> {
    run_graph(g, kind, Some(eigenvalues), opts)
}

/// `∏_{i≥2}(A - λ_i I) = α α^T` with `α` entrywise positive.
pub fn check_adjacency_distinct(
    g: &Graph,
    opts: &CheckOptions,
) -> Result<CharacterizationResult, CharacterizationError> {
    check_graph(g, GraphMatrix::Adjacency, opts)
}

/// The adjacency characterization applied to `Q = D + A`.
pub fn check_signless_laplacian_distinct(
    g: &Graph,
    opts: &CheckOptions,
) -> Result<CharacterizationResult, CharacterizationError> {
    check_graph(g, GraphMatrix::Signless, opts)
}

/// Product over the nonzero distinct eigenvalues of `L` equals
/// `(-1)^(k-1) ∏μ_i / n · J`.
pub fn check_laplacian_distinct(
    g: &Graph,
    opts: &CheckOptions,
) -> Result<CharacterizationResult, CharacterizationError> {
    check_graph(g, GraphMatrix::Laplacian, opts)
}

/// Product over the nonzero distinct eigenvalues of `D^{-1/2} L D^{-1/2}`
/// equals `(-1)^(k-1) ∏μ_i / (2m) · α α^T` with `α = (√d_1, …, √d_n)`.
pub fn check_normalized_laplacian_distinct(
    g: &Graph,
    opts: &CheckOptions,
) -> Result<CharacterizationResult, CharacterizationError> {
    check_graph(g, GraphMatrix::Normalized, opts)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DiameterBound {
    pub diam: usize,
    /// Exact number of distinct adjacency eigenvalues.
    pub k: usize,
    /// `diam ≤ k - 1`.
    pub holds: bool,
}

/// Diameter against the number of distinct adjacency eigenvalues. A false
/// `holds` contradicts the theorem and indicates a bug.
pub fn check_diameter_bound(g: &Graph) -> Result<DiameterBound, GraphError> {
    if g.n() == 0 {
        return Err(GraphError::TooSmall { n: 0, min: 1 });
    }
    let diam = diameter(g)?;
    let k = classify_spectrum_exact(&build_matrix(g, MatrixKind::Adjacency)).distinct_count;
    Ok(DiameterBound {
        diam,
        k,
        holds: diam < k,
    })
}
