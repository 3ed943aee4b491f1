use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::exact::SquareMatrix;
use crate::scalar::Real;
use crate::spectra::{Hermitian, Matrix, SymMatrix};

use super::{Graph, GraphError};

/// Integer matrices attached to a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    /// `A`
    Adjacency,
    /// `L = D - A`
    Laplacian,
    /// `Q = D + A`
    Signless,
    /// `D`, the diagonal of degrees
    Degree,
}

/// Exact integer matrix of the requested kind.
pub fn build_matrix(g: &Graph, kind: MatrixKind) -> SquareMatrix<BigInt> {
    let degrees = g.degrees();
    SquareMatrix::from_fn(g.n(), |i, j| {
        let entry: i64 = if i == j {
            match kind {
                MatrixKind::Adjacency => 0,
                _ => degrees[i] as i64,
            }
        } else if g.has_edge(i, j) {
            match kind {
                MatrixKind::Adjacency | MatrixKind::Signless => 1,
                MatrixKind::Laplacian => -1,
                MatrixKind::Degree => 0,
            }
        } else {
            0
        };
        BigInt::from(entry)
    })
}

/// `D^{-1/2} L D^{-1/2}`: ones on the diagonal and `-1/sqrt(d_i d_j)` at edges.
pub fn normalized_laplacian_float<T: Real>(g: &Graph) -> Result<SymMatrix<T>, GraphError> {
    let degrees = g.degrees();
    if let Some(v) = degrees.iter().position(|&d| d == 0) {
        return Err(GraphError::IsolatedVertex(v));
    }
    let m = Matrix::from_fn(g.n(), |i, j| {
        if i == j {
            T::one()
        } else if g.has_edge(i, j) {
            let prod = T::from_usize(degrees[i] * degrees[j]).expect("small degree product");
            -prod.sqrt().recip()
        } else {
            T::zero()
        }
    });
    Ok(Hermitian::new(m).expect("symmetric by construction"))
}
