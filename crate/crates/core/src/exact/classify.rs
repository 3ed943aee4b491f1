use num_bigint::BigInt;
use serde::Serialize;

use crate::scalar::ExactInt;

use super::charpoly::{charpoly, pencil_charpoly};
use super::poly::ArithError;
use super::{ExactError, Poly, SquareMatrix};

/// Multiplicity structure of a polynomial's roots, read off exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumClassification {
    /// Degree of the polynomial (the matrix dimension).
    pub total_degree: usize,
    /// Number of distinct roots.
    pub distinct_count: usize,
    /// Root multiplicities, largest first. Sums to `total_degree`.
    pub multiplicity_profile: Vec<usize>,
    pub is_distinct: bool,
}

/// Degrees of the chain `g0 = p`, `g_{j+1} = gcd(g_j, g_j')`, ending at a constant.
fn gcd_chain_degrees<T: ExactInt>(p: &Poly<T>) -> Result<Vec<usize>, ArithError> {
    let mut degrees = vec![p.degree().unwrap_or(0)];
    let mut g = p.clone();
    while g.degree().unwrap_or(0) > 0 {
        g = g.try_gcd(&g.try_derivative()?)?;
        degrees.push(g.degree().unwrap_or(0));
    }
    Ok(degrees)
}

fn classification_from_chain(chain: &[usize]) -> SpectrumClassification {
    // deg g_j = sum_i max(m_i - j, 0), so deg g_j - deg g_{j+1} counts roots of multiplicity > j.
    let above: Vec<usize> = chain.windows(2).map(|w| w[0] - w[1]).collect();
    let mut profile = Vec::new();
    for (j, &count) in above.iter().enumerate() {
        let next = above.get(j + 1).copied().unwrap_or(0);
        for _ in 0..count - next {
            profile.push(j + 1);
        }
    }
    profile.sort_unstable_by(|a, b| b.cmp(a));
    let total_degree = chain[0];
    let distinct_count = above.first().copied().unwrap_or(0);
    SpectrumClassification {
        total_degree,
        distinct_count,
        is_distinct: distinct_count == total_degree,
        multiplicity_profile: profile,
    }
}

/// Classifies the roots of a nonzero polynomial by repeated gcd with the derivative.
pub fn classify_polynomial(p: &Poly<BigInt>) -> Result<SpectrumClassification, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    if let Some(small) = p.try_map(ExactInt::try_from_bigint) {
        if let Ok(chain) = gcd_chain_degrees::<i128>(&small) {
            return Ok(classification_from_chain(&chain));
        }
    }
    let chain = gcd_chain_degrees(p).expect("BigInt gcd chain cannot fail");
    Ok(classification_from_chain(&chain))
}

/// Decides exactly whether a diagonalizable integer matrix has distinct
/// eigenvalues, via the squarefree structure of its characteristic polynomial.
///
/// The multiplicity profile equals the eigenvalue multiplicities only for
/// diagonalizable input (e.g. symmetric matrices).
pub fn classify_spectrum_exact(m: &SquareMatrix<BigInt>) -> SpectrumClassification {
    classify_polynomial(&charpoly(m)).expect("characteristic polynomial is monic")
}

/// Same classification for the eigenvalues of `D^{-1} L` (the normalized
/// Laplacian spectrum when `D` holds the degrees).
pub fn classify_pencil(
    d: &SquareMatrix<BigInt>,
    l: &SquareMatrix<BigInt>,
) -> Result<SpectrumClassification, ExactError> {
    let (p, _) = pencil_charpoly(d, l)?;
    classify_polynomial(&p)
}

/// Minimal polynomial of a diagonalizable integer matrix: the squarefree
/// part `p / gcd(p, p')` of its characteristic polynomial. Monic.
pub fn minimal_polynomial(m: &SquareMatrix<BigInt>) -> Poly<BigInt> {
    let p = charpoly(m);
    if p.degree() == Some(0) {
        return p;
    }
    let g = super::poly_gcd(&p, &p.derivative()).expect("p is nonzero");
    // g is primitive with positive leading coefficient and divides a monic p, so g is monic.
    p.div_exact(&g).expect("gcd divides p")
}
