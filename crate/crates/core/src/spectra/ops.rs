use std::ops::Range;

use num_traits::{Float, FromPrimitive};

use crate::scalar::{HermScalar, Real};

use super::matrix::{max_abs_diff, norm2};
use super::{eigh, Hermitian, Matrix, SpectraError, SymMatrix};

const PERRON_MAX_ITERATIONS: usize = 200_000;

/// Splits descending `values` into maximal runs whose consecutive gaps are at
/// most `gap_tol`.
pub fn cluster_eigenvalues<T: Real>(
    values: &[T],
    gap_tol: T,
) -> Result<Vec<Range<usize>>, SpectraError> {
    if !(gap_tol > T::zero()) {
        return Err(SpectraError::InvalidTolerance);
    }
    if values.windows(2).any(|w| !(w[0] >= w[1])) {
        return Err(SpectraError::Unsorted);
    }
    let mut clusters = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        if i == values.len() || values[i - 1] - values[i] > gap_tol {
            if i > start {
                clusters.push(start..i);
            }
            start = i;
        }
    }
    Ok(clusters)
}

/// Smallest singular value of a Hermitian matrix, i.e. its smallest
/// eigenvalue modulus.
pub fn min_singular_value<S: HermScalar>(h: &Hermitian<S>) -> Result<S::Real, SpectraError> {
    let report = eigh(h)?;
    Ok(report
        .eigenvalues
        .iter()
        .map(|v| v.abs())
        .fold(S::Real::infinity(), |a, b| a.min(b)))
}

/// Result of a successful rank-one extraction `P ≈ b·y y*`.
#[derive(Debug, Clone)]
pub struct RankOne<S: HermScalar> {
    pub b: S::Real,
    /// Unit vector, first non-negligible component real positive.
    pub y: Vec<S>,
    /// `max |P - b y y*|`.
    pub residual: S::Real,
}

/// Dominant eigenpair of `p` as a rank-one approximation, with the distance
/// from `p` to it.
pub(crate) fn dominant_rank_one<S: HermScalar>(
    p: &Hermitian<S>,
) -> Result<RankOne<S>, SpectraError> {
    let report = eigh(p)?;
    let n = p.n();
    let idx = (0..n)
        .max_by(|&a, &b| {
            report.eigenvalues[a]
                .abs()
                .partial_cmp(&report.eigenvalues[b].abs())
                .expect("finite")
        })
        .ok_or(SpectraError::NotRankOne { significant: 0 })?;
    let b = report.eigenvalues[idx];
    let y = report.eigenvector(idx);
    let approx = Matrix::outer(&y, b);
    let residual = p.as_matrix().sub(&approx).max_abs();
    Ok(RankOne { b, y, residual })
}

/// Extracts `P = b·y y*` when exactly one eigenvalue of `P` exceeds
/// `tol·max|P|·n` in modulus.
pub fn rank_one_factor<S: HermScalar>(
    p: &Hermitian<S>,
    tol: S::Real,
) -> Result<RankOne<S>, SpectraError> {
    let n = p.n();
    let threshold = tol * p.max_abs() * S::Real::from_usize(n).expect("n");
    let report = eigh(p)?;
    let significant: Vec<usize> = (0..n)
        .filter(|&j| report.eigenvalues[j].abs() > threshold)
        .collect();
    if significant.len() != 1 {
        return Err(SpectraError::NotRankOne {
            significant: significant.len(),
        });
    }
    let idx = significant[0];
    let b = report.eigenvalues[idx];
    let y = report.eigenvector(idx);
    let residual = p.as_matrix().sub(&Matrix::outer(&y, b)).max_abs();
    Ok(RankOne { b, y, residual })
}

/// Spectral radius and entrywise-positive unit eigenvector of a nonnegative
/// irreducible symmetric matrix, by shifted power iteration.
///
/// The shift by half the largest row sum makes the top eigenvalue strictly
/// dominant in modulus even for bipartite graphs.
pub fn perron_vector<T: Real>(a: &SymMatrix<T>) -> Result<(T, Vec<T>), SpectraError> {
    let n = a.n();
    let m = a.as_matrix();
    if (0..n).any(|i| (0..n).any(|j| m[(i, j)] < T::zero())) {
        return Err(SpectraError::NegativeEntry);
    }
    if n == 0 {
        return Err(SpectraError::NotSquare);
    }
    let row_max = (0..n)
        .map(|i| (0..n).fold(T::zero(), |acc, j| acc + m[(i, j)]))
        .fold(T::zero(), |x, y| x.max(y));
    let shift = row_max * T::lit(0.5);
    let tol = T::epsilon() * T::lit(64.0) * row_max.max(T::one());

    let mut v = vec![T::one() / T::from_usize(n).expect("n").sqrt(); n];
    let mut lambda = T::zero();
    for _ in 0..PERRON_MAX_ITERATIONS {
        let av = m.matvec(&v);
        lambda = v
            .iter()
            .zip(&av)
            .fold(T::zero(), |acc, (&x, &y)| acc + x * y);
        let resid = av
            .iter()
            .zip(&v)
            .map(|(&y, &x)| (y - lambda * x).abs())
            .fold(T::zero(), |p, q| p.max(q));
        if resid <= tol {
            break;
        }
        let mut next: Vec<T> = av.iter().zip(&v).map(|(&y, &x)| y + shift * x).collect();
        let norm = norm2(&next);
        if norm == T::zero() {
            return Err(SpectraError::NoConvergence { iterations: 0 });
        }
        for x in &mut next {
            *x = *x / norm;
        }
        v = next;
    }
    let av = m.matvec(&v);
    let scaled: Vec<T> = v.iter().map(|&x| x * lambda).collect();
    if max_abs_diff(&av, &scaled) > tol * T::lit(16.0) {
        return Err(SpectraError::NoConvergence {
            iterations: PERRON_MAX_ITERATIONS,
        });
    }
    if v.iter().any(|&x| !(x > T::zero())) {
        return Err(SpectraError::NotPositive);
    }
    Ok((lambda, v))
}

/// `∏ (H - r·I)` over `roots`, multiplied left to right in descending root order.
pub fn eval_poly_matrix_float<S: HermScalar>(roots: &[S::Real], h: &Hermitian<S>) -> Matrix<S> {
    let mut sorted = roots.to_vec();
    sorted.sort_by(|a, b| b.partial_cmp(a).expect("finite roots"));
    let mut acc = Matrix::identity(h.n());
    for r in sorted {
        acc = acc.mul(&h.as_matrix().shifted(r));
    }
    acc
}

/// Helper for callers that need `∏(λ1 - λi)`-style scalars.
pub(crate) fn product<T: Real>(values: impl IntoIterator<Item = T>) -> T {
    values.into_iter().fold(T::one(), |a, b| a * b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(rows: &[&[f64]]) -> SymMatrix<f64> {
        Hermitian::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn k3() -> SymMatrix<f64> {
        sym(&[&[0.0, 1.0, 1.0], &[1.0, 0.0, 1.0], &[1.0, 1.0, 0.0]])
    }

    fn path(n: usize) -> SymMatrix<f64> {
        Hermitian::new(Matrix::from_fn(n, |i, j| {
            if i.abs_diff(j) == 1 {
                1.0
            } else {
                0.0
            }
        }))
        .unwrap()
    }

    #[test]
    fn clustering_examples() {
        assert_eq!(
            cluster_eigenvalues(&[2.0, -1.0, -1.0], 1e-6).unwrap(),
            vec![0..1, 1..3]
        );
        assert_eq!(
            cluster_eigenvalues(&[5.0, 3.0, 1.0], 1e-6).unwrap().len(),
            3
        );
        assert_eq!(
            cluster_eigenvalues(&[1.0, 2.0], 1e-6),
            Err(SpectraError::Unsorted)
        );
        assert_eq!(
            cluster_eigenvalues(&[1.0], 0.0),
            Err(SpectraError::InvalidTolerance)
        );
        assert!(cluster_eigenvalues::<f64>(&[], 1e-6).unwrap().is_empty());
    }

    #[test]
    fn path7_has_seven_clusters() {
        let r = eigh(&path(7)).unwrap();
        assert_eq!(r.distinct_count, 7);
        for (k, got) in r.eigenvalues.iter().enumerate() {
            let want = 2.0 * ((k as f64 + 1.0) * std::f64::consts::PI / 8.0).cos();
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn singular_value_examples() {
        assert!(min_singular_value(&k3().shifted(2.0)).unwrap() <= 1e-9);
        assert!((min_singular_value(&k3()).unwrap() - 1.0).abs() < 1e-9);
        assert!((min_singular_value(&Hermitian::<f64>::identity(3)).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rank_one_of_all_ones() {
        let j = sym(&[&[1.0; 3], &[1.0; 3], &[1.0; 3]]);
        let f = rank_one_factor(&j, 1e-7).unwrap();
        assert!((f.b - 3.0).abs() < 1e-12);
        let s = 1.0 / 3f64.sqrt();
        assert!(max_abs_diff(&f.y, &[s, s, s]) < 1e-12);
        assert!(f.residual < 1e-12);
    }

    #[test]
    fn rank_one_rejects_zero_and_rank_two() {
        assert_eq!(
            rank_one_factor(&Hermitian::<f64>::zeros(3), 1e-7).unwrap_err(),
            SpectraError::NotRankOne { significant: 0 }
        );
        assert_eq!(
            rank_one_factor(&Hermitian::<f64>::diagonal(&[1.0, 1.0, 0.0]), 1e-7).unwrap_err(),
            SpectraError::NotRankOne { significant: 2 }
        );
    }

    #[test]
    fn k3_product_is_all_ones() {
        let p = eval_poly_matrix_float(&[-1.0], &k3());
        assert_eq!(p.as_slice(), &[1.0; 9]);
        let f = rank_one_factor(&Hermitian::symmetrized(&p), 1e-7).unwrap();
        assert!((f.b - 3.0).abs() < 1e-12);
    }

    #[test]
    fn empty_product_is_identity() {
        assert_eq!(eval_poly_matrix_float(&[], &k3()), Matrix::identity(3));
    }

    #[test]
    fn path3_product_is_rank_one() {
        let r = eigh(&path(3)).unwrap();
        let p = eval_poly_matrix_float(&r.eigenvalues[1..], &path(3));
        assert!(rank_one_factor(&Hermitian::symmetrized(&p), 1e-7).is_ok());
    }

    #[test]
    fn perron_examples() {
        let n = 5;
        let kn = Hermitian::new(Matrix::from_fn(n, |i, j| if i == j { 0.0 } else { 1.0 })).unwrap();
        let (l, v) = perron_vector(&kn).unwrap();
        assert!((l - 4.0).abs() < 1e-9);
        let u = 1.0 / (n as f64).sqrt();
        assert!(v.iter().all(|x| (x - u).abs() < 1e-9));

        let (l, v) = perron_vector(&path(3)).unwrap();
        assert!((l - 2f64.sqrt()).abs() < 1e-9);
        let want = [0.5, 2f64.sqrt() / 2.0, 0.5];
        assert!(max_abs_diff(&v, &want) < 1e-9);
    }

    #[test]
    fn perron_rejects_negative_entries() {
        let m = sym(&[&[0.0, -1.0], &[-1.0, 0.0]]);
        assert_eq!(perron_vector(&m), Err(SpectraError::NegativeEntry));
    }
}
