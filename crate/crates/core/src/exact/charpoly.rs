use num_bigint::BigInt;
use num_traits::Signed;

use crate::scalar::{add, mul, neg, ExactInt, Overflow};

use super::poly::ArithError;
use super::{ExactError, Poly, SquareMatrix};

/// `det(xI - M)` by Berkowitz's division-free algorithm.
///
/// Works over any commutative ring; for fixed-width integers every step is
/// overflow-checked. O(n^4) ring operations.
pub(crate) fn berkowitz<T: ExactInt>(m: &SquareMatrix<T>) -> Result<Poly<T>, Overflow> {
    let n = m.n();
    // Coefficients in descending powers of x: [1, c1, ..., cr].
    let mut poly: Vec<T> = vec![T::one()];
    for r in 0..n {
        // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(T::one());
        toeplitz.push(neg(m.get(r, r))?);
        let mut v: Vec<T> = (0..r).map(|i| m.get(i, r).clone()).collect();
        for step in 0..r {
            let mut dot = T::zero();
            for (j, vj) in v.iter().enumerate() {
                dot = add(&dot, &mul(m.get(r, j), vj)?)?;
            }
            toeplitz.push(neg(&dot)?);
            if step + 1 < r {
                let mut next = vec![T::zero(); r];
                for (i, slot) in next.iter_mut().enumerate() {
                    for (j, vj) in v.iter().enumerate() {
                        let a = m.get(i, j);
                        if !a.is_zero() {
                            *slot = add(slot, &mul(a, vj)?)?;
                        }
                    }
                }
                v = next;
            }
        }
        let mut next = vec![T::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, pj) in poly.iter().enumerate().take(i + 1) {
                *slot = add(slot, &mul(&toeplitz[i - j], pj)?)?;
            }
        }
        poly = next;
    }
    poly.reverse();
    Ok(Poly::from_coeffs(poly))
}

/// Characteristic polynomial `det(xI - M)`: monic, degree `n`, exact.
///
/// Accepts any square integer matrix. Tries `i128` arithmetic first and
/// repeats the computation in `BigInt` if an intermediate overflows.
pub fn charpoly(m: &SquareMatrix<BigInt>) -> Poly<BigInt> {
    if let Some(small) = m.to_i128() {
        if let Ok(p) = berkowitz(&small) {
            return p.to_bigint();
        }
    }
    berkowitz(m).expect("BigInt does not overflow")
}

pub(crate) fn pencil_generic<T: ExactInt>(
    degrees: &[T],
    l: &SquareMatrix<T>,
) -> Result<(Poly<T>, T), ArithError> {
    let n = l.n();
    let lcm = degrees.iter().fold(T::one(), |acc, d| acc.lcm(d));
    let mut det_d = T::one();
    for d in degrees {
        det_d = mul(&det_d, d)?;
    }
    // K = lcm * D^{-1} L has integer entries and det(yI - K) = lcm^n det(y/lcm I - D^{-1}L).
    let mut rows = Vec::with_capacity(n);
    for (i, d) in degrees.iter().enumerate() {
        let factor = lcm.div_floor(d);
        rows.push(
            l.row(i)
                .iter()
                .map(|v| mul(v, &factor))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    let k = SquareMatrix::from_rows(rows).expect("square by construction");
    let pk = berkowitz(&k)?;
    // det(xD - L) = det(D) * pK(lcm x) / lcm^n, coefficientwise det(D) * k_j / lcm^(n-j).
    let mut coeffs = Vec::with_capacity(n + 1);
    for (j, kj) in pk.coeffs().iter().enumerate() {
        let mut denom = T::one();
        for _ in j..n {
            denom = mul(&denom, &lcm)?;
        }
        let num = mul(&det_d, kj)?;
        let (q, r) = num.div_rem(&denom);
        if !r.is_zero() {
            return Err(ArithError::Inexact);
        }
        coeffs.push(q);
    }
    Ok((Poly::from_coeffs(coeffs), det_d))
}

/// `det(xD - L)` for a positive diagonal `D`, together with `det(D)`.
///
/// The roots are the eigenvalues of `D^{-1} L`, which is similar to
/// `D^{-1/2} L D^{-1/2}`; squarefreeness of the result therefore decides
/// whether the normalized Laplacian has distinct eigenvalues.
pub fn pencil_charpoly(
    d: &SquareMatrix<BigInt>,
    l: &SquareMatrix<BigInt>,
) -> Result<(Poly<BigInt>, BigInt), ExactError> {
    if d.n() != l.n() {
        return Err(ExactError::DimensionMismatch {
            left: d.n(),
            right: l.n(),
        });
    }
    if !d.is_diagonal() {
        return Err(ExactError::NotDiagonal);
    }
    let degrees = d.diagonal();
    if let Some(i) = degrees.iter().position(|v| !v.is_positive()) {
        return Err(ExactError::NonPositiveDiagonal { index: i });
    }
    let small_degrees: Option<Vec<i128>> = degrees.iter().map(ExactInt::try_from_bigint).collect();
    if let (Some(sd), Some(sl)) = (small_degrees, l.to_i128()) {
        if let Ok((p, s)) = pencil_generic(&sd, &sl) {
            return Ok((p.to_bigint(), s.to_bigint()));
        }
    }
    match pencil_generic(&degrees, l) {
        Ok(out) => Ok(out),
        Err(ArithError::Inexact) => unreachable!("det(xD - L) has integer coefficients"),
        Err(ArithError::Overflow) => unreachable!("BigInt does not overflow"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: Vec<Vec<i64>>) -> SquareMatrix<BigInt> {
        SquareMatrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
        .unwrap()
    }

    fn p(c: &[i64]) -> Poly<BigInt> {
        Poly::from_i64(c)
    }

    /// Leibniz-formula determinant of a matrix with polynomial entries.
    fn leibniz_det(entries: &[Vec<Poly<BigInt>>]) -> Poly<BigInt> {
        fn perms(k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(k - 1) {
                for pos in 0..k {
                    let mut q = p.clone();
                    q.insert(pos, k - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = entries.len();
        let mut total = Poly::zero();
        for perm in perms(n) {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| perm[i] > perm[j])
                .count();
            let mut term = Poly::one();
            for (i, &j) in perm.iter().enumerate() {
                term = term.mul(&entries[i][j]);
            }
            if inversions % 2 == 1 {
                term = term.mul(&Poly::constant(BigInt::from(-1)));
            }
            let len = total.coeffs().len().max(term.coeffs().len());
            let sum = (0..len)
                .map(|d| {
                    total.coeffs().get(d).cloned().unwrap_or_default()
                        + term.coeffs().get(d).cloned().unwrap_or_default()
                })
                .collect();
            total = Poly::from_coeffs(sum);
        }
        total
    }

    fn xi_minus(mat: &SquareMatrix<BigInt>) -> Vec<Vec<Poly<BigInt>>> {
        (0..mat.n())
            .map(|i| {
                (0..mat.n())
                    .map(|j| {
                        let c = -mat.get(i, j).clone();
                        if i == j {
                            Poly::from_coeffs(vec![c, BigInt::from(1)])
                        } else {
                            Poly::constant(c)
                        }
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn charpoly_of_k3() {
        let a = m(vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        assert_eq!(charpoly(&a), p(&[-2, -3, 0, 1]));
    }

    #[test]
    fn charpoly_of_zero_matrix() {
        assert_eq!(charpoly(&SquareMatrix::zeros(2)), p(&[0, 0, 1]));
        assert_eq!(charpoly(&SquareMatrix::zeros(0)), Poly::one());
    }

    #[test]
    fn charpoly_of_nonsymmetric_b() {
        let b = m(vec![vec![1, 1, 2], vec![0, -1, 0], vec![2, 0, -1]]);
        assert_eq!(charpoly(&b), p(&[-5, -5, 1, 1]));
    }

    #[test]
    fn charpoly_matches_leibniz() {
        let mats = [
            m(vec![
                vec![3, -1, 4, 1],
                vec![5, 9, -2, 6],
                vec![5, 3, 5, -8],
                vec![9, 7, 9, 3],
            ]),
            m(vec![vec![2, 7, 1], vec![8, 2, 8], vec![1, 8, 2]]),
            m(vec![vec![-4]]),
        ];
        for a in &mats {
            assert_eq!(charpoly(a), leibniz_det(&xi_minus(a)));
        }
    }

    #[test]
    fn bigint_fallback_on_overflow() {
        let big = 10i64.pow(15);
        let a = m(vec![
            vec![big, big, 0],
            vec![big, -big, big],
            vec![0, big, big],
        ]);
        assert!(berkowitz(&a.to_i128().unwrap()).is_err());
        assert_eq!(charpoly(&a), leibniz_det(&xi_minus(&a)));
    }

    #[test]
    fn pencil_of_k2_and_k3() {
        let d = m(vec![vec![1, 0], vec![0, 1]]);
        let l = m(vec![vec![1, -1], vec![-1, 1]]);
        assert_eq!(
            pencil_charpoly(&d, &l).unwrap(),
            (p(&[0, -2, 1]), BigInt::from(1))
        );

        let d = m(vec![vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]]);
        let l = m(vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        assert_eq!(
            pencil_charpoly(&d, &l).unwrap(),
            (p(&[0, 18, -24, 8]), BigInt::from(8))
        );
    }

    #[test]
    fn pencil_matches_leibniz_on_path() {
        // P3 with degrees (1,2,1)
        let d = m(vec![vec![1, 0, 0], vec![0, 2, 0], vec![0, 0, 1]]);
        let l = m(vec![vec![1, -1, 0], vec![-1, 2, -1], vec![0, -1, 1]]);
        let entries: Vec<Vec<Poly<BigInt>>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| Poly::from_coeffs(vec![-l.get(i, j).clone(), d.get(i, j).clone()]))
                    .collect()
            })
            .collect();
        let (pencil, scale) = pencil_charpoly(&d, &l).unwrap();
        assert_eq!(pencil, leibniz_det(&entries));
        assert_eq!(scale, BigInt::from(2));
        // 2x^3 - 6x^2 + 4x = 2x(x-1)(x-2)
        assert_eq!(pencil, p(&[0, 4, -6, 2]));
    }

    #[test]
    fn pencil_rejects_bad_diagonal() {
        let l = m(vec![vec![1, -1], vec![-1, 1]]);
        assert!(matches!(
            pencil_charpoly(&m(vec![vec![1, 0], vec![0, 0]]), &l),
            Err(ExactError::NonPositiveDiagonal { index: 1 })
        ));
        assert!(matches!(
            pencil_charpoly(&m(vec![vec![1, 1], vec![0, 1]]), &l),
            Err(ExactError::NotDiagonal)
        ));
        assert!(matches!(
            pencil_charpoly(&SquareMatrix::identity(3), &l),
            Err(ExactError::DimensionMismatch { .. })
        ));
    }
}
