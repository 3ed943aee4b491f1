use std::ops::Range;

use num_traits::{Float, FromPrimitive, One, Zero};

use crate::scalar::{HermScalar, Real};

use super::{cluster_eigenvalues, Hermitian, Matrix, SpectraError, DEFAULT_GAP_TOL};

const MAX_SWEEPS: usize = 100;

/// Eigendecomposition `H = V Λ V*` of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct SpectrumReport<S: HermScalar> {
    /// Eigenvalues, largest first.
    pub eigenvalues: Vec<S::Real>,
    /// Orthonormal eigenvectors as columns, in the order of `eigenvalues`.
    /// Each column's first non-negligible component is real and positive.
    pub eigenvectors: Matrix<S>,
    /// Maximal runs of eigenvalues whose consecutive gaps stay within the gap tolerance.
    pub clusters: Vec<Range<usize>>,
    pub distinct_count: usize,
    /// `max |H - V Λ V*|`.
    pub reconstruction_residual: S::Real,
    /// `max |V* V - I|`.
    pub orthogonality_residual: S::Real,
}

impl<S: HermScalar> SpectrumReport<S> {
    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvector(&self, j: usize) -> Vec<S> {
        self.eigenvectors.column(j)
    }

    /// One representative per cluster (its mean), largest first.
    pub fn distinct_values(&self) -> Vec<S::Real> {
        self.clusters
            .iter()
            .map(|r| {
                let sum = self.eigenvalues[r.clone()]
                    .iter()
                    .fold(S::Real::zero(), |a, &b| a + b);
                sum / S::Real::from_usize(r.len()).expect("small count")
            })
            .collect()
    }

    /// Smallest gap between consecutive clusters, `None` with fewer than two.
    pub fn min_cluster_gap(&self) -> Option<S::Real> {
        self.clusters
            .windows(2)
            .map(|w| self.eigenvalues[w[0].end - 1] - self.eigenvalues[w[1].start])
            .reduce(|a, b| a.min(b))
    }

    /// Largest eigenvalue.
    pub fn top(&self) -> S::Real {
        self.eigenvalues[0]
    }

    pub fn bottom(&self) -> S::Real {
        self.eigenvalues[self.n() - 1]
    }
}

/// Eigendecomposition with the default clustering tolerance.
pub fn eigh<S: HermScalar>(h: &Hermitian<S>) -> Result<SpectrumReport<S>, SpectraError> {
    eigh_with_gap(h, S::Real::lit(DEFAULT_GAP_TOL))
}

/// Eigendecomposition by cyclic Jacobi rotations, then clustering with
/// `gap_tol`. Deterministic for a given input.
pub fn eigh_with_gap<S: HermScalar>(
    h: &Hermitian<S>,
    gap_tol: S::Real,
) -> Result<SpectrumReport<S>, SpectraError> {
    let m = h.as_matrix();
    if !m.is_finite() {
        return Err(SpectraError::NonFinite);
    }
    let n = m.n();
    let (values, vectors) = jacobi(m)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        values[b]
            .partial_cmp(&values[a])
            .expect("finite eigenvalues")
    });
    let eigenvalues: Vec<S::Real> = order.iter().map(|&i| values[i]).collect();
    let mut eigenvectors = Matrix::from_fn(n, |i, j| vectors[(i, order[j])]);
    normalize_phases(&mut eigenvectors);

    let clusters = cluster_eigenvalues(&eigenvalues, gap_tol)?;
    let (reconstruction_residual, orthogonality_residual) =
        residuals(m, &eigenvalues, &eigenvectors);
    Ok(SpectrumReport {
        distinct_count: clusters.len(),
        clusters,
        eigenvalues,
        eigenvectors,
        reconstruction_residual,
        orthogonality_residual,
    })
}

fn jacobi<S: HermScalar>(h: &Matrix<S>) -> Result<(Vec<S::Real>, Matrix<S>), SpectraError> {
    let n = h.n();
    let mut a = h.clone();
    let mut v = Matrix::<S>::identity(n);
    let scale = a.frobenius();
    let eps = S::Real::epsilon();
    let two = S::Real::lit(2.0);

    let mut converged = scale == S::Real::zero();
    for _sweep in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        let off = off_diagonal_norm(&a);
        if off <= eps * scale * S::Real::lit(0.01) || off == S::Real::zero() {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let r = apq.modulus();
                if r == S::Real::zero() {
                    continue;
                }
                let app = a[(p, p)].re();
                let aqq = a[(q, q)].re();
                // Entry far below both diagonal neighbours: drop it.
                if r <= eps * S::Real::lit(1e-3) * (app.abs() + aqq.abs()) {
                    a[(p, q)] = S::zero();
                    a[(q, p)] = S::zero();
                    continue;
                }

                // Phase on coordinate q makes the (p, q) entry real and positive.
                if !S::IS_REAL || apq.re() < S::Real::zero() {
                    let phase = apq.conj().scale(r.recip());
                    for k in 0..n {
                        a[(k, q)] = a[(k, q)] * phase;
                        v[(k, q)] = v[(k, q)] * phase;
                    }
                    let phase_c = phase.conj();
                    for k in 0..n {
                        a[(q, k)] = a[(q, k)] * phase_c;
                    }
                }

                let theta = (aqq - app) / (two * r);
                let t = if theta.abs() > S::Real::lit(1e150) {
                    (two * theta).recip()
                } else {
                    let t = (theta.abs() + (theta * theta + S::Real::one()).sqrt()).recip();
                    if theta < S::Real::zero() {
                        -t
                    } else {
                        t
                    }
                };
                let c = (t * t + S::Real::one()).sqrt().recip();
                let s = t * c;
                let (cs, ss) = (S::from_real(c), S::from_real(s));

                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = cs * akp - ss * akq;
                    a[(k, q)] = ss * akp + cs * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = cs * apk - ss * aqk;
                    a[(q, k)] = ss * apk + cs * aqk;
                }
                a[(p, q)] = S::zero();
                a[(q, p)] = S::zero();
                a[(p, p)] = S::from_real(app - t * r);
                a[(q, q)] = S::from_real(aqq + t * r);

                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = cs * vkp - ss * vkq;
                    v[(k, q)] = ss * vkp + cs * vkq;
                }
            }
        }
    }
    if !converged && off_diagonal_norm(&a) > eps * scale * S::Real::lit(0.01) {
        return Err(SpectraError::NoConvergence {
            iterations: MAX_SWEEPS,
        });
    }
    Ok(((0..n).map(|i| a[(i, i)].re()).collect(), v))
}

fn off_diagonal_norm<S: HermScalar>(a: &Matrix<S>) -> S::Real {
    let n = a.n();
    let mut sum = S::Real::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum = sum + a[(i, j)].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// Rotates each column so its first non-negligible entry is real and positive.
fn normalize_phases<S: HermScalar>(v: &mut Matrix<S>) {
    let n = v.n();
    let cutoff = S::Real::epsilon().sqrt();
    for j in 0..n {
        let Some(lead) = (0..n).map(|i| v[(i, j)]).find(|x| x.modulus() > cutoff) else {
            continue;
        };
        let phase = lead.conj().scale(lead.modulus().recip());
        for i in 0..n {
            v[(i, j)] = v[(i, j)] * phase;
        }
    }
}

fn residuals<S: HermScalar>(
    h: &Matrix<S>,
    values: &[S::Real],
    v: &Matrix<S>,
) -> (S::Real, S::Real) {
    let n = h.n();
    let mut recon = S::Real::zero();
    let mut ortho = S::Real::zero();
    for i in 0..n {
        for j in 0..n {
            let mut acc = S::zero();
            let mut gram = S::zero();
            for k in 0..n {
                acc = acc + (v[(i, k)] * v[(j, k)].conj()).scale(values[k]);
                gram = gram + v[(k, i)].conj() * v[(k, j)];
            }
            recon = recon.max((h[(i, j)] - acc).modulus());
            let target = if i == j { S::one() } else { S::zero() };
            ortho = ortho.max((gram - target).modulus());
        }
    }
    (recon, ortho)
}
