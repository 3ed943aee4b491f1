use std::ops::{Index, IndexMut};

use num_traits::{Float, Zero};

use crate::scalar::{HermScalar, Real};

use super::SpectraError;

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<S> {
    n: usize,
    data: Vec<S>,
}

impl<S: HermScalar> Matrix<S> {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![S::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn from_rows(rows: &[Vec<S>]) -> Result<Self, SpectraError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(SpectraError::NotSquare);
        }
        Ok(Self::from_fn(n, |i, j| rows[i][j]))
    }

    pub fn diagonal(values: &[S::Real]) -> Self {
        Self::from_fn(values.len(), |i, j| {
            if i == j {
                S::from_real(values[i])
            } else {
                S::zero()
            }
        })
    }

    /// Outer product `c · x x*`.
    pub fn outer(x: &[S], c: S::Real) -> Self {
        Self::from_fn(x.len(), |i, j| (x[i] * x[j].conj()).scale(c))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[S] {
        &self.data
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == S::zero() {
                    continue;
                }
                let row = &other.data[k * n..(k + 1) * n];
                let dst = &mut out.data[i * n..(i + 1) * n];
                for (d, &b) in dst.iter_mut().zip(row) {
                    *d = *d + a * b;
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        Self {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }

    pub fn matvec(&self, x: &[S]) -> Vec<S> {
        (0..self.n)
            .map(|i| {
                self.data[i * self.n..(i + 1) * self.n]
                    .iter()
                    .zip(x)
                    .fold(S::zero(), |acc, (&a, &b)| acc + a * b)
            })
            .collect()
    }

    /// `self - shift·I`.
    pub fn shifted(&self, shift: S::Real) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            out[(i, i)] = out[(i, i)] - S::from_real(shift);
        }
        out
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn trace(&self) -> S {
        (0..self.n).fold(S::zero(), |acc, i| acc + self[(i, i)])
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> S::Real {
        self.data
            .iter()
            .map(|v| v.modulus())
            .fold(S::Real::zero(), |a, b| a.max(b))
    }

    pub fn frobenius(&self) -> S::Real {
        self.data
            .iter()
            .map(|v| v.norm_sqr())
            .fold(S::Real::zero(), |a, b| a + b)
            .sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.n).map(|i| self[(i, j)]).collect()
    }

    pub fn is_hermitian(&self) -> bool {
        (0..self.n).all(|i| {
            self[(i, i)].im() == S::Real::zero()
                && (0..i).all(|j| self[(i, j)] == self[(j, i)].conj())
        })
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.n + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.n + j]
    }
}

/// A matrix known to equal its conjugate transpose exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct Hermitian<S> {
    inner: Matrix<S>,
}

impl<S: HermScalar> Hermitian<S> {
    /// Accepts `m` only if it is exactly Hermitian.
    pub fn new(m: Matrix<S>) -> Result<Self, SpectraError> {
        if !m.is_finite() {
            return Err(SpectraError::NonFinite);
        }
        if !m.is_hermitian() {
            return Err(SpectraError::NotHermitian);
        }
        Ok(Self { inner: m })
    }

    /// `(m + m*) / 2`, which is exactly Hermitian by construction.
    pub fn symmetrized(m: &Matrix<S>) -> Self {
        let half = S::Real::lit(0.5);
        let mut out = Matrix::zeros(m.n());
        for i in 0..m.n() {
            out[(i, i)] = S::from_real(m[(i, i)].re());
            for j in i + 1..m.n() {
                let v = (m[(i, j)] + m[(j, i)].conj()).scale(half);
                out[(i, j)] = v;
                out[(j, i)] = v.conj();
            }
        }
        Self { inner: out }
    }

    pub fn from_rows(rows: &[Vec<S>]) -> Result<Self, SpectraError> {
        Self::new(Matrix::from_rows(rows)?)
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            inner: Matrix::zeros(n),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            inner: Matrix::identity(n),
        }
    }

    pub fn diagonal(values: &[S::Real]) -> Self {
        Self {
            inner: Matrix::diagonal(values),
        }
    }

    pub fn n(&self) -> usize {
        self.inner.n()
    }

    pub fn as_matrix(&self) -> &Matrix<S> {
        &self.inner
    }

    pub fn into_matrix(self) -> Matrix<S> {
        self.inner
    }

    /// `self - shift·I`, still Hermitian since the shift is real.
    pub fn shifted(&self, shift: S::Real) -> Self {
        Self {
            inner: self.inner.shifted(shift),
        }
    }

    pub fn max_abs(&self) -> S::Real {
        self.inner.max_abs()
    }
}

impl<S> Index<(usize, usize)> for Hermitian<S> {
    type Output = S;
    fn index(&self, idx: (usize, usize)) -> &S {
        &self.inner[idx]
    }
}

/// Max-norm distance between two vectors.
pub fn max_abs_diff<S: HermScalar>(a: &[S], b: &[S]) -> S::Real {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| (x - y).modulus())
        .fold(S::Real::zero(), |m, v| m.max(v))
}

pub fn norm2<S: HermScalar>(x: &[S]) -> S::Real {
    x.iter()
        .map(|v| v.norm_sqr())
        .fold(S::Real::zero(), |a, b| a + b)
        .sqrt()
}

/// `x* y`.
pub fn dot<S: HermScalar>(x: &[S], y: &[S]) -> S {
    x.iter()
        .zip(y)
        .fold(S::zero(), |acc, (&a, &b)| acc + a.conj() * b)
}
