use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::scalar::{add, mul, sub, ExactInt, Overflow};

use super::ExactError;

/// Dense square matrix over an exact integer ring, stored row-major.
///
/// Graph matrices built by [`crate::graph::build_matrix`] are symmetric, but
/// the type itself accepts any square matrix so that characteristic
/// polynomials of non-symmetric inputs can be computed too.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T: ExactInt> SquareMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![T::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, ExactError> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(ExactError::NotSquare {
                rows: n,
                cols: bad.len(),
            });
        }
        Ok(Self {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows<const N: usize>(rows: [[i64; N]; N]) -> Self {
        Self::from_fn(N, |i, j| T::from_i64(rows[i][j]))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.n).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> SquareMatrix<U> {
        SquareMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub(crate) fn try_map<U>(&self, f: impl FnMut(&T) -> Option<U>) -> Option<SquareMatrix<U>> {
        Some(SquareMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect::<Option<Vec<_>>>()?,
        })
    }

    pub(crate) fn checked_mul(&self, other: &Self) -> Result<Self, Overflow> {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let prod = mul(a, other.get(k, j))?;
                    let idx = i * n + j;
                    out.entries[idx] = add(&out.entries[idx], &prod)?;
                }
            }
        }
        Ok(out)
    }

    pub(crate) fn checked_add(&self, other: &Self) -> Result<Self, Overflow> {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| add(a, b))
            .collect::<Result<_, _>>()?;
        Ok(Self { n: self.n, entries })
    }

    pub(crate) fn checked_sub(&self, other: &Self) -> Result<Self, Overflow> {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| sub(a, b))
            .collect::<Result<_, _>>()?;
        Ok(Self { n: self.n, entries })
    }

    /// `self + c·I`.
    pub(crate) fn checked_add_identity(&self, c: &T) -> Result<Self, Overflow> {
        let mut out = self.clone();
        for i in 0..self.n {
            let idx = i * self.n + i;
            out.entries[idx] = add(&out.entries[idx], c)?;
        }
        Ok(out)
    }

    /// Converts every entry to a float, returning `None` if one does not fit.
    pub fn to_f64_rows(&self) -> Option<Vec<Vec<f64>>> {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|v| v.to_bigint().to_f64()).collect())
            .collect()
    }
}

/// Operations that cannot overflow because the ring is unbounded.
impl SquareMatrix<BigInt> {
    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("BigInt does not overflow")
    }

    pub fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("BigInt does not overflow")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("BigInt does not overflow")
    }

    pub fn add_identity(&self, c: &BigInt) -> Self {
        self.checked_add_identity(c)
            .expect("BigInt does not overflow")
    }

    /// Narrows to `i128` when every entry fits.
    pub(crate) fn to_i128(&self) -> Option<SquareMatrix<i128>> {
        self.try_map(|v| v.to_i128())
    }
}

impl<T: fmt::Display> fmt::Debug for SquareMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<T: fmt::Display> fmt::Display for SquareMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.entries[i * self.n + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
