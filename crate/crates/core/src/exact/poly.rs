use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::scalar::{add, mul, neg, sub, ExactInt, Overflow};

use super::{ExactError, SquareMatrix};

/// Polynomial with exact integer coefficients, `coeffs[d]` multiplying `x^d`.
///
/// The coefficient vector never ends in a zero; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

/// Failure inside a generic polynomial routine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum ArithError {
    Overflow,
    /// A division that was required to be exact left a remainder.
    Inexact,
}

impl From<Overflow> for ArithError {
    fn from(_: Overflow) -> Self {
        ArithError::Overflow
    }
}

impl<T: ExactInt> Poly<T> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![T::zero(), T::one()])
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub(crate) fn try_derivative(&self) -> Result<Self, Overflow> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(d, c)| mul(c, &T::from_i64(d as i64)))
            .collect::<Result<_, _>>()?;
        Ok(Self::from_coeffs(coeffs))
    }

    pub(crate) fn try_eval(&self, x: &T) -> Result<T, Overflow> {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = add(&mul(&acc, x)?, c)?;
        }
        Ok(acc)
    }

    pub(crate) fn try_mul(&self, other: &Self) -> Result<Self, Overflow> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = add(&out[i + j], &mul(a, b)?)?;
            }
        }
        Ok(Self::from_coeffs(out))
    }

    /// Gcd of the coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub(crate) fn try_primitive_part(&self) -> Result<Self, Overflow> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let mut content = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            content = neg(&content)?;
        }
        Ok(Self::from_coeffs(
            self.coeffs.iter().map(|c| c.div_floor(&content)).collect(),
        ))
    }

    /// A nonzero scalar multiple of the remainder of `self` by `divisor`,
    /// computed without division. Only its primitive part is meaningful.
    fn try_sparse_prem(&self, divisor: &Self) -> Result<Self, Overflow> {
        let dd = divisor.degree().expect("nonzero divisor");
        let lc_d = divisor.leading().expect("nonzero divisor");
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let lc_r = r.last().cloned().expect("nonempty");
            for c in r.iter_mut() {
                *c = mul(c, lc_d)?;
            }
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                let idx = k + shift;
                r[idx] = sub(&r[idx], &mul(&lc_r, dc)?)?;
            }
            debug_assert!(r.last().is_some_and(Zero::is_zero));
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            if r.len() > 1 {
                let g = r.iter().fold(T::zero(), |acc, c| acc.gcd(c));
                if !g.is_zero() && !g.is_one() {
                    for c in r.iter_mut() {
                        *c = c.div_floor(&g);
                    }
                }
            }
        }
        Ok(Self::from_coeffs(r))
    }

    /// Exact quotient `self / divisor`; fails if any remainder appears.
    pub(crate) fn try_div_exact(&self, divisor: &Self) -> Result<Self, ArithError> {
        let dd = divisor.degree().ok_or(ArithError::Inexact)?;
        let lc_d = divisor.leading().expect("nonzero");
        let Some(ds) = self.degree() else {
            return Ok(Self::zero());
        };
        if ds < dd {
            return Err(ArithError::Inexact);
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![T::zero(); ds - dd + 1];
        for shift in (0..=ds - dd).rev() {
            let top = r[shift + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (quot, rem) = top.div_rem(lc_d);
            if !rem.is_zero() {
                return Err(ArithError::Inexact);
            }
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                r[k + shift] = sub(&r[k + shift], &mul(&quot, dc)?)?;
            }
            q[shift] = quot;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return Err(ArithError::Inexact);
        }
        Ok(Self::from_coeffs(q))
    }

    /// Primitive gcd over the integers via the primitive polynomial remainder
    /// sequence. The result has positive leading coefficient; its content is 1.
    pub(crate) fn try_gcd(&self, other: &Self) -> Result<Self, ArithError> {
        let (mut a, mut b) = match (self.is_zero(), other.is_zero()) {
            (true, true) => return Err(ArithError::Inexact),
            (false, true) => return Ok(self.try_primitive_part()?),
            (true, false) => return Ok(other.try_primitive_part()?),
            (false, false) => (self.try_primitive_part()?, other.try_primitive_part()?),
        };
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.degree() == Some(0) {
                return Ok(Self::one());
            }
            let r = a.try_sparse_prem(&b)?;
            if r.is_zero() {
                return Ok(b);
            }
            a = b;
            b = r.try_primitive_part()?;
        }
    }

    pub(crate) fn try_map<U: ExactInt>(&self, f: impl FnMut(&T) -> Option<U>) -> Option<Poly<U>> {
        Some(Poly::from_coeffs(
            self.coeffs.iter().map(f).collect::<Option<Vec<_>>>()?,
        ))
    }

    pub fn to_bigint(&self) -> Poly<BigInt> {
        Poly::from_coeffs(self.coeffs.iter().map(ExactInt::to_bigint).collect())
    }
}

impl Poly<BigInt> {
    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        self.try_derivative().expect("BigInt does not overflow")
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.try_eval(x).expect("BigInt does not overflow")
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("BigInt does not overflow")
    }

    pub fn primitive_part(&self) -> Self {
        self.try_primitive_part().expect("BigInt does not overflow")
    }

    /// Exact division; errors if `divisor` does not divide `self` over the integers.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, ExactError> {
        self.try_div_exact(divisor)
            .map_err(|_| ExactError::NotDivisible)
    }

    /// `(x - r)` for an integer root `r`.
    pub fn linear(root: i64) -> Self {
        Self::from_i64(&[-root, 1])
    }

    /// Evaluates at a float point (Horner in `f64`).
    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Largest coefficient magnitude as a float.
    pub fn max_abs_coeff_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .fold(0.0, f64::max)
    }
}

/// Formal derivative of `p`.
pub fn poly_derivative(p: &Poly<BigInt>) -> Poly<BigInt> {
    p.derivative()
}

/// Primitive gcd of two integer polynomials, positive leading coefficient.
pub fn poly_gcd(p: &Poly<BigInt>, q: &Poly<BigInt>) -> Result<Poly<BigInt>, ExactError> {
    if p.is_zero() && q.is_zero() {
        return Err(ExactError::BothZero);
    }
    if let (Some(p64), Some(q64)) = (
        p.try_map(ExactInt::try_from_bigint),
        q.try_map(ExactInt::try_from_bigint),
    ) {
        if let Ok(g) = Poly::<i128>::try_gcd(&p64, &q64) {
            return Ok(g.to_bigint());
        }
    }
    Ok(p.try_gcd(q)
        .expect("BigInt gcd cannot fail for nonzero input"))
}

/// Horner evaluation `p(M)` in exact arithmetic.
pub fn eval_poly_matrix_exact(p: &Poly<BigInt>, m: &SquareMatrix<BigInt>) -> SquareMatrix<BigInt> {
    let mut acc = SquareMatrix::zeros(m.n());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(m).add_identity(c);
    }
    acc
}

impl<T: ExactInt> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_mag = d == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match d {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{d}")?,
            }
        }
        Ok(())
    }
}

impl<T: ExactInt> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
