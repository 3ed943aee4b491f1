//! Scalar traits shared by the floating-point and exact pipelines.
//!
//! The float side is generic over [`Real`] (`f32`/`f64`) and over
//! [`HermScalar`], which covers both real entries and complex entries built
//! on a real type. The exact side is generic over [`ExactInt`], implemented
//! for machine integers (used as an overflow-checked fast path) and for
//! `BigInt` (which never overflows).

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::Neg;

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_traits::{
    CheckedAdd, CheckedMul, CheckedSub, Float, FromPrimitive, NumOps, One, Signed, ToPrimitive,
    Zero,
};

/// Floating point: f32 or f64.
pub trait Real:
    Float
    + FromPrimitive
    + ToPrimitive
    + Debug
    + Display
    + Default
    + Sum
    + HermScalar<Real = Self>
    + Send
    + Sync
    + 'static
{
    /// Lossy conversion from an `f64` literal.
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Entry type of a Hermitian matrix: a real number or a complex number over one.
pub trait HermScalar:
    Copy + Debug + PartialEq + NumOps + Neg<Output = Self> + Zero + One + Send + Sync + 'static
{
    type Real: Real;

    /// True when the type carries no imaginary part.
    const IS_REAL: bool;

    fn conj(self) -> Self;
    fn re(self) -> Self::Real;
    fn im(self) -> Self::Real;
    fn modulus(self) -> Self::Real;
    fn from_real(r: Self::Real) -> Self;

    fn norm_sqr(self) -> Self::Real {
        let m = self.modulus();
        m * m
    }

    fn scale(self, r: Self::Real) -> Self {
        self * Self::from_real(r)
    }

    fn is_finite(self) -> bool {
        Float::is_finite(self.re()) && Float::is_finite(self.im())
    }
}

macro_rules! impl_real_scalar {
    ($($t:ty)*) => ($(
        impl HermScalar for $t {
            type Real = $t;
            const IS_REAL: bool = true;
            fn conj(self) -> Self { self }
            fn re(self) -> Self::Real { self }
            fn im(self) -> Self::Real { 0.0 }
            fn modulus(self) -> Self::Real { self.abs() }
            fn from_real(r: Self::Real) -> Self { r }
            fn norm_sqr(self) -> Self::Real { self * self }
        }

        impl HermScalar for Complex<$t> {
            type Real = $t;
            const IS_REAL: bool = false;
            fn conj(self) -> Self { Complex::conj(&self) }
            fn re(self) -> Self::Real { self.re }
            fn im(self) -> Self::Real { self.im }
            fn modulus(self) -> Self::Real { self.norm() }
            fn from_real(r: Self::Real) -> Self { Complex::new(r, 0.0) }
            fn norm_sqr(self) -> Self::Real { Complex::norm_sqr(&self) }
        }
    )*)
}

impl_real_scalar!(f32 f64);

/// Integer ring used by the exact pipeline. Arithmetic goes through the
/// checked operations so that fixed-width types report overflow instead of
/// wrapping.
pub trait ExactInt:
    Clone + Debug + Display + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul + Send + Sync
{
    fn from_i64(v: i64) -> Self;
    fn to_bigint(&self) -> BigInt;
    fn try_from_bigint(v: &BigInt) -> Option<Self>;
}

impl ExactInt for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn try_from_bigint(v: &BigInt) -> Option<Self> {
        v.to_i64()
    }
}

impl ExactInt for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn try_from_bigint(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
}

impl ExactInt for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
    fn try_from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
}

/// Marker for a fixed-width integer type running out of room.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

pub(crate) fn add<T: ExactInt>(a: &T, b: &T) -> Result<T, Overflow> {
    a.checked_add(b).ok_or(Overflow)
}

pub(crate) fn sub<T: ExactInt>(a: &T, b: &T) -> Result<T, Overflow> {
    a.checked_sub(b).ok_or(Overflow)
}

pub(crate) fn mul<T: ExactInt>(a: &T, b: &T) -> Result<T, Overflow> {
    a.checked_mul(b).ok_or(Overflow)
}

pub(crate) fn neg<T: ExactInt>(a: &T) -> Result<T, Overflow> {
    T::zero().checked_sub(a).ok_or(Overflow)
}
