//! Coefficient rings accepted by the algebra engine.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};

use crate::scalars::{Coefficient, GaussianRational};

/// A commutative ring with an optional conjugation.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_i64(n: i64) -> Self;

    /// Complex conjugation; the identity on real rings.
    fn conj(&self) -> Self {
        self.clone()
    }

    /// True for constants known to be strictly negative.
    fn is_negative_constant(&self) -> bool {
        false
    }
}

/// A scalar ring in which nonzero elements can be divided.
pub trait Field: Scalar + Div<Output = Self> {
    fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_i64(n) / Self::from_i64(d)
    }
}

impl Scalar for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn is_negative_constant(&self) -> bool {
        *self < 0.0
    }
}
impl Field for f64 {}

impl Scalar for f32 {
    fn from_i64(n: i64) -> Self {
        n as f32
    }
    fn is_negative_constant(&self) -> bool {
        *self < 0.0
    }
}
impl Field for f32 {}

impl Scalar for Complex64 {
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn is_negative_constant(&self) -> bool {
        self.im == 0.0 && self.re < 0.0
    }
}
impl Field for Complex64 {}

impl Scalar for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_negative_constant(&self) -> bool {
        *self < BigRational::zero()
    }
}
impl Field for BigRational {}

impl Scalar for Rational64 {
    fn from_i64(n: i64) -> Self {
        Rational64::from_integer(n)
    }
    fn is_negative_constant(&self) -> bool {
        *self < Rational64::zero()
    }
}
impl Field for Rational64 {}

impl Scalar for GaussianRational {
    fn from_i64(n: i64) -> Self {
        GaussianRational::from_integer(n)
    }
    fn conj(&self) -> Self {
        GaussianRational::conj(self)
    }
    fn is_negative_constant(&self) -> bool {
        self.is_real() && self.re < BigRational::zero()
    }
}
impl Field for GaussianRational {}

impl Scalar for Coefficient {
    fn from_i64(n: i64) -> Self {
        Coefficient::integer(n)
    }
    fn conj(&self) -> Self {
        Coefficient::conj(self)
    }
    fn is_negative_constant(&self) -> bool {
        Coefficient::is_negative_constant(self)
    }
}
impl Field for Coefficient {
    fn from_ratio(n: i64, d: i64) -> Self {
        Coefficient::rational(n, d)
    }
}
