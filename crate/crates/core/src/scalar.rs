//! Number types a curve can be built over.
//!
//! Every algorithm in this crate is generic over [`Scalar`]. Two
//! implementations are provided: [`Rational`] (arbitrary precision, always in
//! lowest terms) for exact identities, and `f64` for rendering and for the
//! irrational standard initializations.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Exact rational number. Denominator is positive and the fraction is reduced.
pub type Rational = BigRational;

/// Relative threshold below which a float determinant counts as zero.
pub const DEFAULT_RELATIVE_TOLERANCE: f64 = 1e-12;

/// Zero test used when a determinant decides between branches.
///
/// Only consulted in float mode; rational arithmetic always tests exactly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub relative: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            relative: DEFAULT_RELATIVE_TOLERANCE,
        }
    }
}

/// A field element usable as a curve coordinate.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// `true` when arithmetic is exact.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(value: i64) -> Self;
    /// `num / den`; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn is_zero(&self) -> bool;
    fn abs(&self) -> Self;
    fn to_f64(&self) -> f64;
    fn is_finite(&self) -> bool;

    /// Whether `self` should be treated as zero next to operands of size
    /// `scale`. Exact types ignore `scale` and `tol`.
    fn is_negligible(&self, scale: f64, tol: Tolerance) -> bool;

    /// An absolute tolerance of size `abs`; zero for exact types.
    fn tolerance(abs: f64) -> Self;

    /// Equality up to an absolute tolerance. Exact types ignore `tol`.
    fn within(&self, other: &Self, tol: &Self) -> bool;
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(value: i64) -> Self {
        value as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
    fn is_negligible(&self, scale: f64, tol: Tolerance) -> bool {
        f64::abs(*self) <= tol.relative * scale
    }
    fn tolerance(abs: f64) -> Self {
        abs
    }
    fn within(&self, other: &Self, tol: &Self) -> bool {
        f64::abs(self - other) <= *tol
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn is_finite(&self) -> bool {
        true
    }
    fn is_negligible(&self, _scale: f64, _tol: Tolerance) -> bool {
        Zero::is_zero(self)
    }
    fn tolerance(_abs: f64) -> Self {
        Zero::zero()
    }
    fn within(&self, other: &Self, _tol: &Self) -> bool {
        self == other
    }
}

/// Shorthand for `Rational::from_ratio`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::from_ratio(num, den)
}
