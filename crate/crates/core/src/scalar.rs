//! Scalar abstraction for coefficients of Hecke elements and matrix entries.
//!
//! Everything above this module is written against [`Scalar`]. The exact
//! instantiation used for certification is `Complex<BigRational>`; floating
//! point instantiations exist for the norm estimator and for experimentation.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::{BigRational, Ratio, Rational64};
use num_traits::{Num, One, ToPrimitive, Zero};

/// A real coefficient type: the component type of a complex [`Scalar`].
pub trait Real:
    Clone
    + Num
    + Debug
    + PartialEq
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
    /// Exact types return the quotient; float types round.
    fn from_ratio(num: i64, den: i64) -> Self;
    fn to_f64(&self) -> f64;
    /// Equality used by the verification harness. Exact types use `==`.
    fn tolerant_eq(&self, other: &Self) -> bool {
        self == other
    }
}

/// Coefficient field of the Hecke algebra.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
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
    fn conj(&self) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    /// `Some(i)` for complex types, `None` for real ones.
    fn imaginary_unit() -> Option<Self>;
    fn to_c64(&self) -> Complex<f64>;
    fn tolerant_eq(&self, other: &Self) -> bool {
        self == other
    }
}

const FLOAT_EQ_TOL: f64 = 1e-9;

fn float_close(a: f64, b: f64) -> bool {
    (a - b).abs() <= FLOAT_EQ_TOL * a.abs().max(b.abs()).max(1.0)
}

impl Real for f64 {
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn tolerant_eq(&self, other: &Self) -> bool {
        float_close(*self, *other)
    }
}

impl Real for f32 {
    fn from_ratio(num: i64, den: i64) -> Self {
        (num as f64 / den as f64) as f32
    }
    fn to_f64(&self) -> f64 {
        *self as f64
    }
    fn tolerant_eq(&self, other: &Self) -> bool {
        (self - other).abs() <= 1e-4 * self.abs().max(other.abs()).max(1.0)
    }
}

impl Real for BigRational {
    fn from_ratio(num: i64, den: i64) -> Self {
        Ratio::new(BigInt::from(num), BigInt::from(den))
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Real for Rational64 {
    fn from_ratio(num: i64, den: i64) -> Self {
        Ratio::new(num, den)
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl<R: Real> Scalar for Complex<R> {
    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(R::from_ratio(num, den), R::zero())
    }
    fn imaginary_unit() -> Option<Self> {
        Some(Complex::new(R::zero(), R::one()))
    }
    fn to_c64(&self) -> Complex<f64> {
        Complex::new(self.re.to_f64(), self.im.to_f64())
    }
    fn tolerant_eq(&self, other: &Self) -> bool {
        self.re.tolerant_eq(&other.re) && self.im.tolerant_eq(&other.im)
    }
}

macro_rules! real_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn conj(&self) -> Self {
                self.clone()
            }
            fn from_ratio(num: i64, den: i64) -> Self {
                <$t as Real>::from_ratio(num, den)
            }
            fn imaginary_unit() -> Option<Self> {
                None
            }
            fn to_c64(&self) -> Complex<f64> {
                Complex::new(Real::to_f64(self), 0.0)
            }
            fn tolerant_eq(&self, other: &Self) -> bool {
                Real::tolerant_eq(self, other)
            }
        }
    )*};
}

real_scalar!(f64, f32, BigRational, Rational64);

/// Builds `re + i*im` from two rationals, dropping `im` for real scalar types.
pub fn from_parts<S: Scalar>(re: (i64, i64), im: (i64, i64)) -> S {
    let real = S::from_ratio(re.0, re.1);
    match S::imaginary_unit() {
        Some(i) if im.0 != 0 => real + i * S::from_ratio(im.0, im.1),
        _ => real,
    }
}

/// Multiplies by a non-negative integer, via repeated doubling.
pub fn scale_by_count<S: Scalar>(value: &S, count: usize) -> S {
    let mut acc = S::zero();
    let mut base = value.clone();
    let mut n = count;
    while n > 0 {
        if n & 1 == 1 {
            acc = acc + base.clone();
        }
        base = base.clone() + base;
        n >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::QComplex;

    #[test]
    fn conjugate_flips_imaginary_part() {
        let z: QComplex = from_parts((2, 1), (3, 1));
        assert_eq!(z.conj(), from_parts((2, 1), (-3, 1)));
        assert_eq!(z.conj().conj(), z);
    }

    #[test]
    fn real_types_drop_imaginary_part() {
        let x: BigRational = from_parts((1, 2), (5, 3));
        assert_eq!(x, <BigRational as Real>::from_ratio(1, 2));
        assert!(<f64 as Scalar>::imaginary_unit().is_none());
    }

    #[test]
    fn scale_by_count_matches_repeated_addition() {
        let z: QComplex = from_parts((-7, 3), (1, 2));
        for n in 0..20 {
            let mut acc = QComplex::zero();
            for _ in 0..n {
                acc = acc + z.clone();
            }
            assert_eq!(scale_by_count(&z, n), acc);
        }
    }

    #[test]
    fn float_tolerance() {
        assert!(Scalar::tolerant_eq(&0.1_f64, &(0.3 - 0.2)));
        assert!(!Scalar::tolerant_eq(&0.1_f64, &0.1001));
    }
}
