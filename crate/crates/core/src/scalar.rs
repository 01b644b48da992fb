//! Scalar abstraction for the numeric core.
//!
//! The network, optimizers and agent are generic over [`Scalar`] so the same
//! code runs in `f32` or `f64`. The routing environment and all shipped
//! binaries use [`crate::Real`] (`f64`): the quasi-Newton curvature tests
//! compare tiny inner products and are noise-sensitive in single precision.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssignOps};

/// Floating-point scalar usable by the numeric core.
pub trait Scalar:
    Float + FromPrimitive + NumAssignOps + Sum<Self> + Debug + Display + Send + Sync + 'static
{
    /// Lossy conversion from `f64` (exact for `f64` itself).
    fn from_f64(v: f64) -> Self {
        <Self as FromPrimitive>::from_f64(v).expect("finite f64 converts to any Scalar")
    }

    /// Widening conversion to `f64`.
    fn to_f64(self) -> f64;
}

impl Scalar for f32 {
    fn to_f64(self) -> f64 {
        self as f64
    }
}

impl Scalar for f64 {
    fn to_f64(self) -> f64 {
        self
    }
}

/// Euclidean norm of a slice.
pub fn norm2<T: Scalar>(v: &[T]) -> T {
    v.iter().map(|&x| x * x).sum::<T>().sqrt()
}

/// Dot product of two equal-length slices.
pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

/// `out += c * v`.
pub fn axpy<T: Scalar>(out: &mut [T], c: T, v: &[T]) {
    debug_assert_eq!(out.len(), v.len());
    for (o, &x) in out.iter_mut().zip(v) {
        *o = x.mul_add(c, *o);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn helpers_match_hand_arithmetic() {
        let a = [3.0f64, 4.0];
        assert_eq!(norm2(&a), 5.0);
        assert_eq!(dot(&a, &[2.0, 0.5]), 8.0);
        let mut out = [1.0f64, 1.0];
        axpy(&mut out, 2.0, &a);
        assert_eq!(out, [7.0, 9.0]);
    }

    #[test]
    fn generic_over_f32_and_f64() {
        fn n<T: Scalar>(v: &[T]) -> f64 {
            norm2(v).to_f64()
        }
        assert!((n(&[3.0f32, 4.0]) - 5.0).abs() < 1e-6);
        assert_eq!(n(&[3.0f64, 4.0]), 5.0);
    }
}
