//! Scalar abstraction for the numeric core.
//!
//! Everything in this crate is generic over [`Real`], which is any
//! floating-point type providing the `num-traits` float surface. The
//! accuracy contracts documented throughout the crate are stated for
//! `f64`; `f32` instantiates but is not covered by them.

use num_traits::{Float, FloatConst, FromPrimitive};
use std::fmt::{Debug, Display, LowerExp};
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

/// Floating-point scalar usable by the polynomial and hypergeometric kernels.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Debug
    + Display
    + LowerExp
    + 'static
{
    /// Lossless-enough conversion from an `f64` constant.
    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("constant representable in Real type")
    }

    /// Conversion from a small index.
    #[inline]
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("index representable in Real type")
    }

    /// True when `self` is an exact non-positive integer (a Γ pole).
    #[inline]
    fn is_nonpositive_int(self) -> bool {
        self <= Self::zero() && self.floor() == self
    }
}

impl<T> Real for T where
    T: Float
        + FloatConst
        + FromPrimitive
        + AddAssign
        + SubAssign
        + MulAssign
        + DivAssign
        + Debug
        + Display
        + LowerExp
        + 'static
{
}
