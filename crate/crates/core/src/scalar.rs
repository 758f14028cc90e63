//! Numeric traits the spectral and arithmetic code is generic over.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, PrimInt, Signed, ToPrimitive};

/// Floating-point scalar used for spectral computations: `f32` or `f64`.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("f64 is representable")
    }

    fn of_usize(v: usize) -> Self {
        Self::from_usize(v).expect("usize is representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Exact signed integer used for threshold arithmetic.
pub trait Exact: PrimInt + Signed + Debug + Display + Send + Sync + 'static {
    fn of(v: usize) -> Self {
        Self::from(v).expect("value fits the integer type")
    }
}

impl<T> Exact for T where T: PrimInt + Signed + Debug + Display + Send + Sync + 'static {}

/// Binomial coefficient C(a, 2), zero for a < 2.
pub fn choose2<I: Exact>(a: I) -> I {
    if a < I::from(2).unwrap() {
        I::zero()
    } else {
        a * (a - I::one()) / I::from(2).unwrap()
    }
}
