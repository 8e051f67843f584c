//! Scalar abstraction shared by the lifting and linear-programming code.
//!
//! Heights of a lifting are either floating point (fast, tolerance-based
//! comparisons) or exact rationals (slower, tie decisions are exact). The
//! trait carries the handful of operations both need; `tie_tol` is the
//! relative comparison slack and is zero for exact types.

use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};
use std::fmt::Debug;

pub trait Scalar:
    Num + Signed + Clone + PartialOrd + FromPrimitive + ToPrimitive + Debug + Send + Sync
{
    /// Relative slack used when comparing nearly-equal values. Zero for
    /// exact types, so ties are decided exactly there.
    fn tie_tol() -> Self;

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer does not fit in scalar type")
    }

    fn as_f64(&self) -> f64 {
        self.to_f64().expect("scalar has no f64 image")
    }
}

impl Scalar for f64 {
    fn tie_tol() -> Self {
        1e-9
    }
}

impl Scalar for f32 {
    fn tie_tol() -> Self {
        1e-5
    }
}

impl Scalar for BigRational {
    fn tie_tol() -> Self {
        num_traits::Zero::zero()
    }
}

/// Absolute slack for comparisons around a value of the given magnitude.
pub fn comparison_slack<S: Scalar>(magnitude: &S) -> S {
    S::tie_tol() * (S::one() + magnitude.abs())
}
