use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::Rational;

/// Exact field scalar shared by the polynomial and matrix code.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Multiplicative inverse. Panics on zero.
    fn recip(&self) -> Self;
    fn from_rational(r: Rational) -> Self;
}

/// Scalars embedded in the reals with a decidable sign.
pub trait OrderedScalar: Scalar {
    fn signum_exact(&self) -> i8;
    /// A rational upper bound for the absolute value.
    fn abs_bound(&self) -> Rational;
}

impl Scalar for Rational {
    fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        num_rational::Ratio::recip(self)
    }

    fn from_rational(r: Rational) -> Self {
        r
    }
}

impl OrderedScalar for Rational {
    fn signum_exact(&self) -> i8 {
        if self.is_zero() {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }

    fn abs_bound(&self) -> Rational {
        self.abs()
    }
}
