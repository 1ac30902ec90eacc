//! Scalar trait bundles for the generic polynomial/matrix layer.

use num_traits::{One, Signed, Zero};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Commutative-ring scalar: what matrix and Laurent arithmetic needs.
pub trait RingScalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> RingScalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = Self>
        + Add<Output = Self>
        + Sub<Output = Self>
        + Mul<Output = Self>
{
}

/// Field scalar: adds exact division.
pub trait Scalar: RingScalar + Div<Output = Self> {}

impl<T> Scalar for T where T: RingScalar + Div<Output = Self> {}

/// Ordered field scalar: what sign-based root counting needs.
/// Satisfied by `BigRational` and by the primitive floats.
pub trait OrderedScalar: Scalar + Signed + PartialOrd {}

impl<T> OrderedScalar for T where T: Scalar + Signed + PartialOrd {}

/// Exact division in an integral domain; `None` when not divisible.
pub trait DivExact: Sized {
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
}
